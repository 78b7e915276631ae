#include "chs/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chs/error.hpp"
#include "chs/kernels.hpp"

namespace chs {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double t, double period) {
  double w = std::fmod(t, period);
  if (w < 0.0) w += period;
  if (w >= period) w -= period;
  return w;
}

double circular_gap(double a, double b, double period) {
  const double g = std::abs(wrap(a - b, period));
  return std::min(g, period - g);
}

// Sorted, deduplicated parameter list on a circle of length `period`.
std::vector<double> dedup_parameters(std::vector<double> ts, double period, double radius) {
  for (double& t : ts) t = wrap(t, period);
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts)
    if (out.empty() || t - out.back() > radius) out.push_back(t);
  if (out.size() > 1 && period - out.back() + out.front() <= radius) out.pop_back();
  return out;
}

// Center of the congruence circle through alpha(t), projected to z = 0.
Vec2 circle_center(const SurfaceSpec& spec, double t) {
  const Vec3 a = curve_point(spec.curve, spec.placement, t);
  const double rho2 = a.x * a.x + a.y * a.y;
  const double s = a.x * a.x + a.y * a.y + a.z * a.z - spec.congruence.q_value();
  const double f = s / (2.0 * rho2);
  return {f * a.x, f * a.y};
}

double pierce_angle(const Placement& pl) {
  // Direction from the pole towards the axis, reduced mod pi.
  return wrap(std::atan2(-to_double(pl.cy), -to_double(pl.cx)), kPi);
}

} // namespace

std::string ClassifiedSurface::label() const {
  return std::to_string(static_cast<int>(type.kind)) + std::string(1, variant);
}

double radicand(const SurfaceSpec& spec, double t) {
  const Vec3 a = curve_point(spec.curve, spec.placement, t);
  const double q = spec.congruence.q_value();
  const double rho2 = a.x * a.x + a.y * a.y;
  const double s = rho2 + a.z * a.z - q;
  return 4.0 * q * rho2 + s * s;
}

Vec3 circle_point(double q, Vec3 a, double theta) {
  const double rho2 = a.x * a.x + a.y * a.y;
  const double rho = std::sqrt(rho2);
  if (rho <= SurfaceTolerances::axis) throw DomainError("curve point lies on the z axis; circle undefined");
  const double s = rho2 + a.z * a.z - q;
  const double scale = rho2 + a.z * a.z + std::abs(q);
  double r = 4.0 * q * rho2 + s * s;
  if (std::abs(r) <= 1e-12 * scale * scale) r = 0.0;
  const double root = std::sqrt(std::max(r, 0.0));
  const double f = (root * std::cos(theta) + s) / (2.0 * rho2);
  // sqrt(q + s^2 / (4 rho^2)) == sqrt(R) / (2 rho), without the cancellation for q < 0.
  return {a.x * f, a.y * f, root / (2.0 * rho) * std::sin(theta)};
}

Vec3 parametric_point(const SurfaceSpec& spec, double t, double theta) {
  return circle_point(spec.congruence.q_value(), curve_point(spec.curve, spec.placement, t), theta);
}

IncidenceType incidence_type(const SurfaceSpec& spec, double tol) {
  spec.validate();
  if (tol <= 0.0) throw DomainError("tolerance must be positive");
  const Placement& pl = spec.placement;
  const Rational& q = spec.congruence.q;
  if (pl.pole_on_axis())
    return {pl.height * pl.height == q ? IncidenceKind::Type1 : IncidenceKind::Type2, 0};

  // Any parameter reaching the axis points along +-(direction to the axis),
  // so only phi = psi + k pi can solve it; one period holds period/pi of them.
  const double psi = pierce_angle(pl);
  const int candidates = static_cast<int>(std::lround(spec.curve.period() / kPi));
  int j = 0;
  for (int k = 0; k < candidates; ++k) {
    const double dist = curve_point(spec.curve, pl, psi + k * kPi).norm_xy();
    if (dist <= tol)
      ++j;
    else if (dist <= 1e3 * tol)
      throw DomainError("ambiguous axis incidence: curve passes within " + std::to_string(dist) + " of the axis");
  }
  if (j == 0) return {IncidenceKind::Type5, 0};
  const bool at_directing_point = sgn(q) >= 0 && pl.height * pl.height == q;
  return {at_directing_point ? IncidenceKind::Type3 : IncidenceKind::Type4, j};
}

SurfaceClassification classification_from_counts(int m, int a_abs, int z_axis, int p1, int p2) {
  if (m < 0 || a_abs < 0 || z_axis < 0 || p1 < 0 || p2 < 0) throw DomainError("negative incidence count");
  if (m == 0) throw DomainError("degenerate counts: curve order m = 0");
  SurfaceClassification c;
  c.order = 3 * m - (z_axis + 2 * a_abs + 2 * p1 + 2 * p2);
  c.absolute_conic_multiplicity = m - (z_axis + p1 + p2);
  c.axis_multiplicity = m - 2 * a_abs + z_axis;
  c.directing_point_multiplicity = 2 * m - (2 * a_abs + p1 + p2);
  if (c.order <= 0 || c.directing_point_multiplicity <= 0 || c.absolute_conic_multiplicity < 0 ||
      c.axis_multiplicity < 0)
    throw DomainError("inconsistent incidence counts");
  return c;
}

SurfaceClassification table2_closed_form(IncidenceType type, bool odd_rose, int n, int d) {
  const bool below = d <= n;
  const int j = type.j;
  const int s = n + d;
  switch (type.kind) {
    case IncidenceKind::Type1:
      if (odd_rose) return below ? SurfaceClassification{s, d, n - d, n} : SurfaceClassification{2 * d, d, 0, d};
      return below ? SurfaceClassification{2 * s, 2 * d, 2 * (n - d), 2 * n}
                   : SurfaceClassification{4 * d, 2 * d, 0, 2 * d};
    case IncidenceKind::Type2:
      if (odd_rose)
        return below ? SurfaceClassification{2 * n + d, d, 2 * n - d, 2 * n} : SurfaceClassification{n + 2 * d, d, n, s};
      return below ? SurfaceClassification{2 * (2 * n + d), 2 * d, 2 * (2 * n - d), 4 * n}
                   : SurfaceClassification{2 * (n + 2 * d), 2 * d, 2 * n, 2 * s};
    case IncidenceKind::Type3:
      if (odd_rose)
        return below ? SurfaceClassification{3 * n + d - 2 * j, s - j, n - d, 2 * n - j}
                     : SurfaceClassification{2 * s - 2 * j, s - j, 0, s - j};
      return below ? SurfaceClassification{2 * (3 * n + d) - 2 * j, 2 * s - j, 2 * (n - d), 4 * n - j}
                   : SurfaceClassification{4 * s - 2 * j, 2 * s - j, 0, 2 * s - j};
    case IncidenceKind::Type4:
      if (odd_rose)
        return below ? SurfaceClassification{3 * n + d - j, s - j, n - d + j, 2 * n}
                     : SurfaceClassification{2 * s - j, s - j, j, s};
      return below ? SurfaceClassification{2 * (3 * n + d) - j, 2 * s - j, 2 * (n - d) + j, 4 * n}
                   : SurfaceClassification{4 * s - j, 2 * s - j, j, 2 * s};
    case IncidenceKind::Type5:
      if (odd_rose) return below ? SurfaceClassification{3 * n + d, s, n - d, 2 * n} : SurfaceClassification{2 * s, s, 0, s};
      return below ? SurfaceClassification{2 * (3 * n + d), 2 * s, 2 * (n - d), 4 * n}
                   : SurfaceClassification{4 * s, 2 * s, 0, 2 * s};
  }
  throw std::logic_error("unknown incidence type");
}

IncidenceCounts incidence_counts(const CurveSpec& curve, IncidenceType type) {
  const CurveProperties props = table1_properties(curve);
  IncidenceCounts c;
  c.m = props.order;
  c.a_abs = props.absolute_multiplicity;
  switch (type.kind) {
    case IncidenceKind::Type1: c.p1 = props.origin_multiplicity; break;
    case IncidenceKind::Type2: c.z_axis = props.origin_multiplicity; break;
    case IncidenceKind::Type3: c.p1 = type.j; break;
    case IncidenceKind::Type4: c.z_axis = type.j; break;
    case IncidenceKind::Type5: break;
  }
  return c;
}

ClassifiedSurface classify(const SurfaceSpec& spec) {
  ClassifiedSurface out;
  out.type = incidence_type(spec);
  out.variant = spec.curve.is_odd_rose() ? 'A' : 'B';
  const IncidenceCounts c = incidence_counts(spec.curve, out.type);
  out.values = classification_from_counts(c.m, c.a_abs, c.z_axis, c.p1, c.p2);
  const SurfaceClassification table = table2_closed_form(out.type, spec.curve.is_odd_rose(), spec.curve.n, spec.curve.d);
  if (!(table == out.values)) throw std::logic_error("classification paths disagree for type " + out.label());
  return out;
}

std::vector<SingularCircle> singular_circles(const SurfaceSpec& spec, int samples, double tol) {
  spec.validate();
  if (samples < 16) throw DomainError("singular_circles needs at least 16 samples");
  const double period = spec.curve.period();
  const double q = spec.congruence.q_value();
  const Placement& pl = spec.placement;
  const double extent = std::hypot(to_double(pl.cx), to_double(pl.cy)) + std::abs(to_double(pl.height)) + 1.0 +
                        to_double(spec.curve.a) + std::sqrt(std::abs(q));
  const double blowup = 1e4 * extent;

  std::vector<double> ts(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) ts[static_cast<std::size_t>(i)] = period * i / samples;

  std::vector<Vec2> centers(ts.size());
  std::vector<std::uint8_t> valid(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Vec3 a = curve_point(spec.curve, pl, ts[i]);
    valid[i] = a.norm_xy() > 1e-6 * extent;
    if (valid[i]) {
      centers[i] = circle_center(spec, ts[i]);
      valid[i] = centers[i].norm() < blowup;
    }
  }
  std::vector<std::uint8_t> usable(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) usable[i] = valid[i] && valid[(i + 1) % ts.size()];

  const auto pairs = kernels::segment_crossings(centers, usable);

  struct Hit {
    CircleKey key;
    double t1, t2;
    double residual;
  };
  std::vector<Hit> hits;
  const double step = period / samples;
  for (const auto& [i, k] : pairs) {
    double t1 = ts[i] + 0.5 * step, t2 = ts[k] + 0.5 * step;
    bool ok = false;
    for (int iter = 0; iter < 60; ++iter) {
      const Vec2 f = circle_center(spec, t1) - circle_center(spec, t2);
      const double h = 1e-7;
      const Vec2 d1 = (1.0 / (2 * h)) * (circle_center(spec, t1 + h) - circle_center(spec, t1 - h));
      const Vec2 d2 = (1.0 / (2 * h)) * (circle_center(spec, t2 + h) - circle_center(spec, t2 - h));
      // J = [d1, -d2]
      const double det = d1.x * (-d2.y) - (-d2.x) * d1.y;
      if (std::abs(det) < 1e-300) break;
      const double dt1 = ((-d2.y) * f.x - (-d2.x) * f.y) / det;
      const double dt2 = (d1.x * f.y - d1.y * f.x) / det;
      t1 -= dt1;
      t2 -= dt2;
      if (std::abs(dt1) + std::abs(dt2) < 1e-14 * (1.0 + std::abs(t1) + std::abs(t2))) {
        ok = true;
        break;
      }
    }
    const double residual = (circle_center(spec, t1) - circle_center(spec, t2)).norm();
    if (!ok) ok = residual <= tol * std::max(1.0, circle_center(spec, t1).norm());
    if (!ok || circular_gap(t1, t2, period) <= SurfaceTolerances::dedup) continue;
    try {
      const CircleKey k1 = circle_through(spec.congruence, curve_point(spec.curve, pl, t1));
      const CircleKey k2 = circle_through(spec.congruence, curve_point(spec.curve, pl, t2));
      if (!circle_key_close(k1, k2, 1e-7 * std::max(1.0, k1.radius))) continue;
      hits.push_back({k1, wrap(t1, period), wrap(t2, period), residual});
    } catch (const DomainError&) {
      // zero-radius or axis circles are not singular circles of this kind
    }
  }

  // At a node symmetric in the meridian direction the center map is stationary
  // to second order, so Newton stalls ~1e-6 away from the root. Such stray
  // iterates are merged with a wider radius and the best converged hit gives
  // the circle.
  constexpr double node_merge = 1e-5;
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.residual < b.residual; });
  std::vector<SingularCircle> out;
  for (const Hit& h : hits) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SingularCircle& c) {
      return circle_key_close(c.circle, h.key, 1e-6 * std::max(1.0, c.circle.radius));
    });
    if (it == out.end()) {
      out.push_back({h.key, 0, 0, {}});
      it = out.end() - 1;
    }
    it->parameters.push_back(h.t1);
    it->parameters.push_back(h.t2);
  }
  for (SingularCircle& c : out) {
    if (c.circle.meridian_angle > kPi - 1e-9) {
      c.circle.meridian_angle -= kPi;
      c.circle.center_offset = -c.circle.center_offset;
    }
    if (std::abs(c.circle.meridian_angle) < 1e-12) c.circle.meridian_angle = 0.0;
    std::vector<double> kept;
    for (double t : c.parameters)
      if (std::none_of(kept.begin(), kept.end(), [&](double k) { return circular_gap(k, t, period) <= node_merge; }))
        kept.push_back(t);
    std::sort(kept.begin(), kept.end());
    c.parameters = std::move(kept);
    c.multiplicity = static_cast<int>(c.parameters.size());
    std::vector<Vec3> pts;
    for (double t : c.parameters) {
      const Vec3 p = curve_point(spec.curve, pl, t);
      if (std::none_of(pts.begin(), pts.end(), [&](const Vec3& v) { return distance(v, p) <= node_merge * extent; }))
        pts.push_back(p);
    }
    c.distinct_points = static_cast<int>(pts.size());
  }
  std::sort(out.begin(), out.end(), [](const SingularCircle& a, const SingularCircle& b) {
    if (a.circle.meridian_angle != b.circle.meridian_angle) return a.circle.meridian_angle < b.circle.meridian_angle;
    return a.circle.center_offset < b.circle.center_offset;
  });
  return out;
}

std::vector<double> axis_crossing_parameters(const SurfaceSpec& spec, double tol) {
  spec.validate();
  const CurveSpec& c = spec.curve;
  const double range = c.full_range();
  std::vector<double> found;
  if (spec.placement.pole_on_axis()) {
    // r(phi) = 0  <=>  cos(n phi / d) = -a
    if (cmp(c.a, 1) > 0) return {};
    const double base = std::acos(-to_double(c.a));
    const double w = static_cast<double>(c.d) / c.n;
    for (int k = 0; k <= c.n; ++k)
      for (double s : {1.0, -1.0}) {
        const double phi = w * (s * base + 2.0 * kPi * k);
        if (phi > -1e-12 && phi < range - 1e-12) found.push_back(std::max(phi, 0.0));
      }
    return dedup_parameters(std::move(found), range, 1e-9);
  }
  const double psi = pierce_angle(spec.placement);
  const int candidates = static_cast<int>(std::lround(range / kPi));
  for (int k = 0; k < candidates; ++k) {
    const double phi = psi + k * kPi;
    if (curve_point(c, spec.placement, phi).norm_xy() <= tol) found.push_back(phi);
  }
  return dedup_parameters(std::move(found), range, 1e-9);
}

std::vector<double> czero_parameters(const SurfaceSpec& spec, int grid, double tol) {
  spec.validate();
  if (sgn(spec.congruence.q) >= 0 || sgn(spec.placement.height) != 0) return {};
  if (grid < 16) throw DomainError("root grid too coarse");
  const CurveSpec& c = spec.curve;
  const Placement& pl = spec.placement;
  const double q = spec.congruence.q_value();
  const double range = c.full_range();
  const double step = range / grid;

  auto f = [&](double t) {
    const Vec3 a = curve_point(c, pl, t);
    return a.x * a.x + a.y * a.y + q;
  };
  auto df = [&](double t) {
    const double r = polar_radius(c, t), dr = polar_radius_derivative(c, t);
    const double x = to_double(pl.cx) + r * std::cos(t), y = to_double(pl.cy) + r * std::sin(t);
    const double dx = dr * std::cos(t) - r * std::sin(t), dy = dr * std::sin(t) + r * std::cos(t);
    return 2.0 * (x * dx + y * dy);
  };
  auto bisect = [](const auto& g, double lo, double hi) {
    double glo = g(lo);
    while (hi - lo > SurfaceTolerances::root_width) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if (gm == 0.0) return mid;
      if ((gm < 0.0) == (glo < 0.0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  std::vector<double> ts(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) ts[static_cast<std::size_t>(i)] = step * i;
  const std::vector<double> v = kernels::evaluate(f, ts);

  const std::size_t n = v.size();
  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const double f0 = v[i], f1 = v[(i + 1) % n], fm = v[(i + n - 1) % n];
    const double t0 = ts[i];
    if (f0 == 0.0) {
      roots.push_back(t0);
      continue;
    }
    if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      roots.push_back(bisect(f, t0, t0 + step));
      continue;
    }
    // Tangential contact: |f| has a local minimum without a sign change.
    const bool same_sign = (fm < 0.0) == (f0 < 0.0) && (f1 < 0.0) == (f0 < 0.0);
    if (same_sign && std::abs(f0) <= std::abs(fm) && std::abs(f0) <= std::abs(f1)) {
      const double lo = t0 - step, hi = t0 + step;
      if ((df(lo) < 0.0) != (df(hi) < 0.0)) {
        const double t = bisect(df, lo, hi);
        if (std::abs(f(t)) <= tol * std::max(1.0, std::abs(q))) roots.push_back(t);
      }
    }
  }
  return dedup_parameters(std::move(roots), range, SurfaceTolerances::dedup);
}

std::vector<Vec3> czero_singular_points(const SurfaceSpec& spec, double tol, int grid) {
  std::vector<Vec3> pts;
  for (double t : czero_parameters(spec, grid, tol)) {
    const Vec3 p = curve_point(spec.curve, spec.placement, t);
    if (std::none_of(pts.begin(), pts.end(), [&](const Vec3& v) { return distance(v, p) <= SurfaceTolerances::dedup; }))
      pts.push_back(p);
  }
  return pts;
}

} // namespace chs
