#include "chs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "chs/error.hpp"
#include "chs/kernels.hpp"

namespace chs::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string label(const CurveSpec& c) {
  return "CH(" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + c.a.get_str() + ")";
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

// Runs body(i) for every i in parallel and concatenates the per-item
// reports in index order. Exceptions become failed checks.
template <class Body>
Report for_each_spec(const std::string& suite, std::size_t count, const std::vector<CurveSpec>& specs, Body body) {
  std::vector<Report> parts(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      parts[i] = body(i);
    } catch (const std::exception& e) {
      parts[i].checks.push_back({suite, i < specs.size() ? label(specs[i]) : std::to_string(i), false, e.what()});
    }
  }
  Report out;
  for (const Report& r : parts) out.append(r);
  return out;
}

} // namespace

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::vector<CurveSpec> default_grid() {
  const Rational as[] = {make_rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(1), make_rational(5, 2)};
  std::vector<CurveSpec> out;
  for (int n = 1; n <= 9; ++n)
    for (int d = 1; d <= 9; ++d)
      if (std::gcd(n, d) == 1)
        for (const Rational& a : as) out.push_back(make_curve(n, d, a));
  return out;
}

Report table1(const std::vector<CurveSpec>& specs, std::uint64_t seed) {
  return for_each_spec("table1", specs.size(), specs, [&](std::size_t i) {
    const CurveSpec& c = specs[i];
    const CurveProperties expect = table1_properties(c);
    const MultiPoly f = implicit_equation(c);
    Report r;
    const std::string id = label(c);

    const int deg = f.total_degree();
    r.checks.push_back({"table1", id + " order", deg == expect.order,
                        "degree " + std::to_string(deg) + ", expected " + std::to_string(expect.order)});

    const MultiPoly low = lowest_form(f);
    const int origin = low.total_degree();
    r.checks.push_back({"table1", id + " origin", origin == expect.origin_multiplicity,
                        "lowest form degree " + std::to_string(origin) + ", expected " +
                            std::to_string(expect.origin_multiplicity)});
    if (!c.is_odd_rose()) {
      const bool prop = proportional(low, tangent_cone(c));
      r.checks.push_back({"table1", id + " tangent cone", prop, prop ? "proportional" : "not proportional"});
    }

    const AbsoluteMultiplicityProbe probe = probe_absolute_multiplicity(c, seed);
    std::string orders;
    bool all = true;
    for (std::size_t k = 0; k < probe.orders.size(); ++k) {
      orders += (k ? "," : "") + std::to_string(probe.orders[k]);
      all = all && probe.orders[k] == static_cast<unsigned>(expect.absolute_multiplicity);
    }
    r.checks.push_back({"table1", id + " absolute", all,
                        "orders " + orders + ", expected " + std::to_string(expect.absolute_multiplicity)});
    return r;
  });
}

Report table2(const std::vector<CurveSpec>& specs) {
  using Row = std::tuple<int, char, bool>;
  std::vector<std::set<Row>> hit(specs.size());
  Report out = for_each_spec("table2", specs.size(), specs, [&](std::size_t i) {
    const CurveSpec& c = specs[i];
    const bool odd = c.is_odd_rose();
    const int candidates = static_cast<int>(std::lround(c.period() / kPi));
    Report r;
    int rows = 0, agree = 0;
    for (int k = 1; k <= 5; ++k) {
      const auto kind = static_cast<IncidenceKind>(k);
      const bool with_j = kind == IncidenceKind::Type3 || kind == IncidenceKind::Type4;
      const int jmax = with_j ? std::min(3, candidates) : 0;
      for (int j = with_j ? 1 : 0; j <= jmax; ++j) {
        const IncidenceType type{kind, j};
        const SurfaceClassification closed = table2_closed_form(type, odd, c.n, c.d);
        const IncidenceCounts n = incidence_counts(c, type);
        const SurfaceClassification counted = classification_from_counts(n.m, n.a_abs, n.z_axis, n.p1, n.p2);
        ++rows;
        if (closed == counted) ++agree;
        hit[i].insert({k, odd ? 'A' : 'B', c.d <= c.n});
      }
    }
    r.checks.push_back({"table2", label(c) + " dual path", agree == rows,
                        std::to_string(agree) + "/" + std::to_string(rows) + " rows agree"});
    return r;
  });
  // every (variant, branch) pair present should instantiate all five types
  std::set<Row> all;
  std::set<std::pair<char, bool>> variants;
  for (const auto& s : hit) all.insert(s.begin(), s.end());
  for (const Row& r : all) variants.insert({std::get<1>(r), std::get<2>(r)});
  const std::size_t expected = 5 * variants.size();
  out.checks.push_back({"table2", "row coverage", all.size() == expected,
                        std::to_string(all.size()) + "/" + std::to_string(expected) + " rows instantiated"});
  return out;
}

Report residual(const std::vector<CurveSpec>& specs, int samples, double threshold) {
  return for_each_spec("residual", specs.size(), specs, [&](std::size_t i) {
    const CurveSpec& c = specs[i];
    const NumericPoly f(implicit_equation(c));
    std::vector<Vec2> pts;
    const Placement origin;
    for (int k = 0; k < samples; ++k) {
      const Vec3 p = curve_point(c, origin, c.full_range() * k / samples);
      pts.push_back({p.x, p.y});
    }
    const double worst = kernels::max_scaled_residual(f, pts, kernels::Exec::Serial);
    Report r;
    r.checks.push_back({"residual", label(c), worst <= threshold, "max scaled residual " + fmt(worst)});
    return r;
  });
}

Report a_constant(const std::vector<CurveSpec>& specs, double rel_tol) {
  Report r;
  for (const CurveSpec& c : specs) {
    const double sum = to_double(a_constant_sum(c));
    const std::complex<double> closed = a_constant_closed(c);
    const double err = std::abs(closed - sum) / std::max(1.0, std::abs(sum));
    r.checks.push_back({"a_constant", label(c), err <= rel_tol, "relative difference " + fmt(err)});
  }
  return r;
}

Report invariants(const std::vector<FigurePreset>& presets, int samples) {
  std::vector<CurveSpec> curves;
  for (const auto& p : presets) curves.push_back(p.spec.curve);
  return for_each_spec("invariants", presets.size(), curves, [&](std::size_t i) {
    const FigurePreset& pre = presets[i];
    const SurfaceSpec& s = pre.spec;
    const double q = s.congruence.q_value();
    const double h = to_double(s.placement.height);
    const double range = s.curve.full_range();

    double through = 0.0, tangency = 0.0, on_surface = 0.0, key_drift = 0.0;
    int rows = 0;
    bool radicand_ok = true;
    for (int k = 0; k < samples; ++k) {
      const double t = range * (k + 0.5) / samples;
      const Vec3 a = curve_point(s.curve, s.placement, t);
      const double rho2 = a.x * a.x + a.y * a.y;
      const double rho = std::sqrt(rho2);
      const double scale = std::max({1.0, a.norm(), std::abs(q)});
      const double big = rho2 + a.z * a.z + std::abs(q);
      if (big * big < 4.0 * std::abs(q) * rho2) radicand_ok = false;
      const double rad = radicand(s, t);
      const bool on_czero = q < 0.0 && h == 0.0 && std::abs(rho2 + q) <= 1e-6;
      if (rad < -1e-12 * scale * scale || (rad <= 1e-12 * scale * scale && !on_czero)) radicand_ok = false;
      if (rho <= 1e-6 || rad <= 1e-12 * scale * scale) continue;
      ++rows;

      const double sum = rho2 + a.z * a.z - q;
      const double root = std::sqrt(rad);
      if (q > 0.0) {
        const double th = std::acos(std::clamp(-sum / root, -1.0, 1.0));
        const double p = std::sqrt(q);
        through = std::max(through, distance(parametric_point(s, t, th), {0, 0, p}) / scale);
        through = std::max(through, distance(parametric_point(s, t, -th), {0, 0, -p}) / scale);
      }
      if (q == 0.0) {
        const Vec3 o = parametric_point(s, t, kPi);
        const double e = 1e-6;
        const Vec3 dv = (1.0 / (2 * e)) * (parametric_point(s, t, kPi + e) - parametric_point(s, t, kPi - e));
        tangency = std::max({tangency, o.norm() / scale, std::hypot(dv.x, dv.y) / std::max(1e-300, dv.norm())});
      }
      const double th = std::atan2(2.0 * rho * a.z, 2.0 * rho2 - sum);
      on_surface = std::max(on_surface, distance(parametric_point(s, t, th), a) / scale);

      const CircleKey key = circle_through(s.congruence, a);
      for (int m = 0; m < 16; ++m) {
        const Vec3 x = parametric_point(s, t, 2.0 * kPi * (m + 0.25) / 16);
        try {
          const CircleKey other = circle_through(s.congruence, x);
          if (!circle_key_close(key, other, 1e-7 * std::max(1.0, key.radius)))
            key_drift = std::max(key_drift, std::abs(other.radius - key.radius) + 1e-7);
        } catch (const DomainError&) {
          // point of the circle on the axis
        }
      }
    }

    Report r;
    const std::string id = "preset " + pre.id;
    r.checks.push_back({"invariants", id + " sampled rows", rows >= std::min(samples, 48), std::to_string(rows) + " rows"});
    if (q > 0.0) r.checks.push_back({"invariants", id + " through points", through <= 1e-9, "max distance " + fmt(through)});
    if (q == 0.0) r.checks.push_back({"invariants", id + " tangency at origin", tangency <= 1e-6, "max deviation " + fmt(tangency)});
    r.checks.push_back({"invariants", id + " curve on surface", on_surface <= 1e-8, "max distance " + fmt(on_surface)});
    r.checks.push_back({"invariants", id + " radicand", radicand_ok, radicand_ok ? "nonnegative, zero only on c(0)" : "violated"});
    r.checks.push_back({"invariants", id + " circle key", key_drift == 0.0, key_drift == 0.0 ? "stable" : "drift " + fmt(key_drift)});
    return r;
  });
}

Report run_suite(std::string_view suite, const std::vector<CurveSpec>& specs, std::uint64_t seed) {
  if (suite == "table1") return table1(specs, seed);
  if (suite == "table2") return table2(specs);
  if (suite == "residual") return residual(specs);
  if (suite == "invariants") return invariants(list_presets());
  if (suite == "all") {
    Report r = table1(specs, seed);
    r.append(table2(specs));
    r.append(residual(specs));
    r.append(a_constant(specs));
    r.append(invariants(list_presets()));
    return r;
  }
  throw DomainError("unknown suite '" + std::string(suite) + "' (table1, table2, residual, invariants, all)");
}

} // namespace chs::verify
