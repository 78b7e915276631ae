#include "chs/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <omp.h>

#include "chs/error.hpp"

namespace chs::kernels {

SurfaceRow sample_row(const SurfaceSpec& spec, double t, int ntheta) {
  SurfaceRow row;
  row.t = t;
  const Vec3 a = curve_point(spec.curve, spec.placement, t);
  if (a.norm_xy() <= SurfaceTolerances::axis) {
    row.kind = RowKind::Skipped;
    return row;
  }
  const double q = spec.congruence.q_value();
  const double scale = a.norm() * a.norm() + std::abs(q);
  if (radicand(spec, t) <= 1e-12 * scale * scale) {
    row.kind = RowKind::Collapsed;
    row.ring.push_back(a);
    return row;
  }
  row.ring.reserve(static_cast<std::size_t>(ntheta));
  for (int k = 0; k < ntheta; ++k)
    row.ring.push_back(circle_point(q, a, 2.0 * std::numbers::pi * k / ntheta));
  return row;
}

namespace {

double orient(Vec2 a, Vec2 b, Vec2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

} // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  // Bounding boxes first; the orientation test alone accepts collinear
  // disjoint segments.
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
    return false;
  const double d1 = orient(a, b, c), d2 = orient(a, b, d);
  const double d3 = orient(c, d, a), d4 = orient(c, d, b);
  return (d1 * d2 <= 0.0) && (d3 * d4 <= 0.0);
}

std::vector<SegmentPair> segment_crossings(std::span<const Vec2> pts, std::span<const std::uint8_t> usable, Exec exec) {
  if (usable.size() != pts.size()) throw DomainError("segment mask size mismatch");
  return exec == Exec::Serial ? serial::segment_crossings(pts, usable) : omp::segment_crossings(pts, usable);
}

std::vector<SurfaceRow> sample_rows(const SurfaceSpec& spec, std::span<const double> ts, int ntheta, Exec exec) {
  return exec == Exec::Serial ? serial::sample_rows(spec, ts, ntheta) : omp::sample_rows(spec, ts, ntheta);
}

std::vector<double> evaluate(const ScalarFn& f, std::span<const double> ts, Exec exec) {
  return exec == Exec::Serial ? serial::evaluate(f, ts) : omp::evaluate(f, ts);
}

double max_scaled_residual(const NumericPoly& p, std::span<const Vec2> points, Exec exec) {
  return exec == Exec::Serial ? serial::max_scaled_residual(p, points) : omp::max_scaled_residual(p, points);
}

void set_thread_count(int threads) {
  if (threads >= 1) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

} // namespace chs::kernels
