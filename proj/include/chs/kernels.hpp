#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// chs::kernels::serial and an OpenMP version in chs::kernels::omp; both
// produce identical results (per-element work is the same and partial
// results are merged in index order). The dispatching overloads take Exec.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "chs/geometry.hpp"
#include "chs/poly.hpp"
#include "chs/surface.hpp"

namespace chs::kernels {

enum class Exec { Serial, Parallel };

enum class RowKind : std::uint8_t { Regular, Collapsed, Skipped };

/// One t-row of a sampled surface: a ring of ntheta points, a single point
/// (zero-radius circle on c(0)) or nothing (curve point on the z axis).
struct SurfaceRow {
  double t = 0.0;
  RowKind kind = RowKind::Regular;
  std::vector<Vec3> ring;
};

SurfaceRow sample_row(const SurfaceSpec& spec, double t, int ntheta);

using SegmentPair = std::pair<std::uint32_t, std::uint32_t>;

/// Scalar sample of f at every t.
using ScalarFn = std::function<double(double)>;

namespace serial {
std::vector<SurfaceRow> sample_rows(const SurfaceSpec& spec, std::span<const double> ts, int ntheta);
std::vector<SegmentPair> segment_crossings(std::span<const Vec2> pts, std::span<const std::uint8_t> usable);
std::vector<double> evaluate(const ScalarFn& f, std::span<const double> ts);
double max_scaled_residual(const NumericPoly& p, std::span<const Vec2> points);
} // namespace serial

namespace omp {
std::vector<SurfaceRow> sample_rows(const SurfaceSpec& spec, std::span<const double> ts, int ntheta);
std::vector<SegmentPair> segment_crossings(std::span<const Vec2> pts, std::span<const std::uint8_t> usable);
std::vector<double> evaluate(const ScalarFn& f, std::span<const double> ts);
double max_scaled_residual(const NumericPoly& p, std::span<const Vec2> points);
} // namespace omp

/// Closed polyline pts[0..n) with segment i joining pts[i] and pts[(i+1) % n];
/// usable[i] masks segment i. Returns every pair (i, k), i < k, of usable,
/// non-adjacent segments that intersect, in lexicographic order.
std::vector<SegmentPair> segment_crossings(std::span<const Vec2> pts, std::span<const std::uint8_t> usable,
                                           Exec exec = Exec::Parallel);

std::vector<SurfaceRow> sample_rows(const SurfaceSpec& spec, std::span<const double> ts, int ntheta,
                                    Exec exec = Exec::Parallel);

std::vector<double> evaluate(const ScalarFn& f, std::span<const double> ts, Exec exec = Exec::Parallel);

/// max over points of |p(x, y)| / (max|coef| * max(1, |(x, y)|)^deg).
double max_scaled_residual(const NumericPoly& p, std::span<const Vec2> points, Exec exec = Exec::Parallel);

/// Shared per-pair predicate of segment_crossings.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

/// Sets the OpenMP thread count; values < 1 keep the runtime default.
void set_thread_count(int threads);
int thread_count();

} // namespace chs::kernels
