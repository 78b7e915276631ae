// OpenMP versions of the kernels. Partial results are merged in index order
// so the output matches the serial reference exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "chs/kernels.hpp"

namespace chs::kernels::omp {

std::vector<SurfaceRow> sample_rows(const SurfaceSpec& spec, std::span<const double> ts, int ntheta) {
  std::vector<SurfaceRow> rows(ts.size());
  const std::int64_t n = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = sample_row(spec, ts[static_cast<std::size_t>(i)], ntheta);
  return rows;
}

std::vector<SegmentPair> segment_crossings(std::span<const Vec2> pts, std::span<const std::uint8_t> usable) {
  const std::size_t n = pts.size();
  std::vector<std::vector<SegmentPair>> per_row(n);
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ii = 0; ii < rows; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    if (!usable[i]) continue;
    auto& out = per_row[i];
    for (std::size_t k = i + 2; k < n; ++k) {
      if (!usable[k] || (i == 0 && k == n - 1)) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[k], pts[(k + 1) % n]))
        out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k));
    }
  }
  std::vector<SegmentPair> merged;
  for (auto& v : per_row) merged.insert(merged.end(), v.begin(), v.end());
  return merged;
}

std::vector<double> evaluate(const ScalarFn& f, std::span<const double> ts) {
  std::vector<double> out(ts.size());
  const std::int64_t n = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(ts[static_cast<std::size_t>(i)]);
  return out;
}

double max_scaled_residual(const NumericPoly& p, std::span<const Vec2> points) {
  double worst = 0.0;
  const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::int64_t i = 0; i < n; ++i) {
    const Vec2 v = points[static_cast<std::size_t>(i)];
    const double scale = p.max_abs_coefficient() * std::pow(std::max(1.0, v.norm()), p.degree());
    worst = std::max(worst, std::abs(p.eval_real(v.x, v.y)) / scale);
  }
  return worst;
}

} // namespace chs::kernels::omp
