// Serial reference versions of the kernels.

#include <algorithm>
#include <cmath>

#include "chs/kernels.hpp"

namespace chs::kernels::serial {

std::vector<SurfaceRow> sample_rows(const SurfaceSpec& spec, std::span<const double> ts, int ntheta) {
  std::vector<SurfaceRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) rows.push_back(sample_row(spec, t, ntheta));
  return rows;
}

std::vector<SegmentPair> segment_crossings(std::span<const Vec2> pts, std::span<const std::uint8_t> usable) {
  const std::size_t n = pts.size();
  std::vector<SegmentPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!usable[i]) continue;
    for (std::size_t k = i + 2; k < n; ++k) {
      if (!usable[k] || (i == 0 && k == n - 1)) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[k], pts[(k + 1) % n]))
        out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k));
    }
  }
  return out;
}

std::vector<double> evaluate(const ScalarFn& f, std::span<const double> ts) {
  std::vector<double> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = f(ts[i]);
  return out;
}

double max_scaled_residual(const NumericPoly& p, std::span<const Vec2> points) {
  double worst = 0.0;
  for (const Vec2& v : points) {
    const double scale = p.max_abs_coefficient() * std::pow(std::max(1.0, v.norm()), p.degree());
    worst = std::max(worst, std::abs(p.eval_real(v.x, v.y)) / scale);
  }
  return worst;
}

} // namespace chs::kernels::serial
