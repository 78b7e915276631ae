#include <doctest.h>

#include <cmath>
#include <random>

#include "chs/kernels.hpp"
#include "chs/mesh.hpp"

using namespace chs;
using kernels::Exec;

TEST_SUITE("kernels") {
  TEST_CASE("segment predicate") {
    CHECK(kernels::segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(kernels::segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
    CHECK(kernels::segments_intersect({0, 0}, {1, 0}, {1, 0}, {1, 1}));
    CHECK_FALSE(kernels::segments_intersect({0, 0}, {1, 1}, {0, 1}, {0.4, 0.9}));
  }

  TEST_CASE("serial and parallel agree") {
    kernels::set_thread_count(4);
    const SurfaceSpec s = figure_preset("7b").spec;

    std::vector<double> ts;
    for (int i = 0; i < 300; ++i) ts.push_back(s.curve.full_range() * i / 300.0);
    const auto rs = kernels::sample_rows(s, ts, 24, Exec::Serial);
    const auto rp = kernels::sample_rows(s, ts, 24, Exec::Parallel);
    REQUIRE(rs.size() == rp.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CHECK(rs[i].kind == rp[i].kind);
      CHECK(rs[i].ring == rp[i].ring);
    }

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec2> pts(400);
    for (auto& p : pts) p = {u(rng), u(rng)};
    std::vector<std::uint8_t> mask(pts.size(), 1);
    mask[17] = 0;
    const auto cs = kernels::segment_crossings(pts, mask, Exec::Serial);
    CHECK(!cs.empty());
    CHECK(cs == kernels::segment_crossings(pts, mask, Exec::Parallel));
    for (const auto& [i, k] : cs) {
      CHECK(i < k);
      CHECK(i != 17);
      CHECK(k != 17);
    }

    const kernels::ScalarFn f = [](double t) { return std::sin(3 * t) * std::exp(-t); };
    CHECK(kernels::evaluate(f, ts, Exec::Serial) == kernels::evaluate(f, ts, Exec::Parallel));

    const NumericPoly p(implicit_equation(make_curve(7, 3, make_rational(1, 4))));
    std::vector<Vec2> on;
    for (double t : ts) {
      const Vec3 v = curve_point(make_curve(7, 3, make_rational(1, 4)), Placement{}, t);
      on.push_back({v.x, v.y});
    }
    CHECK(kernels::max_scaled_residual(p, on, Exec::Serial) == kernels::max_scaled_residual(p, on, Exec::Parallel));
    kernels::set_thread_count(0);
  }

  TEST_CASE("mismatched mask") {
    std::vector<Vec2> pts(4);
    std::vector<std::uint8_t> mask(3, 1);
    CHECK_THROWS(kernels::segment_crossings(pts, mask));
  }
}
