#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chs/error.hpp"
#include "chs/mesh.hpp"

using namespace chs;
using kernels::RowKind;

namespace {

SurfaceSpec spec(int n, int d, Rational a, long q) {
  return {make_curve(n, d, std::move(a)), CongruenceSpec{Rational(q)}, Placement{}};
}

std::size_t count(const Mesh& m, RowKind k) {
  return static_cast<std::size_t>(
      std::count_if(m.degenerate_rows.begin(), m.degenerate_rows.end(), [&](const DegenerateRow& r) { return r.kind == k; }));
}

} // namespace

TEST_SUITE("mesh") {
  TEST_CASE("circle curve on the axis") {
    const Mesh m = sample(spec(1, 1, Rational(0), 1), 64, 64);
    REQUIRE(m.degenerate_rows.size() == 2);
    CHECK(m.degenerate_rows[0].kind == RowKind::Skipped);
    CHECK(m.degenerate_rows[0].t == doctest::Approx(std::numbers::pi / 2));
    CHECK(m.degenerate_rows[1].t == doctest::Approx(3 * std::numbers::pi / 2));
    CHECK(m.vertices.size() == 62u * 64u);
    for (const auto& t : m.triangles)
      for (auto i : t) CHECK(i < m.vertices.size());
  }

  TEST_CASE("figure 3b stays bounded") {
    const FigurePreset p = figure_preset("3b");
    const Mesh m = sample(p.spec, 384, 32);
    double worst = 0.0;
    for (const Vec3& v : m.vertices) worst = std::max(worst, v.norm());
    CHECK(worst <= 1.25 + 1e-9);
  }

  TEST_CASE("collapsed rows sit on c(0)") {
    const FigurePreset p = figure_preset("6b");
    const Mesh m = sample(p.spec, 200, 16);
    const auto roots = czero_parameters(p.spec);
    REQUIRE(roots.size() == 7);
    CHECK(count(m, RowKind::Collapsed) == 7);
    for (const DegenerateRow& r : m.degenerate_rows) {
      const bool near = std::any_of(roots.begin(), roots.end(), [&](double t) { return std::abs(t - r.t) <= 1e-6; });
      CHECK(near);
    }
    CHECK(m.vertices.size() == (200u - 7u) * 16u + 7u);
  }

  TEST_CASE("seam is shared, not duplicated") {
    const Mesh m = sample(spec(2, 1, make_rational(5, 2), 1), 16, 8);
    CHECK(m.degenerate_rows.empty());
    CHECK(m.vertices.size() == 16u * 8u);
    CHECK(m.triangles.size() == 2u * 16u * 8u);
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
      for (std::size_t k = i + 1; k < m.vertices.size(); ++k) CHECK(distance(m.vertices[i], m.vertices[k]) > 1e-9);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(sample(spec(1, 1, Rational(0), 1), 4, 64), DomainError);
    CHECK_THROWS_AS(sample(spec(1, 1, Rational(0), 1), 64, 7), DomainError);
  }

  TEST_CASE("obj export") {
    Mesh one;
    one.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.5}};
    one.triangles = {{0, 1, 2}};
    std::ostringstream out;
    export_obj(one, out);
    CHECK(out.str() == "v 0 0 0\nv 1 0 0\nv 0 1 0.5\nf 1 2 3\n");

    std::ostringstream empty;
    export_obj(Mesh{}, empty);
    CHECK(empty.str().empty());

    std::ostringstream digits;
    Mesh third;
    third.vertices = {{1.0 / 3.0, 0, 0}};
    export_obj(third, digits);
    CHECK(digits.str() == "v 0.33333333333333331 0 0\n");
  }

  TEST_CASE("obj round trip") {
    const Mesh m = sample(figure_preset("9a").spec, 64, 64);
    std::stringstream buf;
    export_obj(m, buf);
    const Mesh back = read_obj(buf);
    CHECK(back.vertices.size() == m.vertices.size());
    CHECK(back.triangles == m.triangles);
    CHECK(back.vertices == m.vertices);
  }

  TEST_CASE("presets") {
    const auto all = list_presets();
    CHECK(all.size() == 22);
    const FigurePreset b = figure_preset("5b");
    CHECK(b.spec.curve.n == 9);
    CHECK(b.spec.curve.d == 2);
    CHECK(b.spec.curve.a == 2);
    CHECK(b.spec.congruence.q == -1);
    CHECK(b.spec.placement.height == make_rational(1, 2));
    CHECK(b.spec.placement.pole_on_axis());
    const FigurePreset c = figure_preset("9c");
    CHECK(c.spec.congruence.q == -1);
    CHECK(c.spec.placement.cx == 1);
    const FigurePreset a = figure_preset("3a");
    CHECK(a.spec.curve.a == 0);
    CHECK(a.spec.congruence.q == 0);
    CHECK_THROWS_AS(figure_preset("10a"), DomainError);
  }
}
