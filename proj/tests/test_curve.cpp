#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "chs/curve.hpp"
#include "chs/error.hpp"
#include "chs/verify.hpp"
#include "support.hpp"

using namespace chs;
using namespace chs::test;

namespace {

// Chebyshev polynomials evaluated exactly at a rational argument.
Rational cheb_t(int k, const Rational& c) {
  Rational t0(1), t1 = c;
  if (k == 0) return t0;
  for (int i = 1; i < k; ++i) {
    Rational t2 = 2 * c * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

Rational cheb_u(int k, const Rational& c) {
  Rational u0(1), u1 = 2 * c;
  if (k == 0) return u0;
  for (int i = 1; i < k; ++i) {
    Rational u2 = 2 * c * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

// Exact rational point of CH(n,d,a) at psi = phi/d with tan(psi/2) = t:
// x = (T_n(c) + a) T_d(c), y = (T_n(c) + a) s U_{d-1}(c).
std::pair<Rational, Rational> rational_point(const CurveSpec& spec, const Rational& t) {
  const Rational den = 1 + t * t;
  const Rational c = (1 - t * t) / den, s = 2 * t / den;
  const Rational r = cheb_t(spec.n, c) + spec.a;
  return {r * cheb_t(spec.d, c), r * s * cheb_u(spec.d - 1, c)};
}

GaussianRational eval_exact(const MultiPoly& p, const Rational& x, const Rational& y) {
  GaussianRational sum;
  for (const auto& [m, c] : p.terms()) sum += c * GaussianRational(pow(x, m.exp[0]) * pow(y, m.exp[1]));
  return sum;
}

// Rank of a rational matrix (row reduction in place).
std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Dimension of the space of polynomials of degree <= deg vanishing on `count`
// exact curve points: number of monomials minus the rank of the evaluation
// matrix.
std::size_t vanishing_space(const CurveSpec& spec, int deg, int count) {
  std::vector<std::pair<unsigned, unsigned>> mons;
  for (int k = 0; k <= deg; ++k)
    for (int i = 0; i <= k; ++i) mons.emplace_back(static_cast<unsigned>(k - i), static_cast<unsigned>(i));
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j < count; ++j) {
    const auto [x, y] = rational_point(spec, make_rational(2 * j + 1, 3 * j + 7) - make_rational(j % 3, 1));
    std::vector<Rational> row;
    for (auto [a, b] : mons) row.push_back(pow(x, a) * pow(y, b));
    rows.push_back(std::move(row));
  }
  return mons.size() - rank(rows);
}

// Table 1, written out independently.
CurveProperties expected(int n, int d, const Rational& a) {
  const bool odd_rose = sgn(a) == 0 && n * d % 2 == 1;
  if (odd_rose) return {n + d, n, d <= n ? d : (n + d) / 2};
  return {2 * (n + d), 2 * n, d <= n ? 2 * d : n + d};
}

} // namespace

TEST_SUITE("curve") {
  TEST_CASE("spec validation") {
    CHECK_THROWS_AS(make_curve(2, 4, Rational(0)), DomainError);
    CHECK_THROWS_AS(make_curve(0, 1, Rational(0)), DomainError);
    CHECK_THROWS_AS(make_curve(1, 1, Rational(-1)), DomainError);
    CHECK_NOTHROW(make_curve(7, 3, make_rational(1, 4)));
  }

  TEST_CASE("polar radius") {
    CHECK(polar_radius(make_curve(1, 1, Rational(0)), 0.0) == 1.0);
    CHECK(polar_radius(make_curve(7, 3, Rational(1)), 0.0) == 2.0);
    CHECK(polar_radius(make_curve(2, 3, make_rational(1, 2)), 1.5 * std::numbers::pi) == doctest::Approx(-0.5));
  }

  TEST_CASE("shape class") {
    CHECK(shape_class(make_curve(3, 1, Rational(0))) == ShapeClass::Foliate);
    CHECK(shape_class(make_curve(3, 1, make_rational(1, 4))) == ShapeClass::Prolate);
    CHECK(shape_class(make_curve(3, 1, Rational(1))) == ShapeClass::Cuspidate);
    CHECK(shape_class(make_curve(3, 1, make_rational(5, 2))) == ShapeClass::Curtate);
    CHECK(to_string(ShapeClass::Curtate) == "curtate");
  }

  TEST_CASE("implicit equation examples") {
    CHECK(implicit_equation(make_curve(1, 1, Rational(0))) == xy({{2, 0, 1}, {0, 2, 1}, {1, 0, -1}}));
    CHECK(implicit_equation(make_curve(7, 3, make_rational(1, 4))).total_degree() == 20);
    // (x^2 + y^2)^2 = x^3 - 3 x y^2
    CHECK(implicit_equation(make_curve(3, 1, Rational(0))) ==
          xy({{4, 0, 1}, {2, 2, 2}, {0, 4, 1}, {3, 0, -1}, {1, 2, 3}}));
  }

  TEST_CASE("implicit equation is normalized and even in y") {
    for (const CurveSpec& c : verify::default_grid()) {
      const MultiPoly f = implicit_equation(c);
      CHECK(primitive_part(f) == f);
      const MultiPoly flipped = substitute(f, "y", MultiPoly::variable(XY, "y").scaled(GaussianRational(-1)));
      CHECK(flipped == f);
      for (const auto& [m, k] : f.terms()) CHECK(k.is_real());
    }
  }

  TEST_CASE("implicit equation vanishes exactly at rational curve points") {
    for (const CurveSpec& c : verify::default_grid()) {
      if (c.n + c.d > 10) continue;
      const MultiPoly f = implicit_equation(c);
      for (int j = 1; j <= 6; ++j) {
        const auto [x, y] = rational_point(c, make_rational(j, 7 - j % 4));
        INFO("CH(" << c.n << "," << c.d << "," << c.a.get_str() << ") j=" << j);
        CHECK(eval_exact(f, x, y).is_zero());
      }
    }
  }

  TEST_CASE("elimination oracle: unique curve of minimal degree") {
    const CurveSpec cases[] = {make_curve(1, 1, Rational(0)), make_curve(3, 1, Rational(0)),
                               make_curve(1, 2, Rational(0)), make_curve(2, 1, Rational(2)),
                               make_curve(3, 1, make_rational(1, 2))};
    for (const CurveSpec& c : cases) {
      const int order = expected(c.n, c.d, c.a).order;
      INFO("CH(" << c.n << "," << c.d << "," << c.a.get_str() << ")");
      const int points = (order + 1) * (order + 2) / 2 + 6;
      CHECK(vanishing_space(c, order - 1, points) == 0);
      CHECK(vanishing_space(c, order, points) == 1);
    }
  }

  TEST_CASE("a constant") {
    CHECK(a_constant_sum(make_curve(1, 1, Rational(1))) == -1);
    CHECK(a_constant_sum(make_curve(1, 1, Rational(0))) == 0);
    CHECK(a_constant_sum(make_curve(1, 3, Rational(2))) == -26);
    CHECK(std::abs(a_constant_closed(make_curve(1, 3, Rational(2))) + 26.0) < 1e-10);
    CHECK(std::abs(a_constant_closed(make_curve(1, 4, Rational(1))) - 1.0) < 1e-12);
    const auto z = a_constant_closed(make_curve(1, 2, Rational(0)));
    CHECK(z.real() == doctest::Approx(-1.0));
    CHECK(std::abs(z.imag()) <= 1e-12);
    // A = T_d(-a)
    for (int d = 1; d <= 9; ++d) {
      const Rational a = make_rational(1, 4);
      CHECK(a_constant_sum(make_curve(1, d, a)) == cheb_t(d, -a));
    }
  }

  TEST_CASE("table 1 rows") {
    CHECK(table1_properties(make_curve(7, 3, Rational(0))) == CurveProperties{10, 7, 3});
    CHECK(table1_properties(make_curve(2, 3, make_rational(1, 2))) == CurveProperties{10, 4, 5});
    CHECK(table1_properties(make_curve(3, 1, Rational(1))) == CurveProperties{8, 6, 2});
    CHECK(table1_properties(make_curve(1, 1, Rational(0))) == CurveProperties{2, 1, 1});
    for (const CurveSpec& c : verify::default_grid()) CHECK(table1_properties(c) == expected(c.n, c.d, c.a));
  }

  TEST_CASE("tangent cone") {
    const CurveSpec c = make_curve(3, 1, make_rational(1, 2));
    const MultiPoly cone = tangent_cone(c);
    CHECK(cone.total_degree() == 6);
    CHECK(cone.is_homogeneous());
    CHECK(proportional(cone, lowest_form(implicit_equation(c))));
    // (x^2 - y^2 + 2 (x^2 + y^2))^2 = (3 x^2 + y^2)^2
    CHECK(proportional(tangent_cone(make_curve(2, 1, Rational(2))), xy({{4, 0, 9}, {2, 2, 6}, {0, 4, 1}})));
    CHECK_THROWS_AS(tangent_cone(make_curve(3, 1, Rational(0))), DomainError);
    CHECK(lowest_form(implicit_equation(make_curve(3, 1, Rational(0)))).total_degree() == 3);
  }

  TEST_CASE("absolute multiplicity") {
    CHECK(absolute_multiplicity_check(make_curve(3, 1, Rational(0)), GaussianRational(1)) == 1);
    CHECK(absolute_multiplicity_check(make_curve(3, 1, make_rational(1, 2)), GaussianRational(make_rational(2, 3))) == 2);
    CHECK(absolute_multiplicity_check(make_curve(2, 3, make_rational(1, 2)), GaussianRational(1)) == 5);
    const auto probe = probe_absolute_multiplicity(make_curve(7, 3, make_rational(1, 4)), 99);
    CHECK(probe.consistent);
    CHECK(probe.majority == 6);
    const auto again = probe_absolute_multiplicity(make_curve(7, 3, make_rational(1, 4)), 99);
    CHECK(again.slopes == probe.slopes);
  }

  TEST_CASE("curve point") {
    const Vec3 p = curve_point(make_curve(1, 1, Rational(0)), Placement{}, 0.0);
    CHECK(p == Vec3{1, 0, 0});
    const Vec3 q = curve_point(make_curve(7, 3, Rational(1)), Placement{Rational(0), Rational(0), Rational(-1)}, 0.0);
    CHECK(q == Vec3{2, 0, -1});
    const CurveSpec c = make_curve(7, 3, make_rational(1, 4));
    const Placement pl{make_rational(1, 3), Rational(-2), Rational(1)};
    const Vec3 a = curve_point(c, pl, 0.7), b = curve_point(c, pl, 0.7 + c.full_range());
    CHECK(distance(a, b) < 1e-12);
  }
}
