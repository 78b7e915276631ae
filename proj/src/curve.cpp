#include "chs/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "chs/error.hpp"

namespace chs {

namespace {

const std::vector<std::string> kXY{"x", "y"};

// Coefficients c[l] of a polynomial in u = x^2 + y^2.
using UPoly = std::vector<Rational>;

MultiPoly u_power(unsigned l) {
  MultiPoly::Terms t;
  for (unsigned k = 0; k <= l; ++k) t.emplace(Monomial{{2 * (l - k), 2 * k, 0}}, GaussianRational(Rational(binomial(l, k))));
  return MultiPoly(kXY, std::move(t));
}

MultiPoly from_u(const UPoly& c, unsigned shift = 0) {
  MultiPoly out(kXY);
  for (std::size_t l = 0; l < c.size(); ++l)
    if (sgn(c[l]) != 0) out = out + u_power(static_cast<unsigned>(l) + shift).scaled(GaussianRational(c[l]));
  return out;
}

void bump(UPoly& c, std::size_t l, const Rational& v) {
  if (c.size() <= l) c.resize(l + 1, Rational(0));
  c[l] += v;
}

int sign_of_power(long e) { return (e % 2 == 0) ? 1 : -1; }

// Re(x + i y)^n = sum_i (-1)^i C(n, 2i) x^(n-2i) y^(2i).
MultiPoly multiple_angle_form(int n) {
  MultiPoly::Terms t;
  for (int i = 0; 2 * i <= n; ++i)
    t.emplace(Monomial{{static_cast<std::uint32_t>(n - 2 * i), static_cast<std::uint32_t>(2 * i), 0}},
              GaussianRational(Rational(sign_of_power(i) * binomial(n, 2 * i))));
  return MultiPoly(kXY, std::move(t));
}

// Even-l part of the triple sum: coefficient of (x^2+y^2)^l multiplying rho^n.
UPoly even_sum(int d, const Rational& a) {
  UPoly c;
  for (int j = 0; j <= d / 2; ++j)
    for (int k = 0; k <= j; ++k)
      for (int l = 0; l <= (d - 2 * k) / 2; ++l) {
        Rational term(sign_of_power(d - k) * binomial(d, 2 * j) * binomial(j, k) * binomial(d - 2 * k, 2 * l));
        term *= pow(a, static_cast<unsigned>(d - 2 * k - 2 * l));
        bump(c, l, term);
      }
  return c;
}

// Odd-l part: coefficient of (x^2+y^2)^l multiplying rho^(n+1). The bound D
// drops the l with 2l + 1 > d - 2k when d is even.
UPoly odd_sum(int d, const Rational& a) {
  UPoly c;
  for (int j = 0; j <= d / 2; ++j)
    for (int k = 0; k <= j; ++k) {
      const int bound = (d % 2 == 1) ? (d - 2 * k) / 2 : (d - 2 * k) / 2 - 1;
      for (int l = 0; l <= bound; ++l) {
        Rational term(sign_of_power(d - k - 1) * binomial(d, 2 * j) * binomial(j, k) * binomial(d - 2 * k, 2 * l + 1));
        term *= pow(a, static_cast<unsigned>(d - 2 * k - 2 * l - 1));
        bump(c, l, term);
      }
    }
  return c;
}

// Rose equation: rho^n T_d(rho) written as sum of (x^2+y^2)^((n+d)/2 - k + j).
// With n + d odd every exponent is a half-integer; the returned polynomial G
// then satisfies rho^n T_d(rho) = rho G.
MultiPoly rose_left_side(int n, int d) {
  const int base = (n + d) / 2;  // floor
  UPoly c;
  for (int k = 0; k <= d / 2; ++k)
    for (int j = 0; j <= k; ++j)
      bump(c, static_cast<std::size_t>(base - k + j), Rational(sign_of_power(j + k) * binomial(d, 2 * k) * binomial(k, j)));
  return from_u(c);
}

MultiPoly implicit_rose(const CurveSpec& spec) {
  const MultiPoly lhs = rose_left_side(spec.n, spec.d);
  const MultiPoly rhs = multiple_angle_form(spec.n);
  if (spec.is_odd_rose()) return lhs - rhs;
  // Squared form: (rho G)^2 - P^2 = u G^2 - P^2.
  return u_power(1) * lhs * lhs - rhs * rhs;
}

MultiPoly implicit_general(const CurveSpec& spec) {
  const int n = spec.n;
  const MultiPoly even = from_u(even_sum(spec.d, spec.a));
  const MultiPoly odd = from_u(odd_sum(spec.d, spec.a));
  const MultiPoly p = multiple_angle_form(n);
  if (n % 2 == 0) {
    const MultiPoly rhs = p - u_power(static_cast<unsigned>(n / 2)) * even;
    return u_power(static_cast<unsigned>(n + 1)) * odd * odd - rhs * rhs;
  }
  const MultiPoly rhs = p - u_power(static_cast<unsigned>((n + 1) / 2)) * odd;
  return u_power(static_cast<unsigned>(n)) * even * even - rhs * rhs;
}

} // namespace

void CurveSpec::validate() const {
  if (n < 1 || d < 1) throw DomainError("CH(n,d,a) needs n, d >= 1");
  if (std::gcd(n, d) != 1) throw DomainError("CH(n,d,a) needs gcd(n, d) = 1");
  if (sgn(a) < 0) throw DomainError("CH(n,d,a) needs a >= 0");
  if (n > 64 || d > 64) throw DomainError("n and d are limited to 64");
}

double CurveSpec::period() const {
  return (is_odd_rose() ? 1.0 : 2.0) * d * std::numbers::pi;
}

double CurveSpec::full_range() const { return 2.0 * d * std::numbers::pi; }

CurveSpec make_curve(int n, int d, Rational a) {
  CurveSpec spec{n, d, std::move(a)};
  spec.validate();
  return spec;
}

std::string to_string(ShapeClass s) {
  switch (s) {
    case ShapeClass::Foliate: return "foliate";
    case ShapeClass::Prolate: return "prolate";
    case ShapeClass::Cuspidate: return "cuspidate";
    case ShapeClass::Curtate: return "curtate";
  }
  return "?";
}

double polar_radius(const CurveSpec& spec, double phi) {
  return std::cos(spec.n * phi / spec.d) + to_double(spec.a);
}

double polar_radius_derivative(const CurveSpec& spec, double phi) {
  const double w = static_cast<double>(spec.n) / spec.d;
  return -w * std::sin(w * phi);
}

ShapeClass shape_class(const CurveSpec& spec) {
  const int c = cmp(spec.a, 1);
  if (sgn(spec.a) == 0) return ShapeClass::Foliate;
  if (c < 0) return ShapeClass::Prolate;
  if (c == 0) return ShapeClass::Cuspidate;
  return ShapeClass::Curtate;
}

MultiPoly implicit_equation(const CurveSpec& spec) {
  spec.validate();
  const MultiPoly f = sgn(spec.a) == 0 ? implicit_rose(spec) : implicit_general(spec);
  return primitive_part(f);
}

Rational a_constant_sum(const CurveSpec& spec) {
  Rational sum(0);
  const int d = spec.d;
  for (int j = 0; j <= d / 2; ++j)
    for (int k = 0; k <= j; ++k)
      sum += Rational(sign_of_power(d - k) * binomial(d, 2 * j) * binomial(j, k)) * pow(spec.a, static_cast<unsigned>(d - 2 * k));
  return sum;
}

std::complex<double> a_constant_closed(const CurveSpec& spec) {
  const std::complex<double> a(to_double(spec.a), 0.0);
  const std::complex<double> root = std::sqrt(a * a - 1.0);
  return 0.5 * (std::pow(-root - a, spec.d) + std::pow(root - a, spec.d));
}

CurveProperties table1_properties(const CurveSpec& spec) {
  spec.validate();
  const int n = spec.n, d = spec.d;
  // n = d only happens for CH(1,1,a); it follows the d < n rows.
  const bool d_below = d <= n;
  if (spec.is_odd_rose()) return {n + d, n, d_below ? d : (n + d) / 2};
  return {2 * (n + d), 2 * n, d_below ? 2 * d : n + d};
}

MultiPoly tangent_cone(const CurveSpec& spec) {
  spec.validate();
  if (spec.is_odd_rose()) throw DomainError("odd rose: the pole is n-fold; use lowest_form of the implicit equation");
  const GaussianRational a_const(a_constant_sum(spec));
  const MultiPoly p = multiple_angle_form(spec.n);
  if (spec.n % 2 == 0) {
    const MultiPoly inner = p - u_power(static_cast<unsigned>(spec.n / 2)).scaled(a_const);
    return primitive_part(inner * inner);
  }
  return primitive_part(u_power(static_cast<unsigned>(spec.n)).scaled(a_const * a_const) - p * p);
}

unsigned absolute_multiplicity_check(const CurveSpec& spec, const GaussianRational& m) {
  const MultiPoly h = homogenize(implicit_equation(spec), "x0");
  const auto& vars = h.variables();
  const MultiPoly line = MultiPoly::variable(vars, "x1").scaled(GaussianRational::i()) +
                         MultiPoly::variable(vars, "x0").scaled(m);
  const MultiPoly restricted = substitute(h, "x2", line);
  if (restricted.is_zero()) throw std::logic_error("line through the absolute point lies on the curve");
  return vanishing_order(drop_variable(restricted, "x2"), "x0");
}

AbsoluteMultiplicityProbe probe_absolute_multiplicity(const CurveSpec& spec, std::uint64_t seed) {
  std::uint64_t mix = seed ^ (static_cast<std::uint64_t>(spec.n) * 0x9E3779B97F4A7C15ull) ^
                      (static_cast<std::uint64_t>(spec.d) << 32);
  mix ^= std::hash<std::string>{}(spec.a.get_str());
  std::mt19937_64 rng(mix);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);

  AbsoluteMultiplicityProbe probe;
  for (std::size_t i = 0; i < 3; ++i) {
    long p = 0;
    while (p == 0) p = num(rng);
    probe.slopes[i] = GaussianRational(make_rational(p, den(rng)));
    probe.orders[i] = absolute_multiplicity_check(spec, probe.slopes[i]);
  }
  const auto& o = probe.orders;
  probe.consistent = o[0] == o[1] && o[1] == o[2];
  probe.majority = (o[0] == o[1] || o[0] == o[2]) ? o[0] : o[1];
  return probe;
}

Vec3 curve_point(const CurveSpec& spec, const Placement& placement, double phi) {
  const double r = polar_radius(spec, phi);
  return {to_double(placement.cx) + r * std::cos(phi), to_double(placement.cy) + r * std::sin(phi),
          to_double(placement.height)};
}

} // namespace chs
