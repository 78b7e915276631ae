#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "chs/geometry.hpp"
#include "chs/poly.hpp"
#include "chs/rational.hpp"

namespace chs {

/// Cyclic-harmonic curve CH(n, d, a): r(phi) = cos(n phi / d) + a.
struct CurveSpec {
  int n = 1;
  int d = 1;
  Rational a{0};

  /// Throws DomainError unless n, d >= 1, gcd(n, d) = 1 and a >= 0.
  void validate() const;
  /// a = 0 with n*d odd: the rose whose tables use the first rows.
  bool is_odd_rose() const { return sgn(a) == 0 && (n * d) % 2 == 1; }
  /// Length of the parameter interval that traces the curve once:
  /// d*pi for odd roses (phi and phi + d*pi give the same point), 2*d*pi otherwise.
  double period() const;
  /// Full canonical parameter range [0, 2 d pi).
  double full_range() const;
};

CurveSpec make_curve(int n, int d, Rational a);

enum class ShapeClass { Foliate, Prolate, Cuspidate, Curtate };

std::string to_string(ShapeClass s);

struct CurveProperties {
  int order = 0;
  int origin_multiplicity = 0;
  int absolute_multiplicity = 0;
  friend bool operator==(const CurveProperties&, const CurveProperties&) = default;
};

double polar_radius(const CurveSpec& spec, double phi);
/// d r / d phi.
double polar_radius_derivative(const CurveSpec& spec, double phi);

ShapeClass shape_class(const CurveSpec& spec);

/// Integer-coefficient implicit polynomial over {x, y} with unit content and
/// positive leading coefficient.
MultiPoly implicit_equation(const CurveSpec& spec);

/// The constant A of the tangent cone, from its double binomial sum.
Rational a_constant_sum(const CurveSpec& spec);
/// The same constant from its radical form; complex intermediates when a < 1.
std::complex<double> a_constant_closed(const CurveSpec& spec);

CurveProperties table1_properties(const CurveSpec& spec);

/// Tangent lines at the pole, degree 2n, normalized like implicit_equation.
/// Throws DomainError for odd roses, whose pole is only n-fold.
MultiPoly tangent_cone(const CurveSpec& spec);

/// Intersection multiplicity at the absolute point (0, 1, i) along the line
/// x2 = i x1 + m x0: order of x0 in the substituted homogeneous equation.
unsigned absolute_multiplicity_check(const CurveSpec& spec, const GaussianRational& m);

/// Three seeded random slopes m and the resulting multiplicities.
struct AbsoluteMultiplicityProbe {
  std::array<GaussianRational, 3> slopes;
  std::array<unsigned, 3> orders{};
  unsigned majority = 0;
  bool consistent = false;
};

AbsoluteMultiplicityProbe probe_absolute_multiplicity(const CurveSpec& spec, std::uint64_t seed);

/// Curve point in space for the given placement.
Vec3 curve_point(const CurveSpec& spec, const Placement& placement, double phi);

} // namespace chs
