#pragma once

#include <optional>

#include "chs/geometry.hpp"
#include "chs/rational.hpp"

namespace chs {

/// Congruence of circles through the directing points (0, 0, +-p), p^2 = q.
struct CongruenceSpec {
  Rational q{0};

  double q_value() const { return to_double(q); }
};

enum class CongruenceKind { Elliptic, Parabolic, Hyperbolic };

CongruenceKind kind(const CongruenceSpec& spec);
const char* to_string(CongruenceKind k);

/// A congruence circle, described in its meridian plane. The plane through
/// the z axis at angle `meridian_angle` in [0, pi) carries the radial
/// coordinate rho (signed: negative rho is the opposite half-plane); the
/// circle is centered at (rho, z) = (center_offset, 0).
struct CircleKey {
  double meridian_angle = 0.0;
  double center_offset = 0.0;
  double radius = 0.0;

  /// Center of the circle in 3-space (always in the plane z = 0).
  Vec3 center() const;
};

/// The unique congruence circle through A. Throws DomainError when A lies on
/// the z axis or on c(0) (zero radius).
CircleKey circle_through(const CongruenceSpec& spec, Vec3 a);

/// The point circle locus x^2 + y^2 = -q, z = 0 of a hyperbolic congruence.
struct ZeroCircle {
  double radius = 0.0;
};

std::optional<ZeroCircle> czero(const CongruenceSpec& spec);

/// Coincidence test honoring (angle, offset) ~ (angle + pi, -offset).
bool circle_key_close(const CircleKey& k1, const CircleKey& k2, double tol);

} // namespace chs
