#include "chs/congruence.hpp"

#include <cmath>
#include <numbers>

#include "chs/error.hpp"

namespace chs {

CongruenceKind kind(const CongruenceSpec& spec) {
  const int s = sgn(spec.q);
  if (s > 0) return CongruenceKind::Elliptic;
  if (s == 0) return CongruenceKind::Parabolic;
  return CongruenceKind::Hyperbolic;
}

const char* to_string(CongruenceKind k) {
  switch (k) {
    case CongruenceKind::Elliptic: return "elliptic";
    case CongruenceKind::Parabolic: return "parabolic";
    case CongruenceKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Vec3 CircleKey::center() const {
  return {center_offset * std::cos(meridian_angle), center_offset * std::sin(meridian_angle), 0.0};
}

CircleKey circle_through(const CongruenceSpec& spec, Vec3 a) {
  const double q = spec.q_value();
  const double rho = a.norm_xy();
  const double scale = a.norm() * a.norm() + std::abs(q);
  if (rho <= 1e-12 * std::max(1.0, a.norm())) throw DomainError("point lies on the z axis (singular point of the congruence)");

  double angle = std::atan2(a.y, a.x);
  double sign = 1.0;
  if (angle < 0.0) {
    angle += std::numbers::pi;
    sign = -1.0;
  }
  if (angle >= std::numbers::pi) {
    angle -= std::numbers::pi;
    sign = -sign;
  }

  const double s = rho * rho + a.z * a.z - q;
  const double offset = s / (2.0 * rho);
  // radius^2 = offset^2 + q = R / (4 rho^2) with R = 4 q rho^2 + s^2 >= 0
  const double radicand = 4.0 * q * rho * rho + s * s;
  if (radicand <= 1e-12 * scale * scale) throw DomainError("degenerate point circle: point lies on c(0)");
  return {angle, sign * offset, std::sqrt(radicand) / (2.0 * rho)};
}

std::optional<ZeroCircle> czero(const CongruenceSpec& spec) {
  if (sgn(spec.q) >= 0) return std::nullopt;
  return ZeroCircle{std::sqrt(-spec.q_value())};
}

bool circle_key_close(const CircleKey& k1, const CircleKey& k2, double tol) {
  if (std::abs(k1.radius - k2.radius) > tol) return false;
  const double da = k1.meridian_angle - k2.meridian_angle;
  if (std::abs(da) <= tol) return std::abs(k1.center_offset - k2.center_offset) <= tol;
  if (std::abs(std::abs(da) - std::numbers::pi) <= tol)
    return std::abs(k1.center_offset + k2.center_offset) <= tol;
  return false;
}

} // namespace chs
