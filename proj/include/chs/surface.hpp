#pragma once

#include <string>
#include <vector>

#include "chs/congruence.hpp"
#include "chs/curve.hpp"
#include "chs/geometry.hpp"

namespace chs {

/// Generalized rose surface CS(CH, p): the congruence circles meeting the
/// placed curve.
struct SurfaceSpec {
  CurveSpec curve;
  CongruenceSpec congruence;
  Placement placement;

  void validate() const { curve.validate(); }
};

enum class IncidenceKind { Type1 = 1, Type2, Type3, Type4, Type5 };

/// Position of the curve relative to the singular points of the congruence.
/// j counts the branches through the axis point for Types 3 and 4.
struct IncidenceType {
  IncidenceKind kind = IncidenceKind::Type5;
  int j = 0;
  friend bool operator==(const IncidenceType&, const IncidenceType&) = default;
};

struct SurfaceClassification {
  int order = 0;
  int absolute_conic_multiplicity = 0;
  int axis_multiplicity = 0;
  int directing_point_multiplicity = 0;
  friend bool operator==(const SurfaceClassification&, const SurfaceClassification&) = default;
};

struct ClassifiedSurface {
  IncidenceType type;
  /// 'A' for odd roses, 'B' otherwise.
  char variant = 'B';
  SurfaceClassification values;

  /// "2B", "3A" ...
  std::string label() const;
};

/// Numerical tolerances shared by the incidence and root-finding code.
struct SurfaceTolerances {
  static constexpr double incidence = 1e-9;
  static constexpr double axis = 1e-9;
  static constexpr double root_width = 1e-12;
  static constexpr double dedup = 1e-6;
  static constexpr int root_grid = 4096;
};

/// Radicand 4 q |a_xy|^2 + (|a|^2 - q)^2 of the circle through a = alpha(t).
double radicand(const SurfaceSpec& spec, double t);

/// Point (t, theta) of the surface. Throws DomainError when alpha(t) is on
/// the z axis.
Vec3 parametric_point(const SurfaceSpec& spec, double t, double theta);

/// The same map, written for an arbitrary point a instead of alpha(t).
Vec3 circle_point(double q, Vec3 a, double theta);

IncidenceType incidence_type(const SurfaceSpec& spec, double tol = SurfaceTolerances::incidence);

/// Orders and multiplicities from the curve counts m, a', z', p1', p2'.
SurfaceClassification classification_from_counts(int m, int a_abs, int z_axis, int p1, int p2);

/// Closed forms of the classification table, rows selected by type,
/// odd-rose flag and the sign of d - n (n = d = 1 reads as d < n).
SurfaceClassification table2_closed_form(IncidenceType type, bool odd_rose, int n, int d);

/// Counts m, a', z', p1', p2' assigned to a curve of the given type.
struct IncidenceCounts {
  int m = 0, a_abs = 0, z_axis = 0, p1 = 0, p2 = 0;
};
IncidenceCounts incidence_counts(const CurveSpec& curve, IncidenceType type);

/// Incidence detection followed by both classification paths; a mismatch
/// throws std::logic_error.
ClassifiedSurface classify(const SurfaceSpec& spec);

struct SingularCircle {
  CircleKey circle;
  /// Number of distinct curve parameters (within one period) on the circle.
  int multiplicity = 0;
  /// Number of distinct points of the curve on the circle.
  int distinct_points = 0;
  std::vector<double> parameters;
};

std::vector<SingularCircle> singular_circles(const SurfaceSpec& spec, int samples = 2048, double tol = 1e-9);

/// Parameters in [0, 2 d pi) where the curve meets the z axis.
std::vector<double> axis_crossing_parameters(const SurfaceSpec& spec, double tol = SurfaceTolerances::axis);

/// Parameters in [0, 2 d pi) where the curve meets c(0).
std::vector<double> czero_parameters(const SurfaceSpec& spec, int grid = SurfaceTolerances::root_grid,
                                     double tol = 1e-9);

/// Distinct points of the curve on c(0) (singular points of the surface).
std::vector<Vec3> czero_singular_points(const SurfaceSpec& spec, double tol = 1e-9,
                                        int grid = SurfaceTolerances::root_grid);

} // namespace chs
