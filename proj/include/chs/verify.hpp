#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chs/curve.hpp"
#include "chs/mesh.hpp"

namespace chs::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  void append(const Report& other);
};

/// Coprime (n, d) with n, d <= 9 and a in {0, 1/4, 1/2, 1, 5/2}.
std::vector<CurveSpec> default_grid();

/// Degree, origin multiplicity, tangent cone and absolute multiplicity of
/// every spec against the curve table.
Report table1(const std::vector<CurveSpec>& specs, std::uint64_t seed);

/// Closed-form surface rows against the count formulas, all types and
/// variants, per spec. Also reports coverage of the 20 table rows.
Report table2(const std::vector<CurveSpec>& specs);

/// Scaled residual of the implicit equation on `samples` polar points.
Report residual(const std::vector<CurveSpec>& specs, int samples = 256, double threshold = 1e-9);

/// Sum and closed forms of the tangent-cone constant.
Report a_constant(const std::vector<CurveSpec>& specs, double rel_tol = 1e-10);

/// Geometric surface invariants on `samples` parameters per preset.
Report invariants(const std::vector<FigurePreset>& presets, int samples = 64);

/// table1, table2, residual, invariants or all.
Report run_suite(std::string_view suite, const std::vector<CurveSpec>& specs, std::uint64_t seed);

} // namespace chs::verify
