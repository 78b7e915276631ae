#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chs/kernels.hpp"
#include "chs/surface.hpp"

namespace chs {

struct DegenerateRow {
  std::size_t index = 0;
  double t = 0.0;
  kernels::RowKind kind = kernels::RowKind::Skipped;
};

/// Triangle mesh of a sampled surface. Indices are 0-based.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<DegenerateRow> degenerate_rows;
  /// t of every row, in order.
  std::vector<double> row_parameters;
};

/// Samples t over [0, 2 d pi) and theta over [0, 2 pi), both cyclic. The
/// uniform t grid is adjusted so every axis crossing and every c(0) contact
/// gets a row of its own (the nearest grid row is moved onto it, or a row is
/// inserted when that one is already taken).
Mesh sample(const SurfaceSpec& spec, int nt, int ntheta, kernels::Exec exec = kernels::Exec::Parallel);

/// ASCII OBJ: "v x y z" with 17 significant digits, then 1-based "f i j k".
void export_obj(const Mesh& mesh, std::ostream& out);

/// Reads the v and f records of an OBJ stream (other records are ignored).
Mesh read_obj(std::istream& in);

struct FigurePreset {
  std::string id;
  SurfaceSpec spec;
  int nt = 0;
  int ntheta = 0;
  std::string description;
};

/// Presets "3a" ... "9c". Throws DomainError for an unknown id.
FigurePreset figure_preset(std::string_view id);
std::vector<FigurePreset> list_presets();

} // namespace chs
