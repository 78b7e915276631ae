#include "chs/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "chs/error.hpp"

namespace chs {

namespace {

using kernels::RowKind;

std::vector<double> row_grid(const SurfaceSpec& spec, int nt) {
  const double range = spec.curve.full_range();
  const double step = range / nt;
  std::vector<double> ts(static_cast<std::size_t>(nt));
  for (int i = 0; i < nt; ++i) ts[static_cast<std::size_t>(i)] = step * i;

  std::vector<double> special = axis_crossing_parameters(spec);
  const std::vector<double> roots = czero_parameters(spec);
  special.insert(special.end(), roots.begin(), roots.end());

  std::vector<std::uint8_t> taken(ts.size(), 0);
  std::vector<double> extra;
  for (double s : special) {
    auto i = static_cast<std::size_t>(std::lround(s / step)) % ts.size();
    if (!taken[i]) {
      ts[i] = s;
      taken[i] = 1;
    } else {
      extra.push_back(s);
    }
  }
  ts.insert(ts.end(), extra.begin(), extra.end());
  std::sort(ts.begin(), ts.end());
  return ts;
}

double triangle_area(Vec3 a, Vec3 b, Vec3 c) { return 0.5 * cross(b - a, c - a).norm(); }

} // namespace

Mesh sample(const SurfaceSpec& spec, int nt, int ntheta, kernels::Exec exec) {
  spec.validate();
  if (nt < 8 || ntheta < 8) throw DomainError("mesh needs nt >= 8 and ntheta >= 8");

  const std::vector<double> ts = row_grid(spec, nt);
  const std::vector<kernels::SurfaceRow> rows = kernels::sample_rows(spec, ts, ntheta, exec);

  Mesh mesh;
  std::vector<std::uint32_t> first(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    mesh.row_parameters.push_back(rows[r].t);
    first[r] = static_cast<std::uint32_t>(mesh.vertices.size());
    if (rows[r].kind != RowKind::Regular) mesh.degenerate_rows.push_back({r, rows[r].t, rows[r].kind});
    mesh.vertices.insert(mesh.vertices.end(), rows[r].ring.begin(), rows[r].ring.end());
  }
  if (mesh.degenerate_rows.size() == rows.size()) throw DomainError("every mesh row is degenerate");

  double scale = 1.0;
  for (const Vec3& v : mesh.vertices) scale = std::max(scale, v.norm());
  const double min_area = 1e-14 * scale * scale;
  auto emit = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (triangle_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]) > min_area) mesh.triangles.push_back({a, b, c});
  };

  const auto m = static_cast<std::uint32_t>(ntheta);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t s = (r + 1) % rows.size();
    const RowKind k0 = rows[r].kind, k1 = rows[s].kind;
    if (k0 == RowKind::Skipped || k1 == RowKind::Skipped) continue;
    const std::uint32_t b0 = first[r], b1 = first[s];
    if (k0 == RowKind::Regular && k1 == RowKind::Regular) {
      for (std::uint32_t k = 0; k < m; ++k) {
        const std::uint32_t kn = (k + 1) % m;
        emit(b0 + k, b0 + kn, b1 + kn);
        emit(b0 + k, b1 + kn, b1 + k);
      }
    } else if (k0 == RowKind::Regular && k1 == RowKind::Collapsed) {
      for (std::uint32_t k = 0; k < m; ++k) emit(b0 + k, b0 + (k + 1) % m, b1);
    } else if (k0 == RowKind::Collapsed && k1 == RowKind::Regular) {
      for (std::uint32_t k = 0; k < m; ++k) emit(b0, b1 + (k + 1) % m, b1 + k);
    }
  }
  return mesh;
}

void export_obj(const Mesh& mesh, std::ostream& out) {
  char buf[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  if (!out) throw std::runtime_error("OBJ write failed");
}

Mesh read_obj(std::istream& in) {
  Mesh mesh;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z)) throw DomainError("bad vertex on OBJ line " + std::to_string(lineno));
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<std::uint32_t, 3> f{};
      for (auto& idx : f) {
        std::string tok;
        if (!(ls >> tok)) throw DomainError("short face on OBJ line " + std::to_string(lineno));
        const long i = std::stol(tok.substr(0, tok.find('/')));
        if (i < 1 || static_cast<std::size_t>(i) > mesh.vertices.size())
          throw DomainError("face index out of range on OBJ line " + std::to_string(lineno));
        idx = static_cast<std::uint32_t>(i - 1);
      }
      mesh.triangles.push_back(f);
    }
  }
  return mesh;
}

namespace {

SurfaceSpec make_spec(int n, int d, Rational a, Rational q, Rational cx, Rational h) {
  return {make_curve(n, d, std::move(a)), CongruenceSpec{std::move(q)}, Placement{std::move(cx), Rational(0), std::move(h)}};
}

std::vector<FigurePreset> build_presets() {
  const Rational zero(0), one(1), minus_one(-1);
  const auto r = [](long p, long q = 1) { return make_rational(p, q); };
  std::vector<FigurePreset> out;
  auto add = [&](std::string id, SurfaceSpec spec, std::string text) {
    out.push_back({std::move(id), spec, 256 * spec.curve.d, 96, std::move(text)});
  };
  const char* fig3[] = {"3a", "3b", "3c", "3d"};
  const Rational a3[] = {r(0), r(1, 4), r(1), r(5, 2)};
  for (int i = 0; i < 4; ++i)
    add(fig3[i], make_spec(7, 3, a3[i], zero, zero, zero), "CH(7,3," + to_string(a3[i]) + "), parabolic, pole on the axis in z=0");
  add("4a", make_spec(3, 1, r(5, 4), one, zero, minus_one), "CH(3,1,5/4), p=1, pole on the axis in z=-1");
  add("4b", make_spec(2, 3, r(5, 4), one, zero, minus_one), "CH(2,3,5/4), p=1, pole on the axis in z=-1");
  add("4c", make_spec(7, 3, r(5, 4), one, zero, minus_one), "CH(7,3,5/4), p=1, pole on the axis in z=-1");
  const char* fig5[] = {"5a", "5b", "5c"};
  const Rational h5[] = {r(0), r(1, 2), r(1)};
  for (int i = 0; i < 3; ++i)
    add(fig5[i], make_spec(9, 2, r(2), minus_one, zero, h5[i]), "CH(9,2,2), p=i, pole on the axis in z=" + to_string(h5[i]));
  add("6a", make_spec(7, 1, r(2), minus_one, zero, r(3, 4)), "CH(7,1,2), p=i, pole on the axis in z=3/4");
  add("6b", make_spec(7, 1, r(2), minus_one, zero, zero), "CH(7,1,2), p=i, pole on the axis in z=0, touches c(0)");
  add("6c", make_spec(7, 1, r(3, 2), minus_one, zero, zero), "CH(7,1,3/2), p=i, pole on the axis in z=0, crosses c(0)");
  add("7a", make_spec(3, 1, r(0), zero, r(-1), zero), "CH(3,1,0), p=0, pole at (-1,0,0): petal tip on the axis");
  add("7b", make_spec(3, 2, r(1, 2), zero, r(1, 2), zero), "CH(3,2,1/2), p=0, pole at (1/2,0,0): triple point on the axis");
  add("7c", make_spec(3, 2, r(0), zero, r(-1), zero), "CH(3,2,0), p=0, pole at (-1,0,0): petal tip on the axis");
  add("8a", make_spec(3, 1, r(0), one, r(-1), zero), "CH(3,1,0), p=1, pole at (-1,0,0): petal tip on the axis");
  add("8b", make_spec(3, 1, r(0), minus_one, r(-1), zero), "CH(3,1,0), p=i, pole at (-1,0,0): petal tip on the axis");
  add("8c", make_spec(5, 1, r(0), minus_one, r(-1), zero), "CH(5,1,0), p=i, pole at (-1,0,0): petal tip on the axis");
  add("9a", make_spec(3, 1, r(0), one, one, zero), "CH(3,1,0), p=1, triple point at (1,0,0)");
  add("9b", make_spec(3, 1, r(0), zero, one, zero), "CH(3,1,0), p=0, triple point at (1,0,0)");
  add("9c", make_spec(3, 1, r(0), minus_one, one, zero), "CH(3,1,0), p=i, triple point at (1,0,0)");
  return out;
}

} // namespace

std::vector<FigurePreset> list_presets() {
  static const std::vector<FigurePreset> presets = build_presets();
  return presets;
}

FigurePreset figure_preset(std::string_view id) {
  for (const FigurePreset& p : list_presets())
    if (p.id == id) return p;
  throw DomainError("unknown figure preset '" + std::string(id) + "'; try `figure --list`");
}

} // namespace chs
