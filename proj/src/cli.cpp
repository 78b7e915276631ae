#include "chs/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chs/curve.hpp"
#include "chs/error.hpp"
#include "chs/kernels.hpp"
#include "chs/mesh.hpp"
#include "chs/surface.hpp"
#include "chs/verify.hpp"

namespace chs::cli {

namespace {

using json = nlohmann::ordered_json;

// q from "-1", "1/4", "0.5" or the p-notation "p=i", "p=2", "p=3/2i".
Rational parse_q(const std::string& text) {
  if (text.rfind("p=", 0) != 0) return parse_rational(text);
  std::string p = text.substr(2);
  if (p == "i") return Rational(-1);
  if (!p.empty() && p.back() == 'i') {
    const Rational r = parse_rational(p.substr(0, p.size() - 1));
    return -r * r;
  }
  const Rational r = parse_rational(p);
  return r * r;
}

struct CurveArgs {
  int n = 0;
  int d = 0;
  std::string a = "0";

  void attach(CLI::App* app) {
    app->add_option("--n", n, "numerator of the frequency n/d")->required();
    app->add_option("--d", d, "denominator of the frequency n/d")->required();
    app->add_option("--a", a, "offset a >= 0 (num/den or finite decimal)")->capture_default_str();
  }
  CurveSpec spec() const { return make_curve(n, d, parse_rational(a)); }
};

struct SurfaceArgs {
  CurveArgs curve;
  std::string q = "0", cx = "0", cy = "0", h = "0";

  void attach(CLI::App* app) {
    curve.attach(app);
    app->add_option("--q", q, "q = p^2 (-1, 0, 1, ... or p=i, p=1)")->capture_default_str();
    app->add_option("--cx", cx, "x of the curve pole")->capture_default_str();
    app->add_option("--cy", cy, "y of the curve pole")->capture_default_str();
    app->add_option("--h", h, "height of the curve plane")->capture_default_str();
  }
  SurfaceSpec spec() const {
    return {curve.spec(), CongruenceSpec{parse_q(q)}, Placement{parse_rational(cx), parse_rational(cy), parse_rational(h)}};
  }
};

json classification_json(const ClassifiedSurface& c) {
  json j;
  j["type"] = c.label();
  j["order"] = c.values.order;
  j["absolute_conic"] = c.values.absolute_conic_multiplicity;
  j["axis"] = c.values.axis_multiplicity;
  j["directing_points"] = c.values.directing_point_multiplicity;
  if (c.type.j > 0) j["j"] = c.type.j;
  return j;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_singularities_csv(const SurfaceSpec& spec, std::ostream& out) {
  out << "kind,meridian_angle,center_offset,radius,multiplicity,distinct_points,x,y,z\n";
  for (const SingularCircle& c : singular_circles(spec))
    out << "circle," << num(c.circle.meridian_angle) << ',' << num(c.circle.center_offset) << ','
        << num(c.circle.radius) << ',' << c.multiplicity << ',' << c.distinct_points << ",,,\n";
  for (const Vec3& p : czero_singular_points(spec))
    out << "czero_point,,,,,," << num(p.x) << ',' << num(p.y) << ',' << num(p.z) << '\n';
}

// Writes through `out` or, when path is non-empty, a file.
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open '" + path + "' for writing");
  fn(file);
  file.close();
  if (!file) throw DomainError("write to '" + path + "' failed");
}

void write_report(const verify::Report& report, const std::string& suite, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["suite"] = suite;
    j["passed"] = report.passed();
    j["failures"] = report.failures();
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    out << j.dump() << '\n';
    return;
  }
  for (const auto& c : report.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.suite << ' ' << c.name << ": " << c.detail << '\n';
  out << suite << ": " << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed\n";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CHS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("CHS_SEED must be a non-negative integer");
    }
  }
  return 20240501;
}

// "curve props" -> "curve-props", "surface mesh" -> "surface-mesh".
std::vector<std::string> join_two_word(std::vector<std::string> args) {
  if (args.size() >= 2 && (args[0] == "curve" || args[0] == "surface")) {
    args[0] += "-" + args[1];
    args.erase(args.begin() + 1);
  }
  return args;
}

} // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-harmonic curves and generalized rose surfaces"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  int jobs = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  app.add_option("--jobs", jobs, "worker threads for parallel suites (0 = runtime default)");
  app.add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) { seed = s, seed_given = true; },
                                         "seed for the random absolute-point slopes (default CHS_SEED)");

  std::string format;
  std::string out_path;

  CurveArgs props_args;
  auto* props = app.add_subcommand("curve-props", "order and multiplicities of CH(n,d,a)");
  props_args.attach(props);
  props->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CurveArgs implicit_args;
  auto* implicit = app.add_subcommand("curve-implicit", "implicit polynomial of CH(n,d,a)");
  implicit_args.attach(implicit);
  implicit->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CurveArgs sample_args;
  int samples = 512;
  auto* sample_cmd = app.add_subcommand("curve-sample", "CSV polyline of CH(n,d,a) over [0, 2 d pi)");
  sample_args.attach(sample_cmd);
  sample_cmd->add_option("--samples", samples, "number of points")->check(CLI::Range(2, 10000000))->capture_default_str();
  sample_cmd->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

  SurfaceArgs classify_args;
  auto* classify_cmd = app.add_subcommand("surface-classify", "incidence type and classification of CS(CH,p)");
  classify_args.attach(classify_cmd);
  classify_cmd->add_option("--format", format, "json, text or csv (singular circles and points)")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  SurfaceArgs mesh_args;
  int nt = 0, ntheta = 96;
  auto* mesh_cmd = app.add_subcommand("surface-mesh", "triangle mesh of CS(CH,p) as OBJ");
  mesh_args.attach(mesh_cmd);
  mesh_cmd->add_option("--nt", nt, "t samples (default 256 d)");
  mesh_cmd->add_option("--ntheta", ntheta, "theta samples")->capture_default_str();
  mesh_cmd->add_option("--out", out_path, "output file (default stdout)");
  mesh_cmd->add_option("--format", format, "obj")->check(CLI::IsMember({"obj"}));

  std::string figure_id;
  bool list = false;
  int fig_nt = 0, fig_ntheta = 0;
  auto* figure_cmd = app.add_subcommand("figure", "mesh or classification of a figure preset");
  figure_cmd->add_option("id", figure_id, "preset id, 3a ... 9c");
  figure_cmd->add_flag("--list", list, "list the presets");
  figure_cmd->add_option("--nt", fig_nt, "t samples (default from preset)");
  figure_cmd->add_option("--ntheta", fig_ntheta, "theta samples (default from preset)");
  figure_cmd->add_option("--out", out_path, "output file (default stdout)");
  figure_cmd->add_option("--format", format, "obj, json or text")->check(CLI::IsMember({"obj", "json", "text"}));

  std::string suite = "all";
  int vn = 0, vd = 0;
  std::string va = "0";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "table1, table2, residual, invariants or all")
      ->check(CLI::IsMember({"table1", "table2", "residual", "invariants", "all"}))
      ->capture_default_str();
  auto* vn_opt = verify_cmd->add_option("--n", vn, "restrict to one curve: n");
  auto* vd_opt = verify_cmd->add_option("--d", vd, "restrict to one curve: d");
  verify_cmd->add_option("--a", va, "restrict to one curve: a");
  vn_opt->needs(vd_opt);
  vd_opt->needs(vn_opt);
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> args = join_two_word(raw);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (!seed_given) seed = default_seed();
    kernels::set_thread_count(jobs);

    if (props->parsed()) {
      const CurveSpec c = props_args.spec();
      const CurveProperties p = table1_properties(c);
      if (format == "text") {
        out << "order " << p.order << "\norigin " << p.origin_multiplicity << "\nabsolute " << p.absolute_multiplicity
            << "\nshape " << to_string(shape_class(c)) << '\n';
      } else {
        json j;
        j["order"] = p.order;
        j["origin"] = p.origin_multiplicity;
        j["absolute"] = p.absolute_multiplicity;
        j["shape"] = to_string(shape_class(c));
        out << j.dump() << '\n';
      }
    } else if (implicit->parsed()) {
      const MultiPoly f = implicit_equation(implicit_args.spec());
      if (format == "text")
        out << to_string(f) << '\n';
      else
        out << to_json(f).dump() << '\n';
    } else if (sample_cmd->parsed()) {
      const CurveSpec c = sample_args.spec();
      out << "phi,x,y\n";
      const Placement origin;
      for (int k = 0; k < samples; ++k) {
        const double phi = c.full_range() * k / samples;
        const Vec3 p = curve_point(c, origin, phi);
        out << num(phi) << ',' << num(p.x) << ',' << num(p.y) << '\n';
      }
    } else if (classify_cmd->parsed()) {
      const SurfaceSpec s = classify_args.spec();
      if (format == "csv") {
        write_singularities_csv(s, out);
      } else {
        const ClassifiedSurface c = classify(s);
        if (format == "text") {
          out << "type " << c.label();
          if (c.type.j > 0) out << " (j=" << c.type.j << ')';
          out << "\norder " << c.values.order << "\nabsolute conic " << c.values.absolute_conic_multiplicity
              << "\naxis " << c.values.axis_multiplicity << "\ndirecting points "
              << c.values.directing_point_multiplicity << '\n';
        } else {
          out << classification_json(c).dump() << '\n';
        }
      }
    } else if (mesh_cmd->parsed()) {
      const SurfaceSpec s = mesh_args.spec();
      const Mesh m = sample(s, nt > 0 ? nt : 256 * s.curve.d, ntheta);
      emit(out_path, out, [&](std::ostream& o) { export_obj(m, o); });
      if (!out_path.empty() && out_path != "-")
        err << "wrote " << m.vertices.size() << " vertices, " << m.triangles.size() << " triangles to " << out_path << '\n';
    } else if (figure_cmd->parsed()) {
      if (list) {
        for (const FigurePreset& p : list_presets()) out << p.id << '\t' << p.description << '\n';
        return Ok;
      }
      if (figure_id.empty()) {
        err << "figure: missing preset id (see figure --list)\n";
        return Usage;
      }
      const FigurePreset p = figure_preset(figure_id);
      if (format == "json" || format == "text") {
        const ClassifiedSurface c = classify(p.spec);
        if (format == "text") {
          out << p.id << ": " << p.description << "\ntype " << c.label() << "\norder " << c.values.order
              << "\nabsolute conic " << c.values.absolute_conic_multiplicity << "\naxis " << c.values.axis_multiplicity
              << "\ndirecting points " << c.values.directing_point_multiplicity << '\n';
        } else {
          json j;
          j["id"] = p.id;
          j["description"] = p.description;
          j["n"] = p.spec.curve.n;
          j["d"] = p.spec.curve.d;
          j["a"] = to_string(p.spec.curve.a);
          j["q"] = to_string(p.spec.congruence.q);
          j["cx"] = to_string(p.spec.placement.cx);
          j["cy"] = to_string(p.spec.placement.cy);
          j["h"] = to_string(p.spec.placement.height);
          j["nt"] = p.nt;
          j["ntheta"] = p.ntheta;
          j["classification"] = classification_json(c);
          out << j.dump() << '\n';
        }
        return Ok;
      }
      const Mesh m = sample(p.spec, fig_nt > 0 ? fig_nt : p.nt, fig_ntheta > 0 ? fig_ntheta : p.ntheta);
      emit(out_path, out, [&](std::ostream& o) { export_obj(m, o); });
      if (!out_path.empty() && out_path != "-")
        err << "wrote " << m.vertices.size() << " vertices, " << m.triangles.size() << " triangles to " << out_path << '\n';
    } else if (verify_cmd->parsed()) {
      std::vector<CurveSpec> specs;
      if (vn_opt->count() > 0)
        specs.push_back(make_curve(vn, vd, parse_rational(va)));
      else
        specs = verify::default_grid();
      const verify::Report report = verify::run_suite(suite, specs, seed);
      write_report(report, suite, format, out);
      return report.passed() ? Ok : Domain;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return Domain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return Domain;
  }
  return Ok;
}

} // namespace chs::cli
