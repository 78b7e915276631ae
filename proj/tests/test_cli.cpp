#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chs/cli.hpp"
#include "chs/mesh.hpp"

using namespace chs;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {
  TEST_CASE("curve-props") {
    const Result r = run({"curve-props", "--n", "7", "--d", "3", "--a", "1/4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"order\":20,\"origin\":14,\"absolute\":6,\"shape\":\"prolate\"}\n");
    CHECK(run({"curve", "props", "--n", "7", "--d", "3", "--a", "0.25"}).out == r.out);
    CHECK(run({"curve-props", "--n", "3", "--d", "1", "--a", "5/2"}).out ==
          "{\"order\":8,\"origin\":6,\"absolute\":2,\"shape\":\"curtate\"}\n");
  }

  TEST_CASE("surface-classify") {
    const Result r = run({"surface-classify", "--n", "9", "--d", "2", "--a", "2", "--q", "-1", "--cx", "0", "--cy", "0", "--h", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"type\":\"2B\",\"order\":40,\"absolute_conic\":4,\"axis\":32,\"directing_points\":36}\n");
    const Result p = run({"surface", "classify", "--n", "3", "--d", "1", "--q", "p=i", "--cx", "-1"});
    CHECK(p.out == "{\"type\":\"4A\",\"order\":9,\"absolute_conic\":3,\"axis\":3,\"directing_points\":6,\"j\":1}\n");
    const Result csv = run({"surface-classify", "--n", "7", "--d", "1", "--a", "2", "--q", "-1", "--format", "csv"});
    CHECK(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    int points = 0;
    while (std::getline(lines, line)) points += line.rfind("czero_point", 0) == 0;
    CHECK(points == 7);
  }

  TEST_CASE("curve-implicit and curve-sample") {
    const Result r = run({"curve-implicit", "--n", "1", "--d", "1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["terms"].size() == 3);
    CHECK(run({"curve-implicit", "--n", "1", "--d", "1", "--format", "text"}).out.find("x^2") != std::string::npos);
    const Result s = run({"curve-sample", "--n", "3", "--d", "1", "--samples", "4"});
    CHECK(s.out.rfind("phi,x,y\n0,1,0\n", 0) == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"curve-props", "--n", "2", "--d", "4"}).code == 1);
    CHECK(run({"curve-props", "--n", "2", "--d", "3", "--a", "1/3.5"}).code == 1);
    CHECK(run({"curve-props", "--n", "2", "--d", "3", "--a", "-1"}).code == 1);
    CHECK(run({"curve-props", "--d", "3"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"curve-props", "--n", "2", "--d", "3", "--format", "xml"}).code == 2);
    CHECK(run({"figure", "12z"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    const Result near = run({"surface-classify", "--n", "3", "--d", "1", "--cx", "-1.00000001"});
    CHECK(near.code == 1);
    CHECK(near.err.find("ambiguous") != std::string::npos);
  }

  TEST_CASE("figure") {
    const Result list = run({"figure", "--list"});
    CHECK(list.code == 0);
    CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 22);
    const Result j = run({"figure", "7a", "--format", "json"});
    const auto rec = nlohmann::json::parse(j.out);
    CHECK(rec["classification"]["order"] == 8);
    CHECK(rec["classification"]["directing_points"] == 5);

    const auto path = std::filesystem::temp_directory_path() / "chs_cli_fig9b.obj";
    const Result obj = run({"figure", "9b", "--nt", "32", "--ntheta", "16", "--out", path.string()});
    CHECK(obj.code == 0);
    std::ifstream in(path);
    const Mesh m = read_obj(in);
    CHECK(m.vertices.size() == 32u * 16u);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify") {
    const Result r = run({"verify", "residual", "--n", "7", "--d", "3", "--a", "1/4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS residual CH(7,3,1/4)") != std::string::npos);
    const Result t = run({"verify", "table2", "--format", "json"});
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["passed"] == true);
    CHECK(run({"verify", "nonsense"}).code == 2);
    // global options are accepted after the subcommand too
    const Result single = run({"verify", "table2", "--n", "4", "--d", "3", "--jobs", "2"});
    CHECK(single.code == 0);
    CHECK(single.out.find("5/5 rows instantiated") != std::string::npos);
  }

  TEST_CASE("deterministic output and seeds") {
    const std::vector<std::string> args{"verify", "table1", "--n", "5", "--d", "2", "--a", "1/2"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> seeded{"--seed", "7"};
    seeded.insert(seeded.end(), args.begin(), args.end());
    CHECK(run(seeded).code == 0);
  }
}
