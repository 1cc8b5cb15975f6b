#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ews/cli.hpp"
#include "json.hpp"
#include "support/meshes.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> argv_s{"ews"};
  argv_s.insert(argv_s.end(), args);
  std::vector<const char*> argv;
  for (const auto& a : argv_s) argv.push_back(a.c_str());
  return ews::cli::run(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() /
           fs::path("ews_cli_test_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
  fs::path path;
  static inline int counter = 0;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

void replace_once(std::string& text, const std::string& from,
                  const std::string& to) {
  const size_t pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string base_config(const std::string& kind, const std::string& extra,
                        const std::string& output_path) {
  return std::string(R"({
  "params": {"lambda": 2.0, "mu": 1.0, "omega": 1.0},
  "incident": {
    "d": [0.3, -0.5, 0.81],
    "dperp": [0.68494127095673119, 0.34509788173878125, -0.040658568416825615],
    "alpha_p": [1.0, 0.0],
    "alpha_s": [1.0, 0.0]
  },
  "scatterer": {"radius": 1.0, "kind": ")") +
         kind + R"("},
  "truncation": 20)" + extra +
         R"(,
  "output": {"path": ")" + output_path + R"(", "format": "json"}
})";
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  CHECK(run_cli({"frobnicate", "x.json"}) == 64);
  CHECK(run_cli({}) == 64);
  CHECK(run_cli({"solve"}) == 64);
}

TEST_CASE("missing or malformed config exits with 2") {
  TempDir tmp;
  CHECK(run_cli({"solve", tmp.file("missing.json")}) == 2);

  write_text(tmp.file("broken.json"), "{ \"params\": { \n  oops\n}");
  CHECK(run_cli({"solve", tmp.file("broken.json")}) == 2);

  write_text(tmp.file("incomplete.json"), R"({"params": {"lambda": 2.0}})");
  CHECK(run_cli({"solve", tmp.file("incomplete.json")}) == 2);
}

TEST_CASE("domain errors exit with 1") {
  TempDir tmp;
  // interior field point
  const std::string cfg = base_config(
      "IV", R"(,
  "field": {"part": "total", "points": [[0.2, 0.0, 0.0]]})",
      tmp.file("out.json"));
  write_text(tmp.file("cfg.json"), cfg);
  CHECK(run_cli({"field", tmp.file("cfg.json")}) == 1);
}

TEST_CASE("solve with a zero incident wave writes zero coefficients") {
  TempDir tmp;
  std::string cfg = base_config("IV", "", tmp.file("sol.json"));
  replace_once(cfg, "\"alpha_p\": [1.0, 0.0]", "\"alpha_p\": [0.0, 0.0]");
  replace_once(cfg, "\"alpha_s\": [1.0, 0.0]", "\"alpha_s\": [0.0, 0.0]");
  write_text(tmp.file("cfg.json"), cfg);
  REQUIRE(run_cli({"solve", tmp.file("cfg.json")}) == 0);
  const json sol = json::parse(read_text(tmp.file("sol.json")));
  CHECK(sol.at("schema") == "1");
  for (const auto& row : sol.at("a")) {
    CHECK(row[2].get<double>() == 0.0);
    CHECK(row[3].get<double>() == 0.0);
  }
}

TEST_CASE("solve then residuals: deterministic byte-identical reruns") {
  TempDir tmp;
  write_text(tmp.file("cfg.json"), base_config("IV", "", tmp.file("sol.json")));

  REQUIRE(run_cli({"solve", tmp.file("cfg.json")}) == 0);
  const std::string sol1 = read_text(tmp.file("sol.json"));
  REQUIRE(run_cli({"solve", tmp.file("cfg.json")}) == 0);
  CHECK(read_text(tmp.file("sol.json")) == sol1);

  write_text(tmp.file("res_cfg.json"),
             base_config("IV", "", tmp.file("res.json")));
  REQUIRE(run_cli({"residuals", tmp.file("res_cfg.json")}) == 0);
  const std::string res1 = read_text(tmp.file("res.json"));
  REQUIRE(run_cli({"residuals", tmp.file("res_cfg.json")}) == 0);
  CHECK(read_text(tmp.file("res.json")) == res1);

  const json res = json::parse(res1);
  CHECK(res.at("kind") == "IV");
  CHECK(res.at("first").at("max").get<double>() < 1e-8);
  CHECK(res.at("second").at("max").get<double>() < 1e-8);
}

TEST_CASE("field from a solution file equals in-process evaluation") {
  TempDir tmp;
  write_text(tmp.file("solve_cfg.json"),
             base_config("III", "", tmp.file("sol.json")));
  REQUIRE(run_cli({"solve", tmp.file("solve_cfg.json")}) == 0);

  const std::string pts = R"(,
  "field": {"part": "total", "points": [[1.5, 0.2, -0.4], [0.0, 2.0, 1.0]]})";

  std::string direct_cfg = base_config("III", pts, tmp.file("direct.csv"));
  replace_once(direct_cfg, "\"format\": \"json\"", "\"format\": \"csv\"");
  write_text(tmp.file("direct_cfg.json"), direct_cfg);
  REQUIRE(run_cli({"field", tmp.file("direct_cfg.json")}) == 0);

  std::string loaded_cfg = base_config(
      "III",
      pts + R"(,
  "solution_file": ")" + tmp.file("sol.json") + "\"",
      tmp.file("loaded.csv"));
  replace_once(loaded_cfg, "\"format\": \"json\"", "\"format\": \"csv\"");
  write_text(tmp.file("loaded_cfg.json"), loaded_cfg);
  REQUIRE(run_cli({"field", tmp.file("loaded_cfg.json")}) == 0);

  const std::string direct = read_text(tmp.file("direct.csv"));
  CHECK(direct == read_text(tmp.file("loaded.csv")));
  CHECK(direct.substr(0, 2) == "x,");
}

TEST_CASE("farfield output feeds compare") {
  TempDir tmp;
  write_text(tmp.file("ff_cfg.json"), base_config("IV", "", tmp.file("ff.json")));
  REQUIRE(run_cli({"farfield", tmp.file("ff_cfg.json")}) == 0);

  std::string cfg2 = base_config("IV", "", tmp.file("ff2.json"));
  replace_once(cfg2, "\"alpha_s\": [1.0, 0.0]", "\"alpha_s\": [0.5, 0.0]");
  write_text(tmp.file("ff2_cfg.json"), cfg2);
  REQUIRE(run_cli({"farfield", tmp.file("ff2_cfg.json")}) == 0);

  const std::string cmp_cfg = R"({
  "compare": {
    "farfield_a": ")" + tmp.file("ff.json") +
                              R"(",
    "farfield_b": ")" + tmp.file("ff2.json") +
                              R"(",
    "psi": {"epsilon": 0.001, "s": 1.0, "C": 1.0, "alpha": 1.0}
  },
  "output": {"path": ")" + tmp.file("cmp.json") +
                              R"(", "format": "json"}
})";
  write_text(tmp.file("cmp_cfg.json"), cmp_cfg);
  REQUIRE(run_cli({"compare", tmp.file("cmp_cfg.json")}) == 0);
  const json cmp = json::parse(read_text(tmp.file("cmp.json")));
  CHECK(cmp.at("farfield_distance").get<double>() > 0.0);
  CHECK(cmp.at("stability_bound").get<double>() > 0.0);
  CHECK(cmp.at("stability_bound").get<double>() < 1.0);

  // identical inputs give distance zero
  const std::string cmp0_cfg = R"({
  "compare": {"farfield_a": ")" + tmp.file("ff.json") +
                               R"(", "farfield_b": ")" + tmp.file("ff.json") +
                               R"("},
  "output": {"path": ")" + tmp.file("cmp0.json") + R"("}
})";
  write_text(tmp.file("cmp0_cfg.json"), cmp0_cfg);
  REQUIRE(run_cli({"compare", tmp.file("cmp0_cfg.json")}) == 0);
  CHECK(json::parse(read_text(tmp.file("cmp0.json")))
            .at("farfield_distance")
            .get<double>() == 0.0);
}

TEST_CASE("surface verdict on a plane mesh") {
  TempDir tmp;
  // write the grid mesh as OBJ
  const auto mesh = meshes::planar_grid(6, 2.0);
  std::ostringstream obj;
  for (const auto& v : mesh.vertices) {
    obj << "v " << v(0) << " " << v(1) << " " << v(2) << "\n";
  }
  for (const auto& f : mesh.faces) {
    obj << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  }
  write_text(tmp.file("plane.obj"), obj.str());

  const std::string cfg = R"({
  "surface": {"mesh": ")" + tmp.file("plane.obj") +
                          R"(", "kind": "III"},
  "output": {"path": ")" + tmp.file("surf.json") + R"("}
})";
  write_text(tmp.file("surf_cfg.json"), cfg);
  REQUIRE(run_cli({"surface", tmp.file("surf_cfg.json")}) == 0);
  const json report = json::parse(read_text(tmp.file("surf.json")));
  CHECK(report.at("admissible").get<bool>());
  CHECK(report.at("verdict_iii").get<bool>());
  CHECK(report.at("max_abs_H").get<double>() < 1e-8);
}

TEST_CASE("decouple reports the non-decoupling signal") {
  TempDir tmp;
  write_text(tmp.file("cfg.json"), base_config("III", "", tmp.file("dec.json")));
  REQUIRE(run_cli({"decouple", tmp.file("cfg.json")}) == 0);
  const json rep = json::parse(read_text(tmp.file("dec.json")));
  CHECK(rep.at("vector").at("max").get<double>() > 1e-3);
  CHECK(rep.at("scalar").at("max").get<double>() > 1e-3);
}

TEST_CASE("expand error sweep decreases with N") {
  TempDir tmp;
  const std::string cfg = R"({
  "expand": {
    "k": 2.0, "d": [0, 0, 1], "dperp": [1, 0, 0],
    "radius": 2.0, "samples": 20, "truncations": [10, 20, 40]
  },
  "output": {"path": ")" + tmp.file("expand.json") +
                          R"("}
})";
  write_text(tmp.file("cfg.json"), cfg);
  REQUIRE(run_cli({"expand", tmp.file("cfg.json")}) == 0);
  const json rep = json::parse(read_text(tmp.file("expand.json")));
  const auto& rows = rep.at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][1].get<double>() < rows[0][1].get<double>());
  CHECK(rows[2][1].get<double>() < 1e-10);
  CHECK(rows[2][2].get<double>() < 1e-10);
}

TEST_CASE("environment variable overrides only the output directory") {
  TempDir tmp;
  TempDir redirect;
  write_text(tmp.file("cfg.json"), base_config("IV", "", tmp.file("sol.json")));
  setenv("EWS_OUTPUT_DIR", redirect.path.string().c_str(), 1);
  const int rc = run_cli({"solve", tmp.file("cfg.json")});
  unsetenv("EWS_OUTPUT_DIR");
  REQUIRE(rc == 0);
  CHECK(fs::exists(redirect.path / "sol.json"));
  CHECK_FALSE(fs::exists(tmp.file("sol.json")));
}
