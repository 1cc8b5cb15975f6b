#include "ews/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ews/ball_solver.hpp"
#include "ews/decoupling.hpp"
#include "ews/geometry.hpp"
#include "ews/jsonout.hpp"
#include "ews/metrics.hpp"
#include "ews/solution_io.hpp"
#include "json.hpp"

namespace ews::cli {

namespace {

namespace fs = std::filesystem;
using jsonout::JsonWriter;
using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void config_fail(const std::string& msg) {
  throw ConfigError(msg);
}

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) config_fail("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // report the line of the parse failure
    size_t line = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    config_fail("config parse error in " + path + " at line " +
                std::to_string(line) + ": " + e.what());
  }
}

const json& require(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end()) {
    config_fail(std::string("missing config field '") + field + "'");
  }
  return *it;
}

double get_number(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number()) {
    config_fail(std::string("config field '") + field + "' must be a number");
  }
  return v.get<double>();
}

Vec3 get_vec3(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_array() || v.size() != 3) {
    config_fail(std::string("config field '") + field +
                "' must be [x, y, z]");
  }
  return Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
}

Complex get_complex(const json& j, const char* field) {
  const json& v = require(j, field);
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (!v.is_array() || v.size() != 2) {
    config_fail(std::string("config field '") + field +
                "' must be a number or [re, im]");
  }
  return Complex(v[0].get<double>(), v[1].get<double>());
}

wavefuncs::WaveParams read_params(const json& cfg) {
  const json& p = require(cfg, "params");
  return wavefuncs::WaveParams(get_number(p, "lambda"), get_number(p, "mu"),
                               get_number(p, "omega"));
}

wavefuncs::IncidentWave read_incident(const json& cfg) {
  const json& p = require(cfg, "incident");
  return wavefuncs::IncidentWave(harmonics::UnitVector(get_vec3(p, "d")),
                                 harmonics::UnitVector(get_vec3(p, "dperp")),
                                 get_complex(p, "alpha_p"),
                                 get_complex(p, "alpha_s"));
}

ball::BallScatterer read_scatterer(const json& cfg) {
  const json& p = require(cfg, "scatterer");
  const std::string kind = require(p, "kind").get<std::string>();
  if (kind != "III" && kind != "IV") {
    config_fail("scatterer.kind must be \"III\" or \"IV\"");
  }
  return ball::BallScatterer(
      get_number(p, "radius"),
      kind == "III" ? BoundaryKind::III : BoundaryKind::IV);
}

int read_truncation(const json& cfg, const wavefuncs::WaveParams& params,
                    const ball::BallScatterer& scatterer) {
  if (cfg.contains("truncation")) {
    const int n = cfg["truncation"].get<int>();
    if (n < 1) config_fail("truncation must be >= 1");
    return n;
  }
  return wavefuncs::default_truncation(params.ks * scatterer.radius);
}

struct GridSpec {
  int ntheta;
  int nphi;
};

GridSpec read_grid(const json& cfg, const char* name, GridSpec fallback) {
  if (!cfg.contains("grids") || !cfg["grids"].contains(name)) return fallback;
  const json& g = cfg["grids"][name];
  return GridSpec{static_cast<int>(get_number(g, "ntheta")),
                  static_cast<int>(get_number(g, "nphi"))};
}

struct OutputSpec {
  std::string path;
  std::string format;  // "json" or "csv"
};

OutputSpec read_output(const json& cfg, const std::string& flag_override) {
  OutputSpec out;
  out.format = "json";
  if (cfg.contains("output")) {
    const json& o = cfg["output"];
    if (o.contains("path")) out.path = o["path"].get<std::string>();
    if (o.contains("format")) out.format = o["format"].get<std::string>();
  }
  if (!flag_override.empty()) out.path = flag_override;
  if (out.path.empty()) config_fail("no output path given");
  if (out.format != "json" && out.format != "csv") {
    config_fail("output.format must be \"json\" or \"csv\"");
  }
  // The environment may redirect the output directory, nothing else.
  if (const char* dir = std::getenv("EWS_OUTPUT_DIR")) {
    out.path = (fs::path(dir) / fs::path(out.path).filename()).string();
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ball::MultipoleSolution obtain_solution(const json& cfg) {
  if (cfg.contains("solution_file")) {
    return solution_io::load(cfg["solution_file"].get<std::string>());
  }
  const auto params = read_params(cfg);
  const auto incident = read_incident(cfg);
  const auto scatterer = read_scatterer(cfg);
  return ball::solve_ball(params, incident, scatterer,
                          read_truncation(cfg, params, scatterer));
}

void write_residual_norms(JsonWriter& w, const ball::ResidualNorms& n) {
  w.begin_object();
  w.key("max");
  w.value(n.max_norm);
  w.key("l2");
  w.value(n.l2_norm);
  w.end_object();
}

// ---------------------------------------------------------------- solve

int cmd_solve(const json& cfg, const OutputSpec& out) {
  const ball::MultipoleSolution sol = obtain_solution(cfg);
  write_file(out.path, solution_io::to_json(sol));
  return 0;
}

// ---------------------------------------------------------------- field

std::vector<Vec3> read_field_points(const json& cfg) {
  const json& f = require(cfg, "field");
  std::vector<Vec3> pts;
  if (f.contains("points")) {
    for (const auto& row : f["points"]) {
      if (!row.is_array() || row.size() != 3) {
        config_fail("field.points rows must be [x, y, z]");
      }
      pts.emplace_back(row[0].get<double>(), row[1].get<double>(),
                       row[2].get<double>());
    }
  } else if (f.contains("shell")) {
    const json& s = f["shell"];
    const double radius = get_number(s, "radius");
    const auto q = harmonics::sphere_quadrature(
        static_cast<int>(get_number(s, "ntheta")),
        static_cast<int>(get_number(s, "nphi")));
    for (const auto& dir : q.dirs) pts.push_back(radius * dir.v());
  } else {
    config_fail("field needs either 'points' or 'shell'");
  }
  if (pts.empty()) config_fail("field point list is empty");
  return pts;
}

ball::FieldPart read_field_part(const json& cfg) {
  std::string part = "total";
  if (cfg.contains("field") && cfg["field"].contains("part")) {
    part = cfg["field"]["part"].get<std::string>();
  }
  if (part == "incident") return ball::FieldPart::Incident;
  if (part == "scattered") return ball::FieldPart::Scattered;
  if (part == "total") return ball::FieldPart::Total;
  if (part == "P") return ball::FieldPart::P;
  if (part == "S") return ball::FieldPart::S;
  config_fail("field.part must be one of incident|scattered|total|P|S");
}

int cmd_field(const json& cfg, const OutputSpec& out) {
  const ball::MultipoleSolution sol = obtain_solution(cfg);
  const std::vector<Vec3> pts = read_field_points(cfg);
  const ball::FieldPart part = read_field_part(cfg);
  const auto samples = ball::eval_field(sol, pts, part);

  if (out.format == "csv") {
    std::string csv = "x,y,z,re_ux,im_ux,re_uy,im_uy,re_uz,im_uz\n";
    for (const auto& s : samples) {
      csv += format_g17(s.point(0)) + "," + format_g17(s.point(1)) + "," +
             format_g17(s.point(2));
      for (int c = 0; c < 3; ++c) {
        csv += "," + format_g17(s.value(c).real()) + "," +
               format_g17(s.value(c).imag());
      }
      csv += "\n";
    }
    write_file(out.path, csv);
    return 0;
  }

  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("part");
  w.value(cfg.contains("field") && cfg["field"].contains("part")
              ? cfg["field"]["part"].get<std::string>()
              : std::string("total"));
  w.key("samples");
  w.begin_array();
  for (const auto& s : samples) {
    w.begin_array(true);
    for (int c = 0; c < 3; ++c) w.value(s.point(c));
    for (int c = 0; c < 3; ++c) {
      w.value(s.value(c).real());
      w.value(s.value(c).imag());
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- farfield

int cmd_farfield(const json& cfg, const OutputSpec& out) {
  const ball::MultipoleSolution sol = obtain_solution(cfg);
  const GridSpec gs = read_grid(cfg, "farfield", GridSpec{16, 32});
  const auto q = harmonics::sphere_quadrature(gs.ntheta, gs.nphi);
  const auto ff = ball::far_field(sol, q.dirs);

  if (out.format == "csv") {
    std::string csv = "x,y,z,weight";
    for (const char* tag : {"up", "us", "ut"}) {
      for (const char* c : {"x", "y", "z"}) {
        csv += std::string(",re_") + tag + "_" + c + ",im_" + tag + "_" + c;
      }
    }
    csv += "\n";
    for (size_t i = 0; i < q.dirs.size(); ++i) {
      csv += format_g17(q.dirs[i].x()) + "," + format_g17(q.dirs[i].y()) +
             "," + format_g17(q.dirs[i].z()) + "," + format_g17(q.weights[i]);
      for (const auto* field : {&ff.up, &ff.us, &ff.ut}) {
        for (int c = 0; c < 3; ++c) {
          csv += "," + format_g17((*field)[i](c).real()) + "," +
                 format_g17((*field)[i](c).imag());
        }
      }
      csv += "\n";
    }
    write_file(out.path, csv);
    return 0;
  }

  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("kp");
  w.value(sol.params.kp);
  w.key("ks");
  w.value(sol.params.ks);
  w.key("grid");
  w.begin_object();
  w.key("ntheta");
  w.value(gs.ntheta);
  w.key("nphi");
  w.value(gs.nphi);
  w.end_object();
  auto write_field = [&](const char* name, const std::vector<CVec3>& f) {
    w.key(name);
    w.begin_array();
    for (size_t i = 0; i < f.size(); ++i) {
      w.begin_array(true);
      for (int c = 0; c < 3; ++c) {
        w.value(f[i](c).real());
        w.value(f[i](c).imag());
      }
      w.end_array();
    }
    w.end_array();
  };
  w.key("dirs");
  w.begin_array();
  for (size_t i = 0; i < q.dirs.size(); ++i) {
    w.begin_array(true);
    w.value(q.dirs[i].x());
    w.value(q.dirs[i].y());
    w.value(q.dirs[i].z());
    w.value(q.weights[i]);
    w.end_array();
  }
  w.end_array();
  write_field("up", ff.up);
  write_field("us", ff.us);
  write_field("ut", ff.ut);
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- residuals

int cmd_residuals(const json& cfg, const OutputSpec& out) {
  const ball::MultipoleSolution sol = obtain_solution(cfg);
  const GridSpec gs = read_grid(cfg, "boundary", GridSpec{32, 64});
  const auto res =
      ball::boundary_residuals(sol, ball::boundary_grid(gs.ntheta, gs.nphi));

  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("kind");
  w.value(to_string(res.kind));
  w.key("grid");
  w.begin_object();
  w.key("ntheta");
  w.value(res.ntheta);
  w.key("nphi");
  w.value(res.nphi);
  w.end_object();
  w.key("first_condition");
  w.value(res.kind == BoundaryKind::III ? "nu.U" : "nu x U");
  w.key("first");
  write_residual_norms(w, res.first);
  w.key("second_condition");
  w.value(res.kind == BoundaryKind::III ? "nu x TU" : "nu.TU");
  w.key("second");
  write_residual_norms(w, res.second);
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- decouple

int cmd_decouple(const json& cfg, const OutputSpec& out) {
  const ball::MultipoleSolution sol = obtain_solution(cfg);
  const GridSpec gs = read_grid(cfg, "boundary", GridSpec{32, 64});
  const auto res = decoupling::decoupling_residual(
      sol, ball::boundary_grid(gs.ntheta, gs.nphi));

  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("kind");
  w.value(to_string(res.kind));
  w.key("grid");
  w.begin_object();
  w.key("ntheta");
  w.value(res.ntheta);
  w.key("nphi");
  w.value(res.nphi);
  w.end_object();
  w.key("scalar_condition");
  w.value(res.kind == BoundaryKind::III ? "nu . grad(div U)" : "div U");
  w.key("scalar");
  write_residual_norms(w, res.scalar);
  w.key("vector_condition");
  w.value(res.kind == BoundaryKind::III ? "nu x curl U" : "nu x curl curl U");
  w.key("vector");
  write_residual_norms(w, res.vector);
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- surface

int cmd_surface(const json& cfg, const OutputSpec& out) {
  const json& s = require(cfg, "surface");
  const std::string mesh_path = require(s, "mesh").get<std::string>();
  const std::string kind_str = require(s, "kind").get<std::string>();
  if (kind_str != "III" && kind_str != "IV") {
    config_fail("surface.kind must be \"III\" or \"IV\"");
  }
  const BoundaryKind kind =
      kind_str == "III" ? BoundaryKind::III : BoundaryKind::IV;
  const double tol = s.contains("tol") ? s["tol"].get<double>()
                                       : geometry::kDefaultCurvatureTol;
  const int ring = s.contains("ring") ? s["ring"].get<int>() : 2;

  const geometry::TriMesh mesh = geometry::TriMesh::load_obj(mesh_path);
  const geometry::CurvatureReport report =
      geometry::admissibility(mesh, kind, tol, ring);

  int n_regular = 0;
  for (const auto& sample : report.samples) {
    if (sample.regular) ++n_regular;
  }

  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("kind");
  w.value(kind_str);
  w.key("tol");
  w.value(tol);
  w.key("admissible");
  w.value(kind == BoundaryKind::III ? report.verdict_iii : report.verdict_iv);
  w.key("verdict_iv");
  w.value(report.verdict_iv);
  w.key("verdict_iii");
  w.value(report.verdict_iii);
  w.key("max_abs_H");
  w.value(report.max_abs_H);
  w.key("max_abs_K");
  w.value(report.max_abs_K);
  w.key("n_samples");
  w.value(static_cast<int>(report.samples.size()));
  w.key("n_regular");
  w.value(n_regular);
  w.key("violations");
  w.begin_array(true);
  for (int idx : report.violations) w.value(idx);
  w.end_array();
  w.key("samples");
  w.begin_array();
  for (const auto& sample : report.samples) {
    w.begin_array(true);
    for (int c = 0; c < 3; ++c) w.value(sample.location(c));
    w.value(sample.H);
    w.value(sample.K);
    w.value(sample.regular);
    w.end_array();
  }
  w.end_array();
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- compare

metrics::FarFieldPattern load_farfield_pattern(const std::string& path,
                                               const char* which) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open far-field file: " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("far-field parse error in " + path + ": " +
                             e.what());
  }
  metrics::FarFieldPattern p;
  p.tag = metrics::FarFieldPattern::Tag::T;
  for (const auto& row : j.at("dirs")) {
    p.directions.emplace_back(
        Vec3(row[0].get<double>(), row[1].get<double>(), row[2].get<double>()));
    p.weights.push_back(row[3].get<double>());
  }
  for (const auto& row : j.at(which)) {
    p.values.emplace_back(
        CVec3(Complex(row[0].get<double>(), row[1].get<double>()),
              Complex(row[2].get<double>(), row[3].get<double>()),
              Complex(row[4].get<double>(), row[5].get<double>())));
  }
  return p;
}

std::vector<Vec3> load_point_set(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".obj") {
    return geometry::TriMesh::load_obj(path).vertices;
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open point file: " + path);
  std::vector<Vec3> pts;
  double x, y, z;
  while (f >> x >> y >> z) pts.emplace_back(x, y, z);
  return pts;
}

int cmd_compare(const json& cfg, const OutputSpec& out) {
  const json& c = require(cfg, "compare");
  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  if (c.contains("farfield_a") && c.contains("farfield_b")) {
    const std::string pa = c["farfield_a"].get<std::string>();
    const std::string pb = c["farfield_b"].get<std::string>();
    const char* which = "ut";
    std::string which_str = "ut";
    if (c.contains("component")) {
      which_str = c["component"].get<std::string>();
      if (which_str != "up" && which_str != "us" && which_str != "ut") {
        config_fail("compare.component must be up, us, or ut");
      }
      which = which_str.c_str();
    }
    const auto F = load_farfield_pattern(pa, which);
    const auto G = load_farfield_pattern(pb, which);
    w.key("farfield_component");
    w.value(which_str);
    w.key("farfield_distance");
    w.value(metrics::farfield_distance(F, G));
  }
  if (c.contains("points_a") && c.contains("points_b")) {
    const auto A = load_point_set(c["points_a"].get<std::string>());
    const auto B = load_point_set(c["points_b"].get<std::string>());
    w.key("hausdorff");
    w.value(metrics::hausdorff(A, B));
  }
  if (c.contains("psi")) {
    const json& p = c["psi"];
    w.key("stability_bound");
    w.value(metrics::stability_modulus(
        get_number(p, "epsilon"), get_number(p, "s"), get_number(p, "C"),
        get_number(p, "alpha")));
  }
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const json& cfg, const OutputSpec& out) {
  const json& e = require(cfg, "expand");
  const double k = get_number(e, "k");
  const harmonics::UnitVector d(get_vec3(e, "d"));
  const harmonics::UnitVector dperp(get_vec3(e, "dperp"));
  const double radius = get_number(e, "radius");
  const int samples =
      e.contains("samples") ? e["samples"].get<int>() : 50;
  const unsigned seed = e.contains("seed") ? e["seed"].get<unsigned>() : 1u;
  std::vector<int> truncations;
  for (const auto& n : require(e, "truncations")) {
    truncations.push_back(n.get<int>());
  }

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Vec3> pts;
  while (static_cast<int>(pts.size()) < samples) {
    const Vec3 x(unif(rng), unif(rng), unif(rng));
    if (x.norm() > 1e-3 && x.norm() <= 1.0) pts.push_back(radius * x);
  }

  struct Row {
    int N;
    double err_long;
    double err_trans;
  };
  std::vector<Row> rows;
  for (int N : truncations) {
    double el = 0.0, et = 0.0;
    for (const Vec3& x : pts) {
      const Complex phase = std::exp(Complex(0, 1) * (k * d.v().dot(x)));
      const CVec3 exact_l = phase * d.v().cast<Complex>();
      const CVec3 exact_t = phase * dperp.v().cast<Complex>();
      el = std::max(
          el, (wavefuncs::expand_plane_wave(
                   wavefuncs::PlaneWavePart::Longitudinal, k, d, dperp, N, x) -
               exact_l)
                  .norm());
      et = std::max(
          et, (wavefuncs::expand_plane_wave(
                   wavefuncs::PlaneWavePart::Transversal, k, d, dperp, N, x) -
               exact_t)
                  .norm());
    }
    rows.push_back(Row{N, el, et});
  }

  if (out.format == "csv") {
    std::string csv = "N,max_error_longitudinal,max_error_transversal\n";
    for (const Row& r : rows) {
      csv += std::to_string(r.N) + "," + format_g17(r.err_long) + "," +
             format_g17(r.err_trans) + "\n";
    }
    write_file(out.path, csv);
    return 0;
  }
  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("k");
  w.value(k);
  w.key("radius");
  w.value(radius);
  w.key("samples");
  w.value(samples);
  w.key("rows");
  w.begin_array();
  for (const Row& r : rows) {
    w.begin_array(true);
    w.value(r.N);
    w.value(r.err_long);
    w.value(r.err_trans);
    w.end_array();
  }
  w.end_array();
  w.end_object();
  write_file(out.path, w.str() + "\n");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Spectral solver and diagnostics for time-harmonic elastic "
               "wave scattering from a ball"};
  app.require_subcommand(1);

  struct Sub {
    std::string name;
    std::string help;
    int (*fn)(const json&, const OutputSpec&);
  };
  const Sub subs[] = {
      {"solve", "solve the ball problem and write the coefficient tables",
       cmd_solve},
      {"field", "sample the displacement field", cmd_field},
      {"farfield", "sample the far-field patterns", cmd_farfield},
      {"residuals", "boundary-condition residual report", cmd_residuals},
      {"decouple", "decoupling-condition residual report", cmd_decouple},
      {"surface", "curvature/admissibility report for a mesh", cmd_surface},
      {"compare", "far-field distance, Hausdorff distance, stability bound",
       cmd_compare},
      {"expand", "plane-wave expansion error sweep", cmd_expand},
  };

  std::string config_path;
  std::string output_override;
  const Sub* selected = nullptr;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("config", config_path, "JSON config file")->required();
    sub->add_option("-o,--output", output_override, "output path override");
    sub->callback([&, &s = s] { selected = &s; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  if (selected == nullptr) return 64;

  try {
    const json cfg = load_config(config_path);
    const OutputSpec out = read_output(cfg, output_override);
    return selected->fn(cfg, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ball::DegenerateModeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::underflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ews::cli
