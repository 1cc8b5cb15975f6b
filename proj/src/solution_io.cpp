#include "ews/solution_io.hpp"

#include <fstream>
#include <sstream>

#include "ews/jsonout.hpp"
#include "json.hpp"

namespace ews::solution_io {

namespace {

using ball::ModeTable;
using jsonout::JsonWriter;
using nlohmann::json;

void write_mode_table(JsonWriter& w, const ModeTable& t) {
  w.begin_array();
  for (int n = 0; n <= t.nmax(); ++n) {
    for (int m = -n; m <= n; ++m) {
      const Complex v = t.at(n, m);
      w.begin_array(true);
      w.value(n);
      w.value(m);
      w.value(v.real());
      w.value(v.imag());
      w.end_array();
    }
  }
  w.end_array();
}

ModeTable read_mode_table(const json& rows, int nmax, const char* name) {
  ModeTable t(nmax);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 4) {
      throw std::runtime_error(std::string("solution field '") + name +
                               "' expects [n, m, re, im] rows");
    }
    t.at(row[0].get<int>(), row[1].get<int>()) =
        Complex(row[2].get<double>(), row[3].get<double>());
  }
  return t;
}

void write_vec3(JsonWriter& w, const Vec3& v) {
  w.begin_array(true);
  w.value(v(0));
  w.value(v(1));
  w.value(v(2));
  w.end_array();
}

void write_complex(JsonWriter& w, Complex z) {
  w.begin_array(true);
  w.value(z.real());
  w.value(z.imag());
  w.end_array();
}

Vec3 read_vec3(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) {
    throw std::runtime_error(std::string("field '") + name +
                             "' expects [x, y, z]");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Complex read_complex(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error(std::string("field '") + name +
                             "' expects [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string to_json(const ball::MultipoleSolution& sol) {
  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.value("1");
  w.key("params");
  w.begin_object();
  w.key("lambda");
  w.value(sol.params.lambda);
  w.key("mu");
  w.value(sol.params.mu);
  w.key("omega");
  w.value(sol.params.omega);
  w.key("kp");
  w.value(sol.params.kp);
  w.key("ks");
  w.value(sol.params.ks);
  w.end_object();
  w.key("incident");
  w.begin_object();
  w.key("d");
  write_vec3(w, sol.incident.d.v());
  w.key("dperp");
  write_vec3(w, sol.incident.dperp.v());
  w.key("alpha_p");
  write_complex(w, sol.incident.alpha_p);
  w.key("alpha_s");
  write_complex(w, sol.incident.alpha_s);
  w.end_object();
  w.key("scatterer");
  w.begin_object();
  w.key("radius");
  w.value(sol.scatterer.radius);
  w.key("kind");
  w.value(to_string(sol.scatterer.kind));
  w.end_object();
  w.key("N");
  w.value(sol.trunc);
  w.key("a");
  write_mode_table(w, sol.a);
  w.key("b");
  write_mode_table(w, sol.b);
  w.key("c");
  write_mode_table(w, sol.c);
  if (sol.iv) {
    w.key("intermediates");
    w.begin_object();
    w.key("a_tilde");
    write_mode_table(w, sol.iv->a_tilde);
    w.key("b_tilde");
    write_mode_table(w, sol.iv->b_tilde);
    w.key("alpha_a");
    write_mode_table(w, sol.iv->alpha_a);
    w.key("alpha_b");
    write_mode_table(w, sol.iv->alpha_b);
    w.end_object();
  } else if (sol.iii) {
    w.key("intermediates");
    w.begin_object();
    w.key("a_check");
    write_mode_table(w, sol.iii->a_check);
    w.key("b_check");
    write_mode_table(w, sol.iii->b_check);
    w.key("c_check");
    write_mode_table(w, sol.iii->c_check);
    w.key("beta");
    write_mode_table(w, sol.iii->beta);
    w.key("gamma");
    write_mode_table(w, sol.iii->gamma);
    w.key("zeta");
    write_mode_table(w, sol.iii->zeta);
    w.end_object();
  }
  w.end_object();
  return w.str() + "\n";
}

ball::MultipoleSolution from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("solution parse error: ") + e.what());
  }

  const json& p = j.at("params");
  const wavefuncs::WaveParams params(p.at("lambda").get<double>(),
                                     p.at("mu").get<double>(),
                                     p.at("omega").get<double>());
  const json& inc = j.at("incident");
  const wavefuncs::IncidentWave incident(
      harmonics::UnitVector(read_vec3(inc.at("d"), "d")),
      harmonics::UnitVector(read_vec3(inc.at("dperp"), "dperp")),
      read_complex(inc.at("alpha_p"), "alpha_p"),
      read_complex(inc.at("alpha_s"), "alpha_s"));
  const json& sc = j.at("scatterer");
  const std::string kind_str = sc.at("kind").get<std::string>();
  if (kind_str != "III" && kind_str != "IV") {
    throw std::runtime_error("scatterer kind must be \"III\" or \"IV\"");
  }
  const BoundaryKind kind =
      kind_str == "III" ? BoundaryKind::III : BoundaryKind::IV;
  const ball::BallScatterer scatterer(sc.at("radius").get<double>(), kind);
  const int N = j.at("N").get<int>();

  ball::MultipoleSolution sol(params, incident, scatterer, N);
  sol.a = read_mode_table(j.at("a"), N, "a");
  sol.b = read_mode_table(j.at("b"), N, "b");
  sol.c = read_mode_table(j.at("c"), N, "c");

  if (j.contains("intermediates")) {
    const json& im = j.at("intermediates");
    if (kind == BoundaryKind::IV) {
      sol.iv.emplace(ball::KindIVParts{
          read_mode_table(im.at("a_tilde"), N, "a_tilde"),
          read_mode_table(im.at("b_tilde"), N, "b_tilde"),
          read_mode_table(im.at("alpha_a"), N, "alpha_a"),
          read_mode_table(im.at("alpha_b"), N, "alpha_b")});
    } else {
      sol.iii.emplace(ball::KindIIIParts{
          read_mode_table(im.at("a_check"), N, "a_check"),
          read_mode_table(im.at("b_check"), N, "b_check"),
          read_mode_table(im.at("c_check"), N, "c_check"),
          read_mode_table(im.at("beta"), N, "beta"),
          read_mode_table(im.at("gamma"), N, "gamma"),
          read_mode_table(im.at("zeta"), N, "zeta")});
    }
  }
  return sol;
}

void save(const ball::MultipoleSolution& sol, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << to_json(sol);
  if (!f) throw std::runtime_error("write failed: " + path);
}

ball::MultipoleSolution load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

}  // namespace ews::solution_io
