// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ews/ball_solver.hpp"
#include "ews/cli.hpp"
#include "ews/decoupling.hpp"
#include "ews/geometry.hpp"
#include "ews/harmonics.hpp"
#include "ews/metrics.hpp"
#include "ews/special.hpp"
#include "ews/wavefuncs.hpp"
#include "support/meshes.hpp"
#include "support/oracles.hpp"

using namespace ews;
using ball::BallScatterer;
using ball::boundary_grid;
using ball::boundary_residuals;
using ball::FieldPart;
using ball::MultipoleSolution;
using ball::solve_ball;
using harmonics::UnitVector;
using special::RadialKind;
using wavefuncs::IncidentWave;
using wavefuncs::WaveParams;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct Check {
  std::string name;
  std::function<bool(std::string&)> fn;
  double time_limit_s = 0.0;  // 0 = no stated limit
};

IncidentWave acceptance_incident(Complex ap, Complex as) {
  const UnitVector d(0.3, -0.5, 0.81);
  const Vec3 raw(0.7, 0.32, 0.0);
  return IncidentWave(d, UnitVector(raw - raw.dot(d.v()) * d.v()), ap, as);
}

bool criterion_special(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
    const auto j = special::radial_eval_all(RadialKind::J, 51, t);
    const auto h = special::radial_eval_all(RadialKind::H1, 51, t);
    for (int n = 0; n <= 50; ++n) {
      const Complex w = j[n].f * h[n].df - j[n].df * h[n].f;
      const double err = std::abs(w - Complex(0.0, 1.0 / (t * t))) * t * t;
      worst = std::max(worst, err);
      ok = ok && err < 1e-12;
      if (n >= 1 && n < 50) {
        const Complex rec_j = j[n - 1].f + j[n + 1].f - (2 * n + 1) / t * j[n].f;
        const double scale_j =
            std::max({std::abs(j[n - 1].f), std::abs(j[n + 1].f), 1e-280});
        ok = ok && std::abs(rec_j) <= 1e-11 * scale_j;
        const Complex rec_h = h[n - 1].f + h[n + 1].f - (2 * n + 1) / t * h[n].f;
        const double scale_h =
            std::max(std::abs(h[n - 1].f), std::abs(h[n + 1].f));
        ok = ok && std::abs(rec_h) <= 1e-11 * scale_h;
      }
    }
  }
  // derivative vs central differences
  for (int n : {0, 3, 11, 25}) {
    for (double t : {0.9, 4.0, 17.0}) {
      const double step = 1e-5 * std::max(1.0, t);
      for (RadialKind kind : {RadialKind::J, RadialKind::H1}) {
        const auto e = special::radial_eval(kind, n, t);
        const Complex fd = (special::radial_eval(kind, n, t + step).f -
                            special::radial_eval(kind, n, t - step).f) /
                           (2.0 * step);
        const double scale =
            std::max({std::abs(e.f), std::abs(e.df), std::abs(e.ddf) * t});
        ok = ok && std::abs(e.df - fd) <= 1e-6 * scale;
      }
    }
  }
  std::ostringstream ss;
  ss << "max scaled Wronskian error " << worst;
  detail = ss.str();
  return ok;
}

bool criterion_harmonics(std::string& detail) {
  const auto quad = harmonics::sphere_quadrature();
  const int nmax = 8;
  const int count = (nmax + 1) * (nmax + 1);
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(count, count);
  std::vector<double> grad_l2((nmax + 1), 0.0);
  for (size_t q = 0; q < quad.dirs.size(); ++q) {
    const harmonics::SphBasis basis(nmax, quad.dirs[q]);
    Eigen::VectorXcd y(count);
    int k = 0;
    for (int n = 0; n <= nmax; ++n) {
      for (int m = -n; m <= n; ++m) {
        y(k++) = basis.Y(n, m);
        if (n <= 5 && m == (n >= 1 ? 1 : 0)) {
          grad_l2[n] += quad.weights[q] * basis.gradY(n, m).squaredNorm();
        }
      }
    }
    gram += quad.weights[q] * y * y.adjoint();
  }
  const double gram_err =
      (gram - Eigen::MatrixXcd::Identity(count, count)).cwiseAbs().maxCoeff();
  bool ok = gram_err < 1e-10;
  double eig_err = 0.0;
  for (int n = 1; n <= 5; ++n) {
    eig_err = std::max(eig_err, std::abs(grad_l2[n] - n * (n + 1.0)));
  }
  ok = ok && eig_err < 1e-9;
  std::ostringstream ss;
  ss << "Gram error " << gram_err << ", eigenvalue-identity error " << eig_err;
  detail = ss.str();
  return ok;
}

bool criterion_expansion(std::string& detail) {
  std::mt19937 rng(2024);
  const UnitVector d = oracles::random_unit(rng);
  const UnitVector dperp = oracles::orthogonal_unit(d, rng);
  const double k = 2.0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec3 x = oracles::random_point(rng, 0.05, 10.0 / k);
    const Complex phase = std::exp(kI * (k * d.v().dot(x)));
    const CVec3 lon = wavefuncs::expand_plane_wave(
        wavefuncs::PlaneWavePart::Longitudinal, k, d, dperp, 40, x);
    const CVec3 trans = wavefuncs::expand_plane_wave(
        wavefuncs::PlaneWavePart::Transversal, k, d, dperp, 40, x);
    worst = std::max(worst, (lon - phase * d.v().cast<Complex>()).norm());
    worst = std::max(worst, (trans - phase * dperp.v().cast<Complex>()).norm());
  }
  std::ostringstream ss;
  ss << "max expansion error " << worst << " at N=40";
  detail = ss.str();
  return worst < 1e-10;
}

bool criterion_ball_iv(std::string& detail) {
  const WaveParams wp(2.0, 1.0, 1.0);
  const IncidentWave inc = acceptance_incident(1.0, 1.0);
  const BallScatterer ball(1.0, BoundaryKind::IV);
  const auto grid = boundary_grid(32, 64);
  const auto res = boundary_residuals(solve_ball(wp, inc, ball, 30), grid);
  bool ok = res.first.max_norm < 1e-8 && res.second.max_norm < 1e-8;

  double prev1 = 1e300, prev2 = 1e300;
  for (int N : {5, 10, 15, 20, 25}) {
    const auto r = boundary_residuals(solve_ball(wp, inc, ball, N), grid);
    ok = ok && r.first.max_norm <= 2.0 * prev1 &&
         r.second.max_norm <= 2.0 * prev2;
    prev1 = r.first.max_norm;
    prev2 = r.second.max_norm;
  }
  std::ostringstream ss;
  ss << "N=30 residuals |nu x U| " << res.first.max_norm << ", |nu.TU| "
     << res.second.max_norm;
  detail = ss.str();
  return ok;
}

bool criterion_ball_iii(std::string& detail) {
  const WaveParams wp(2.0, 1.0, 1.0);
  const IncidentWave inc = acceptance_incident(1.0, 1.0);
  const BallScatterer ball(1.0, BoundaryKind::III);
  const MultipoleSolution sol = solve_ball(wp, inc, ball, 30);
  const auto res = boundary_residuals(sol, boundary_grid(32, 64));
  bool ok = res.first.max_norm < 1e-8 && res.second.max_norm < 1e-8;

  double worst_rel = 0.0;
  for (int n = 0; n <= 10 && ok; ++n) {
    for (int m = -n; m <= n; ++m) {
      const auto oracle = oracles::collocate_mode(wp, inc, ball, n, m, 30);
      const double ra =
          std::abs(sol.a.at(n, m) - oracle.a) / std::max(std::abs(oracle.a), 1e-280);
      worst_rel = std::max(worst_rel, ra);
      if (n >= 1) {
        const double rb = std::abs(sol.b.at(n, m) - oracle.b) /
                          std::max(std::abs(oracle.b), 1e-280);
        const double rc = std::abs(sol.c.at(n, m) - oracle.c) /
                          std::max(std::abs(oracle.c), 1e-280);
        worst_rel = std::max({worst_rel, rb, rc});
      }
    }
  }
  ok = ok && worst_rel < 1e-8;
  std::ostringstream ss;
  ss << "residuals |nu.U| " << res.first.max_norm << ", |nu x TU| "
     << res.second.max_norm << "; worst collocation mismatch " << worst_rel;
  detail = ss.str();
  return ok;
}

bool criterion_nondecoupling(std::string& detail) {
  const WaveParams wp(2.0, 1.0, 1.0);
  const auto grid = boundary_grid(32, 64);
  bool ok = true;
  double signal = 1e300;
  for (BoundaryKind kind : {BoundaryKind::III, BoundaryKind::IV}) {
    const auto res = decoupling::decoupling_residual(
        solve_ball(wp, acceptance_incident(1.0, 1.0), BallScatterer(1.0, kind),
                   30),
        grid);
    signal = std::min({signal, res.scalar.max_norm, res.vector.max_norm});
    ok = ok && res.scalar.max_norm > 1e-3 && res.vector.max_norm > 1e-3;

    const auto zero = decoupling::decoupling_residual(
        solve_ball(wp, acceptance_incident(0.0, 0.0), BallScatterer(1.0, kind),
                   30),
        grid);
    ok = ok && zero.scalar.max_norm < 1e-12 && zero.vector.max_norm < 1e-12;
  }
  std::ostringstream ss;
  ss << "weakest normalized decoupling residual " << signal;
  detail = ss.str();
  return ok;
}

bool criterion_farfield(std::string& detail) {
  const WaveParams wp(2.0, 1.0, 1.0);
  const IncidentWave inc = acceptance_incident(1.0, 1.0);
  const MultipoleSolution sol =
      solve_ball(wp, inc, BallScatterer(1.0, BoundaryKind::IV), 30);
  const auto dirs_uv = oracles::fibonacci_sphere(64);
  const auto ff = ball::far_field(sol, dirs_uv);

  bool ok = true;
  for (size_t i = 0; i < dirs_uv.size(); ++i) {
    const CVec3 xc = dirs_uv[i].v().cast<Complex>();
    ok = ok && (ff.up[i] - cdot(dirs_uv[i].v(), ff.ut[i]) * xc).norm() < 1e-12;
    ok = ok && (ff.us[i] - ccross(ccross(xc, ff.ut[i]), xc)).norm() < 1e-12;
  }

  // large-radius evaluation of the scattered P part
  double worst_asym = 0.0;
  const double r = 400.0 / wp.kp;
  for (size_t i = 0; i < 10; ++i) {
    const Vec3 x = r * dirs_uv[i].v();
    std::vector<Vec3> one{x};
    const CVec3 up_sc = ball::eval_field(sol, one, FieldPart::P)[0].value -
                        wavefuncs::incident_p(wp, inc, x);
    const CVec3 approx = r * std::exp(-kI * (wp.kp * r)) * up_sc;
    worst_asym =
        std::max(worst_asym, (approx - ff.up[i]).norm() / ff.up[i].norm());
  }
  ok = ok && worst_asym < 1e-2;

  // correspondence round trip
  std::vector<Vec3> dirs;
  for (const auto& u : dirs_uv) dirs.push_back(u.v());
  const auto corr = decoupling::farfield_correspondence(dirs, ff.ut, wp);
  const auto back = decoupling::farfield_from_correspondence(
      dirs, corr.vp_inf, corr.es_inf, wp);
  for (size_t i = 0; i < dirs.size(); ++i) {
    ok = ok && (back.up_inf[i] - ff.up[i]).norm() < 1e-13;
    ok = ok && (back.us_inf[i] - ff.us[i]).norm() < 1e-13;
  }
  std::ostringstream ss;
  ss << "large-radius relative mismatch " << worst_asym;
  detail = ss.str();
  return ok;
}

bool criterion_radiation(std::string& detail) {
  const WaveParams wp(2.0, 1.0, 1.0);
  const IncidentWave inc = acceptance_incident(1.0, 1.0);
  const MultipoleSolution sol =
      solve_ball(wp, inc, BallScatterer(1.0, BoundaryKind::III), 20);
  const auto field = [&sol](const Vec3& x) {
    std::vector<Vec3> one{x};
    return ball::eval_field(sol, one, FieldPart::Scattered)[0].value;
  };
  std::mt19937 rng(55);
  const UnitVector dir = oracles::random_unit(rng);
  auto quantities = [&](double r) {
    const Vec3 x = r * dir.v();
    const double h = 1e-3;
    const auto curl_field = [&](const Vec3& p) {
      return oracles::fd_curl(field, p, h);
    };
    const CVec3 q1 = ccross(oracles::fd_curl(curl_field, x, h), dir.v()) -
                     kI * wp.ks * curl_field(x);
    const Complex q2 = cdot(dir.v(), oracles::fd_grad_div(field, x, h)) -
                       kI * wp.kp * oracles::fd_div(field, x, h);
    return std::pair{q1.norm(), std::abs(q2)};
  };
  const auto [a1, a2] = quantities(100.0 / wp.ks);
  const auto [b1, b2] = quantities(200.0 / wp.ks);
  std::ostringstream ss;
  ss << "decay ratios " << b1 / a1 << " and " << b2 / a2;
  detail = ss.str();
  return b1 / a1 <= 0.3 && b2 / a2 <= 0.3;
}

bool criterion_curvature(std::string& detail) {
  using namespace ews::geometry;
  bool ok = true;

  // analytic sphere patch, outward orientation
  ParametricPatch sphere;
  const double R = 1.0;
  sphere.position = [R](double t, double f) {
    return Vec3(R * std::sin(t) * std::cos(f), R * std::sin(t) * std::sin(f),
                R * std::cos(t));
  };
  sphere.u1_range = {0.3, kPi - 0.3};
  sphere.u2_range = {0.0, 2.0 * kPi};
  sphere.d1 = [R](double t, double f) {
    return Vec3(R * std::cos(t) * std::cos(f), R * std::cos(t) * std::sin(f),
                -R * std::sin(t));
  };
  sphere.d2 = [R](double t, double f) {
    return Vec3(-R * std::sin(t) * std::sin(f), R * std::sin(t) * std::cos(f),
                0.0);
  };
  sphere.d11 = [R](double t, double f) {
    return Vec3(-R * std::sin(t) * std::cos(f), -R * std::sin(t) * std::sin(f),
                -R * std::cos(t));
  };
  sphere.d12 = [R](double t, double f) {
    return Vec3(-R * std::cos(t) * std::sin(f), R * std::cos(t) * std::cos(f),
                0.0);
  };
  sphere.d22 = [R](double t, double f) {
    return Vec3(-R * std::sin(t) * std::cos(f), -R * std::sin(t) * std::sin(f),
                0.0);
  };
  const PatchCurvature cs = curvature_parametric(sphere, 1.2, 0.8);
  ok = ok && std::abs(cs.H + 1.0) < 1e-8 && std::abs(cs.K - 1.0) < 1e-8;

  // icosphere, radius 2, subdivision 4
  const TriMesh ico = meshes::icosphere(2.0, 4);
  double worst_h = 0.0, worst_k = 0.0;
  for (int v = 0; v < static_cast<int>(ico.vertices.size()); v += 5) {
    const MeshCurvature c = curvature_mesh(ico, v);
    worst_h = std::max(worst_h, std::abs(c.H + 0.5) / 0.5);
    worst_k = std::max(worst_k, std::abs(c.K - 0.25) / 0.25);
  }
  ok = ok && worst_h < 0.05 && worst_k < 0.08;

  // plane patch and cube faces
  ParametricPatch plane;
  plane.position = [](double u, double v) { return Vec3(u, v, 0.0); };
  plane.u1_range = {-1.0, 1.0};
  plane.u2_range = {-1.0, 1.0};
  const PatchCurvature cp = curvature_parametric(plane, 0.2, -0.7);
  ok = ok && std::abs(cp.H) < 1e-8 && std::abs(cp.K) < 1e-8;

  const TriMesh cube = meshes::cube(8, 2.0);
  const CurvatureReport cube_report =
      admissibility(cube, BoundaryKind::III, 1e-6);
  for (const auto& s : cube_report.samples) {
    if (s.regular) {
      ok = ok && std::abs(s.H) < 1e-8 && std::abs(s.K) < 1e-8;
    }
  }
  ok = ok && cube_report.verdict_iii;

  // catenoid: minimal, negatively curved
  ParametricPatch cat;
  cat.position = [](double u, double v) {
    return Vec3(std::cosh(v) * std::cos(u), std::cosh(v) * std::sin(u), v);
  };
  cat.u1_range = {0.0, 2.0 * kPi};
  cat.u2_range = {-1.2, 1.2};
  bool cat_ok = true;
  for (double v : {-0.9, 0.0, 0.7}) {
    const PatchCurvature cc = curvature_parametric(cat, 1.0, v);
    cat_ok = cat_ok && std::abs(cc.H) < 1e-8 && cc.K < 0.0;
  }
  ok = ok && cat_ok;

  // admissibility verdicts
  const CurvatureReport plane_rep = admissibility(plane, BoundaryKind::III, 1e-6);
  const CurvatureReport cat_rep = admissibility(cat, BoundaryKind::IV, 1e-6);
  const CurvatureReport sph_rep = admissibility(sphere, BoundaryKind::IV, 1e-6);
  ok = ok && plane_rep.verdict_iii && plane_rep.verdict_iv;
  ok = ok && cat_rep.verdict_iv && !cat_rep.verdict_iii;
  ok = ok && !sph_rep.verdict_iv && !sph_rep.verdict_iii;

  std::ostringstream ss;
  ss << "icosphere worst relative H " << worst_h << ", K " << worst_k;
  detail = ss.str();
  return ok;
}

bool criterion_reflection(std::string& detail) {
  const decoupling::ReflectionPlane plane{UnitVector(0.0, 0.0, 1.0), 2.0};
  const std::vector<Vec3> probes{Vec3(0.5, 0.2, 0.5), Vec3(-0.8, 0.4, -0.3),
                                 Vec3(1.2, -0.7, 0.9), Vec3(0.3, 1.1, -0.6)};
  const double kp = 0.5, ks = 1.0;
  const decoupling::ScalarField v = [&](const Vec3& x) {
    return wavefuncs::scalar_wavefunc(RadialKind::H1, kp, {1, 0}, x).value;
  };
  const decoupling::VectorField E = [&](const Vec3& x) {
    return wavefuncs::vector_wavefunc(RadialKind::H1, ks, {2, 1}, x).M;
  };
  const auto report = decoupling::reflect_check(v, E, plane, probes);
  std::ostringstream ss;
  ss << "gradient mismatch " << report.max_gradient_mismatch
     << ", curl mismatch " << report.max_curl_mismatch;
  detail = ss.str();
  return report.max_gradient_mismatch < 1e-6 &&
         report.max_curl_mismatch < 1e-6;
}

bool criterion_metrics(std::string& detail) {
  const double psi1 = metrics::stability_modulus(std::exp(-std::exp(1.0)),
                                                 1.0, 1.0, 1.0);
  const double psi2 = metrics::stability_modulus(std::exp(-std::exp(4.0)),
                                                 1.0, 1.0, 1.0);
  bool ok = std::abs(psi1 - std::exp(-1.0)) < 1e-12 &&
            std::abs(psi2 - std::exp(-2.0)) < 1e-12;
  const double haus = metrics::hausdorff(meshes::icosphere(1.0, 3).vertices,
                                         meshes::icosphere(1.2, 3).vertices);
  ok = ok && std::abs(haus - 0.2) < 1e-2;
  std::ostringstream ss;
  ss << "psi errors " << std::abs(psi1 - std::exp(-1.0)) << ", "
     << std::abs(psi2 - std::exp(-2.0)) << "; Hausdorff " << haus;
  detail = ss.str();
  return ok;
}

bool criterion_cli_determinism(std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ews_acceptance_cli";
  fs::create_directories(dir);
  const std::string cfg_path = (dir / "cfg.json").string();
  const std::string sol_path = (dir / "sol.json").string();
  const std::string res_path = (dir / "res.json").string();
  {
    std::ofstream f(cfg_path);
    f << R"({
  "params": {"lambda": 2.0, "mu": 1.0, "omega": 1.0},
  "incident": {
    "d": [0.3, -0.5, 0.81],
    "dperp": [0.68494127095673119, 0.34509788173878125, -0.040658568416825615],
    "alpha_p": [1.0, 0.0],
    "alpha_s": [1.0, 0.0]
  },
  "scatterer": {"radius": 1.0, "kind": "IV"},
  "truncation": 30,
  "output": {"path": ")"
      << sol_path << R"(", "format": "json"}
})";
  }
  auto run = [&](const char* sub, const std::string& out) {
    const std::string out_flag = "--output=" + out;
    const char* argv[] = {"ews", sub, cfg_path.c_str(), out_flag.c_str()};
    return ews::cli::run(4, argv);
  };
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  bool ok = run("solve", sol_path) == 0;
  const std::string sol1 = slurp(sol_path);
  ok = ok && run("solve", sol_path) == 0;
  ok = ok && slurp(sol_path) == sol1;
  ok = ok && run("residuals", res_path) == 0;
  const std::string res1 = slurp(res_path);
  ok = ok && run("residuals", res_path) == 0;
  ok = ok && slurp(res_path) == res1;
  fs::remove_all(dir);
  detail = ok ? "byte-identical output across reruns" : "outputs differ";
  return ok;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"special functions: Wronskian, recurrence, derivatives",
       criterion_special, 1.0},
      {"harmonics: Gram identity and Grad eigenvalue identity",
       criterion_harmonics, 5.0},
      {"plane-wave expansions at N=40 reach 1e-10", criterion_expansion, 5.0},
      {"fourth-kind ball: residuals < 1e-8 and monotone decay",
       criterion_ball_iv, 30.0},
      {"third-kind ball: residuals < 1e-8 and collocation match",
       criterion_ball_iii},
      {"non-decoupling signal on the ball", criterion_nondecoupling},
      {"far field: projections, large-radius limit, correspondence",
       criterion_farfield},
      {"Kupradze radiation decay", criterion_radiation},
      {"curvature and admissibility verdicts", criterion_curvature},
      {"reflection identities", criterion_reflection},
      {"metrics: stability modulus and Hausdorff", criterion_metrics},
      {"CLI determinism", criterion_cli_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = checks[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (checks[i].time_limit_s > 0.0 && secs > checks[i].time_limit_s) {
      ok = false;
      detail += "; over the time limit";
    }
    std::printf("[%s] criterion %2zu: %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL",
                i + 1, checks[i].name.c_str(), detail.c_str(), secs);
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", checks.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
