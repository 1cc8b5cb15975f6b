#include "ews/ball_solver.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ews/special.hpp"

namespace ews::ball {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInteriorSlack = 1e-3;

using special::RadialEval;
using special::RadialKind;

void check_denominator(Complex d, int n, int m, const char* name) {
  if (std::abs(d) < 1e-300) {
    throw std::underflow_error(std::string("vanishing denominator ") + name +
                               " at mode n=" + std::to_string(n) +
                               " m=" + std::to_string(m));
  }
}

}  // namespace

BallScatterer::BallScatterer(double radius_, BoundaryKind kind_)
    : radius(radius_), kind(kind_) {
  if (!(radius > 0.0)) {
    throw std::domain_error("scatterer radius must be positive");
  }
}

DegenerateModeError::DegenerateModeError(int n_, int m_,
                                         const std::string& what)
    : std::runtime_error(what), n(n_), m(m_) {}

ModeTable::ModeTable(int nmax) : nmax_(nmax) {
  if (nmax < 0) throw std::out_of_range("negative mode table degree");
  v_.assign(static_cast<size_t>(nmax + 1) * (nmax + 1), Complex(0, 0));
}

size_t ModeTable::idx(int n, int m) const {
  if (n < 0 || n > nmax_ || std::abs(m) > n) {
    throw std::out_of_range("mode index out of range: n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
  }
  return static_cast<size_t>(n) * n + n + m;
}

MultipoleSolution::MultipoleSolution(const WaveParams& params_,
                                     const IncidentWave& incident_,
                                     const BallScatterer& scatterer_,
                                     int trunc_)
    : params(params_),
      incident(incident_),
      scatterer(scatterer_),
      trunc(trunc_),
      a(trunc_),
      b(trunc_),
      c(trunc_) {
  if (trunc < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

MultipoleSolution solve_ball(const WaveParams& params,
                             const IncidentWave& incident,
                             const BallScatterer& scatterer, int N) {
  const double R = scatterer.radius;
  const double tp = params.kp * R;
  const double ts = params.ks * R;
  if (ts > kMaxKsR) {
    throw std::domain_error("ks*R exceeds the stable solve range");
  }

  MultipoleSolution sol(params, incident, scatterer, N);

  const std::vector<RadialEval> jp =
      special::radial_eval_all(RadialKind::J, N, tp);
  const std::vector<RadialEval> hp =
      special::radial_eval_all(RadialKind::H1, N, tp);
  const std::vector<RadialEval> js =
      special::radial_eval_all(RadialKind::J, N, ts);
  const std::vector<RadialEval> hs =
      special::radial_eval_all(RadialKind::H1, N, ts);

  const harmonics::SphBasis at_d(N, incident.d);
  const double lambda = params.lambda;
  const double mu = params.mu;
  const double kp = params.kp;
  const double ks = params.ks;
  const Complex ap = incident.alpha_p;
  const Complex as = incident.alpha_s;
  constexpr double four_pi = 4.0 * std::numbers::pi;

  if (scatterer.kind == BoundaryKind::IV) {
    sol.iv.emplace(
        KindIVParts{ModeTable(N), ModeTable(N), ModeTable(N), ModeTable(N)});
  } else {
    sol.iii.emplace(KindIIIParts{ModeTable(N), ModeTable(N), ModeTable(N),
                                 ModeTable(N), ModeTable(N), ModeTable(N)});
  }

  for (int n = 0; n <= N; ++n) {
    const double nn1 = n * (n + 1.0);
    for (int m = -n; m <= n; ++m) {
      const Complex yd_conj = std::conj(at_d.Y(n, m));
      const CVec3 gd_conj = at_d.gradY(n, m).conjugate();
      const Complex A1 = four_pi * ipow(n + 1) * yd_conj;
      const Complex A2 =
          four_pi * ipow(n + 1) * cdot(incident.dperp.v(), gd_conj);
      const Complex A3 =
          four_pi * ipow(n) *
          cdot(incident.dperp.v(),
               ccross(gd_conj, incident.d.v()));

      if (scatterer.kind == BoundaryKind::IV) {
        KindIVParts& parts = *sol.iv;
        check_denominator(hp[n].f, n, m, "h_n(t_p)");
        const Complex a_tilde = ap * A1 / kp * jp[n].f / hp[n].f;
        parts.a_tilde.at(n, m) = a_tilde;

        if (n == 0) {
          // Only the pressure mode exists; nu.TU = 0 alone determines it.
          const Complex den = lambda * hp[0].f - 2.0 * mu * hp[0].ddf;
          check_denominator(den, n, m, "lambda*h - 2*mu*h''");
          const Complex a0 =
              ap * A1 / kp * (lambda * jp[0].f - 2.0 * mu * jp[0].ddf) / den;
          sol.a.at(0, 0) = a0;
          parts.alpha_a.at(0, 0) = a0 - a_tilde;
          continue;
        }

        check_denominator(hs[n].f, n, m, "h_n(t_s)");
        check_denominator(hs[n].check, n, m, "check h_n(t_s)");
        sol.c.at(n, m) = -as * A3 / nn1 * js[n].f / hs[n].f;
        const Complex b_tilde =
            as * A2 / nn1 / ks * js[n].check / hs[n].check;
        parts.b_tilde.at(n, m) = b_tilde;

        // nu x U = 0 (tangential family) and nu . TU = 0 (radial family)
        // form a 2x2 system for (a, b).
        const Complex m00 = hp[n].f;
        const Complex m01 = hs[n].check;
        const Complex r1 =
            ap * A1 * jp[n].f / kp + as * A2 / nn1 * js[n].check / ks;
        const Complex m10 =
            -kp * kp * (lambda * hp[n].f - 2.0 * mu * hp[n].ddf);
        const Complex m11 = -2.0 * mu * nn1 * hs[n].tilde / (R * R);
        const Complex r2 =
            -(ap * A1 * kp * (lambda * jp[n].f - 2.0 * mu * jp[n].ddf) +
              2.0 * mu * as * A2 * js[n].tilde / (ks * R * R));
        const Complex det = m00 * m11 - m10 * m01;
        const double scale = std::abs(m00) * std::abs(m11) +
                             std::abs(m10) * std::abs(m01);
        if (std::abs(det) < 1e-14 * scale) {
          throw DegenerateModeError(
              n, m, "singular fourth-kind system at mode n=" +
                        std::to_string(n) + " m=" + std::to_string(m));
        }
        const Complex an = (r1 * m11 - r2 * m01) / det;
        const Complex bn = (m00 * r2 - m10 * r1) / det;
        sol.a.at(n, m) = an;
        sol.b.at(n, m) = bn;
        parts.alpha_a.at(n, m) = an - a_tilde;
        parts.alpha_b.at(n, m) = b_tilde - bn;
      } else {
        KindIIIParts& parts = *sol.iii;
        check_denominator(hp[n].df, n, m, "h'_n(t_p)");
        const Complex a_check = A1 * ap / kp * jp[n].df / hp[n].df;
        parts.a_check.at(n, m) = a_check;

        if (n == 0) {
          // nu.U = 0 determines the pressure mode; the tangential condition
          // carries no n = 0 content.
          sol.a.at(0, 0) = a_check;
          continue;
        }

        check_denominator(hs[n].f, n, m, "h_n(t_s)");
        check_denominator(hs[n].check, n, m, "check h_n(t_s)");
        check_denominator(hs[n].tilde, n, m, "tilde h_n(t_s)");
        const Complex b_check =
            as / ks * A2 / nn1 * js[n].f / hs[n].f;
        const Complex c_check =
            -as * A3 / nn1 * js[n].check / hs[n].check;
        const Complex zeta =
            -2.0 * kI * A3 / nn1 * as / (ts * hs[n].tilde * hs[n].check);
        parts.b_check.at(n, m) = b_check;
        parts.c_check.at(n, m) = c_check;
        parts.zeta.at(n, m) = zeta;

        // (beta, gamma) couple through nu.U = 0 and the tangential traction.
        const Complex m00 = tp * hp[n].df;
        const Complex m01 = nn1 * hs[n].f;
        const Complex m10 = 2.0 * hp[n].f;
        const Complex m11 = ts * ts * hs[n].f + 2.0 * hs[n].check;
        const Complex w =
            2.0 * kI * R *
            (ap * A1 / (tp * tp * tp * hp[n].df) -
             as * A2 / (nn1 * ts * ts * hs[n].f));
        const Complex det = m00 * m11 - m10 * m01;
        const double scale = std::abs(m00) * std::abs(m11) +
                             std::abs(m10) * std::abs(m01);
        if (std::abs(det) < 1e-14 * scale) {
          throw DegenerateModeError(
              n, m, "singular third-kind system at mode n=" +
                        std::to_string(n) + " m=" + std::to_string(m));
        }
        const Complex beta = -m01 * w / det;
        const Complex gamma = m00 * w / det;
        parts.beta.at(n, m) = beta;
        parts.gamma.at(n, m) = gamma;
        sol.a.at(n, m) = a_check + beta;
        sol.b.at(n, m) = b_check + gamma;
        sol.c.at(n, m) = c_check + zeta;
      }
    }
  }
  return sol;
}

namespace {

struct ScatteredEval {
  CVec3 p = CVec3::Zero();
  CVec3 s = CVec3::Zero();
};

// Scattered P and S parts at one exterior point, by mode summation.
ScatteredEval eval_scattered(const MultipoleSolution& sol, const Vec3& x) {
  const double r = x.norm();
  const double R = sol.scatterer.radius;
  if (r < R * (1.0 - kInteriorSlack)) {
    throw std::domain_error("field evaluation point lies inside the scatterer");
  }
  const int N = sol.trunc;
  const UnitVector xhat(x);
  const std::vector<RadialEval> hp =
      special::radial_eval_all(RadialKind::H1, N, sol.params.kp * r);
  const std::vector<RadialEval> hs =
      special::radial_eval_all(RadialKind::H1, N, sol.params.ks * r);
  const harmonics::SphBasis basis(N, xhat);
  const CVec3 xc = xhat.v().cast<Complex>();

  ScatteredEval out;
  for (int n = 0; n <= N; ++n) {
    const double nn1 = n * (n + 1.0);
    for (int m = -n; m <= n; ++m) {
      const Complex y = basis.Y(n, m);
      const CVec3& gy = basis.gradY(n, m);
      out.p += sol.a.at(n, m) *
               (sol.params.kp * hp[n].df * y * xc + hp[n].f / r * gy);
      if (n >= 1) {
        const CVec3 M = hs[n].f * ccross(gy, xc);
        const CVec3 curlM = nn1 * hs[n].f / r * y * xc + hs[n].check / r * gy;
        out.s += sol.b.at(n, m) * curlM + sol.c.at(n, m) * M;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FieldSample> eval_field(const MultipoleSolution& sol,
                                    std::span<const Vec3> points,
                                    FieldPart part) {
  std::vector<FieldSample> out;
  out.reserve(points.size());
  for (const Vec3& x : points) {
    CVec3 value = CVec3::Zero();
    switch (part) {
      case FieldPart::Incident:
        value = wavefuncs::incident_total(sol.params, sol.incident, x);
        break;
      case FieldPart::Scattered: {
        const ScatteredEval sc = eval_scattered(sol, x);
        value = sc.p + sc.s;
        break;
      }
      case FieldPart::Total: {
        const ScatteredEval sc = eval_scattered(sol, x);
        value = wavefuncs::incident_total(sol.params, sol.incident, x) + sc.p +
                sc.s;
        break;
      }
      case FieldPart::P: {
        const ScatteredEval sc = eval_scattered(sol, x);
        value = wavefuncs::incident_p(sol.params, sol.incident, x) + sc.p;
        break;
      }
      case FieldPart::S: {
        const ScatteredEval sc = eval_scattered(sol, x);
        value = wavefuncs::incident_s(sol.params, sol.incident, x) + sc.s;
        break;
      }
    }
    out.push_back(FieldSample{x, value});
  }
  return out;
}

ScalarVectorParts eval_scalar_vector_parts(const MultipoleSolution& sol,
                                           std::span<const Vec3> points) {
  ScalarVectorParts out;
  out.vp.reserve(points.size());
  out.es.reserve(points.size());
  const int N = sol.trunc;
  const double kp = sol.params.kp;
  const double ks = sol.params.ks;
  const Vec3& d = sol.incident.d.v();
  const CVec3 dxp =
      d.cross(sol.incident.dperp.v()).cast<Complex>();

  for (const Vec3& x : points) {
    const double r = x.norm();
    const double R = sol.scatterer.radius;
    if (r < R * (1.0 - kInteriorSlack)) {
      throw std::domain_error(
          "field evaluation point lies inside the scatterer");
    }
    const UnitVector xhat(x);
    const std::vector<RadialEval> hp =
        special::radial_eval_all(RadialKind::H1, N, kp * r);
    const std::vector<RadialEval> hs =
        special::radial_eval_all(RadialKind::H1, N, ks * r);
    const harmonics::SphBasis basis(N, xhat);
    const CVec3 xc = xhat.v().cast<Complex>();

    // v_p = -div U: incident part -i alpha_p kp e^{i kp x.d}, scattered part
    // +kp^2 sum a u_n^m[h;kp].
    Complex vp = -kI * sol.incident.alpha_p * kp *
                 std::exp(kI * (kp * d.dot(x)));
    // E_s = curl U: incident i alpha_s ks (d x dperp) e^{i ks x.d},
    // scattered sum (b ks^2 M + c curl M).
    CVec3 es = kI * sol.incident.alpha_s * ks *
               std::exp(kI * (ks * d.dot(x))) * dxp;
    for (int n = 0; n <= N; ++n) {
      const double nn1 = n * (n + 1.0);
      for (int m = -n; m <= n; ++m) {
        const Complex y = basis.Y(n, m);
        vp += kp * kp * sol.a.at(n, m) * hp[n].f * y;
        if (n >= 1) {
          const CVec3& gy = basis.gradY(n, m);
          const CVec3 M = hs[n].f * ccross(gy, xc);
          const CVec3 curlM =
              nn1 * hs[n].f / r * y * xc + hs[n].check / r * gy;
          es += sol.b.at(n, m) * ks * ks * M + sol.c.at(n, m) * curlM;
        }
      }
    }
    out.vp.push_back(vp);
    out.es.push_back(es);
  }
  return out;
}

TractionSamples boundary_traction(const MultipoleSolution& sol,
                                  std::span<const UnitVector> dirs) {
  TractionSamples out;
  out.nu_dot_T.reserve(dirs.size());
  out.nu_cross_T.reserve(dirs.size());

  const int N = sol.trunc;
  const double R = sol.scatterer.radius;
  const double kp = sol.params.kp;
  const double ks = sol.params.ks;
  const double tp = kp * R;
  const double ts = ks * R;
  const double lambda = sol.params.lambda;
  const double mu = sol.params.mu;
  const Complex ap = sol.incident.alpha_p;
  const Complex as = sol.incident.alpha_s;
  const Vec3& d = sol.incident.d.v();
  const CVec3 dxp = d.cross(sol.incident.dperp.v()).cast<Complex>();

  const std::vector<RadialEval> hp =
      special::radial_eval_all(RadialKind::H1, N, tp);
  const std::vector<RadialEval> hs =
      special::radial_eval_all(RadialKind::H1, N, ts);

  for (const UnitVector& nu : dirs) {
    const Vec3 x = R * nu.v();
    const CVec3 nuc = nu.v().cast<Complex>();
    const harmonics::SphBasis basis(N, nu);

    // Incident contributions from the plane-wave closed forms.
    const CVec3 up_in = wavefuncs::incident_p(sol.params, sol.incident, x);
    const CVec3 us_in = wavefuncs::incident_s(sol.params, sol.incident, x);
    const double nu_dot_d = nu.v().dot(d);
    const Complex div_in =
        kI * kp * ap * std::exp(kI * (kp * d.dot(x)));
    const CVec3 curl_in =
        kI * as * ks * std::exp(kI * (ks * d.dot(x))) * dxp;

    Complex nu_dot_t = 2.0 * mu *
                           (kI * kp * nu_dot_d * cdot(nu.v(), up_in) +
                            kI * ks * nu_dot_d * cdot(nu.v(), us_in)) +
                       lambda * div_in;
    CVec3 nu_cross_t =
        2.0 * mu * kI *
            (kp * nu_dot_d * ccross(nuc, up_in) +
             ks * nu_dot_d * ccross(nuc, us_in)) +
        mu * (cdot(nu.v(), curl_in) * nuc - curl_in);

    // Scattered contributions, mode by mode.
    for (int n = 0; n <= N; ++n) {
      const double nn1 = n * (n + 1.0);
      for (int m = -n; m <= n; ++m) {
        const Complex y = basis.Y(n, m);
        const Complex a_nm = sol.a.at(n, m);
        nu_dot_t -=
            a_nm * kp * kp * (lambda * hp[n].f - 2.0 * mu * hp[n].ddf) * y;
        if (n >= 1) {
          const CVec3& gy = basis.gradY(n, m);
          const CVec3 cross_gy = ccross(nuc, gy);
          const Complex b_nm = sol.b.at(n, m);
          const Complex c_nm = sol.c.at(n, m);
          nu_dot_t -= 2.0 * mu * b_nm * nn1 * hs[n].tilde / (R * R) * y;
          nu_cross_t +=
              a_nm * (-2.0 * mu * hp[n].tilde / (R * R)) * cross_gy;
          nu_cross_t += b_nm *
                        (2.0 * mu * (ts * ts * hs[n].ddf - hs[n].tilde) /
                             (R * R) +
                         mu * ks * ks * hs[n].f) *
                        cross_gy;
          nu_cross_t +=
              c_nm * (2.0 * mu * ks * hs[n].df - mu * hs[n].check / R) * gy;
        }
      }
    }
    out.nu_dot_T.push_back(nu_dot_t);
    out.nu_cross_T.push_back(nu_cross_t);
  }
  return out;
}

BoundaryGrid boundary_grid(int ntheta, int nphi) {
  const harmonics::SphereQuadrature q =
      harmonics::sphere_quadrature(ntheta, nphi);
  return BoundaryGrid{q.dirs, q.weights, ntheta, nphi};
}

BoundaryResiduals boundary_residuals(const MultipoleSolution& sol,
                                     const BoundaryGrid& grid) {
  const double R = sol.scatterer.radius;
  std::vector<Vec3> pts;
  pts.reserve(grid.dirs.size());
  for (const UnitVector& nu : grid.dirs) pts.push_back(R * nu.v());

  const std::vector<FieldSample> u = eval_field(sol, pts, FieldPart::Total);
  const TractionSamples t = boundary_traction(sol, grid.dirs);

  BoundaryResiduals out;
  out.kind = sol.scatterer.kind;
  out.ntheta = grid.ntheta;
  out.nphi = grid.nphi;
  double sum1 = 0.0, sum2 = 0.0;
  for (size_t i = 0; i < grid.dirs.size(); ++i) {
    const CVec3 nuc = grid.dirs[i].v().cast<Complex>();
    double q1, q2;
    if (sol.scatterer.kind == BoundaryKind::III) {
      q1 = std::abs(cdot(grid.dirs[i].v(), u[i].value));
      q2 = t.nu_cross_T[i].norm();
    } else {
      q1 = ccross(nuc, u[i].value).norm();
      q2 = std::abs(t.nu_dot_T[i]);
    }
    out.first.max_norm = std::max(out.first.max_norm, q1);
    out.second.max_norm = std::max(out.second.max_norm, q2);
    sum1 += grid.weights[i] * q1 * q1;
    sum2 += grid.weights[i] * q2 * q2;
  }
  out.first.l2_norm = std::sqrt(sum1);
  out.second.l2_norm = std::sqrt(sum2);
  return out;
}

FarFieldSamples far_field(const MultipoleSolution& sol,
                          std::span<const UnitVector> dirs) {
  FarFieldSamples out;
  out.up.reserve(dirs.size());
  out.us.reserve(dirs.size());
  out.ut.reserve(dirs.size());
  const int N = sol.trunc;
  const double kp = sol.params.kp;
  const double ks = sol.params.ks;

  for (const UnitVector& xhat : dirs) {
    const harmonics::SphBasis basis(N, xhat);
    const CVec3 xc = xhat.v().cast<Complex>();
    // Scalar far field of v_p^sc = kp^2 sum a u_n^m[h;kp].
    Complex vp_inf = 0.0;
    // Vector far field of E_s^sc = sum (b ks^2 M + c curl M).
    CVec3 es_inf = CVec3::Zero();
    for (int n = 0; n <= N; ++n) {
      const Complex phase = ipow(-(n + 1));
      for (int m = -n; m <= n; ++m) {
        vp_inf += phase * kp * sol.a.at(n, m) * basis.Y(n, m);
        if (n >= 1) {
          const CVec3& gy = basis.gradY(n, m);
          es_inf += phase / ks *
                    (kI * ks * sol.c.at(n, m) * gy -
                     ks * ks * sol.b.at(n, m) * ccross(xc, gy));
        }
      }
    }
    const CVec3 up = kI / kp * vp_inf * xc;
    const CVec3 us = kI / ks * ccross(xc, es_inf);
    out.up.push_back(up);
    out.us.push_back(us);
    out.ut.push_back(up + us);
  }
  return out;
}

}  // namespace ews::ball
