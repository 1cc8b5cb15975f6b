#include "ews/wavefuncs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ews::wavefuncs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_off_origin(const Vec3& x) {
  if (!(x.norm() > 0.0)) {
    throw std::domain_error("wave functions are singular at the origin");
  }
}

}  // namespace

WaveParams::WaveParams(double lambda_, double mu_, double omega_)
    : lambda(lambda_), mu(mu_), omega(omega_) {
  if (!(mu > 0.0)) throw std::domain_error("shear modulus must be positive");
  if (!(3.0 * lambda + 2.0 * mu > 0.0)) {
    throw std::domain_error("Lame constants must satisfy 3*lambda + 2*mu > 0");
  }
  if (!(omega > 0.0)) throw std::domain_error("frequency must be positive");
  kp = omega / std::sqrt(lambda + 2.0 * mu);
  ks = omega / std::sqrt(mu);
}

IncidentWave::IncidentWave(const UnitVector& d_, const UnitVector& dperp_,
                           Complex ap, Complex as)
    : d(d_), dperp(dperp_), alpha_p(ap), alpha_s(as) {
  if (std::abs(d.v().dot(dperp.v())) > 1e-12) {
    throw std::invalid_argument(
        "polarization must be orthogonal to the propagation direction");
  }
}

CVec3 incident_p(const WaveParams& wp, const IncidentWave& inc, const Vec3& x) {
  const Complex phase = std::exp(kI * (wp.kp * inc.d.v().dot(x)));
  return inc.alpha_p * phase * inc.d.v().cast<Complex>();
}

CVec3 incident_s(const WaveParams& wp, const IncidentWave& inc, const Vec3& x) {
  const Complex phase = std::exp(kI * (wp.ks * inc.d.v().dot(x)));
  return inc.alpha_s * phase * inc.dperp.v().cast<Complex>();
}

CVec3 incident_total(const WaveParams& wp, const IncidentWave& inc,
                     const Vec3& x) {
  return incident_p(wp, inc, x) + incident_s(wp, inc, x);
}

ScalarWave scalar_wavefunc(RadialKind kind, double k, MultipoleIndex idx,
                           const Vec3& x) {
  check_off_origin(x);
  const double r = x.norm();
  const UnitVector xhat(x);
  const special::RadialEval rad = special::radial_eval(kind, idx.n, k * r);
  const harmonics::SphBasis basis(idx.n, xhat);
  const Complex y = basis.Y(idx.n, idx.m);
  const CVec3& grad_y = basis.gradY(idx.n, idx.m);

  ScalarWave out;
  out.value = rad.f * y;
  out.gradient =
      k * rad.df * y * xhat.v().cast<Complex>() + rad.f / r * grad_y;
  return out;
}

VectorWave vector_wavefunc(RadialKind kind, double k, MultipoleIndex idx,
                           const Vec3& x) {
  check_off_origin(x);
  if (idx.n < 1) {
    throw std::out_of_range("vector wave functions require n >= 1");
  }
  const double r = x.norm();
  const UnitVector xhat(x);
  const special::RadialEval rad = special::radial_eval(kind, idx.n, k * r);
  const harmonics::SphBasis basis(idx.n, xhat);
  const Complex y = basis.Y(idx.n, idx.m);
  const CVec3& grad_y = basis.gradY(idx.n, idx.m);
  const CVec3 xc = xhat.v().cast<Complex>();

  VectorWave out;
  out.M = rad.f * ccross(grad_y, xc);
  out.curlM = idx.n * (idx.n + 1.0) * rad.f / r * y * xc +
              rad.check / r * grad_y;
  return out;
}

PlaneWaveCoeffs plane_wave_coeffs(MultipoleIndex idx, const UnitVector& d,
                                  const UnitVector& dperp) {
  if (std::abs(d.v().dot(dperp.v())) > 1e-12) {
    throw std::invalid_argument("plane_wave_coeffs requires d . dperp = 0");
  }
  const harmonics::SphBasis basis(idx.n, d);
  const Complex y_conj = std::conj(basis.Y(idx.n, idx.m));
  const CVec3 grad_conj = basis.gradY(idx.n, idx.m).conjugate();

  PlaneWaveCoeffs out;
  out.A1 = 4.0 * kPi * ipow(idx.n + 1) * y_conj;
  out.A2 = 4.0 * kPi * ipow(idx.n + 1) * cdot(dperp.v(), grad_conj);
  out.A3 = 4.0 * kPi * ipow(idx.n) *
           cdot(dperp.v(), ccross(grad_conj, d.v()));
  return out;
}

CVec3 expand_plane_wave(PlaneWavePart which, double k, const UnitVector& d,
                        const UnitVector& dperp, int N, const Vec3& x) {
  if (N < 1) throw std::invalid_argument("truncation degree must be >= 1");
  // The expansion has a removable singularity at the origin: evaluating at
  // r = 1e-20 in an arbitrary direction perturbs the value far below double
  // precision.
  const bool at_origin = x.norm() < 1e-20;
  const double r = at_origin ? 1e-20 : x.norm();
  const UnitVector xhat = at_origin ? UnitVector(1.0, 0.0, 0.0) : UnitVector(x);
  const std::vector<special::RadialEval> rad =
      special::radial_eval_all(RadialKind::J, N, k * r);
  const harmonics::SphBasis at_x(N, xhat);
  const harmonics::SphBasis at_d(N, d);
  const CVec3 xc = xhat.v().cast<Complex>();

  CVec3 sum = CVec3::Zero();
  if (which == PlaneWavePart::Longitudinal) {
    // d e^{ikx.d} = -(1/k) sum A1 grad u_n^m[j;k]
    for (int n = 0; n <= N; ++n) {
      for (int m = -n; m <= n; ++m) {
        const Complex a1 =
            4.0 * kPi * ipow(n + 1) * std::conj(at_d.Y(n, m));
        const CVec3 grad_u = k * rad[n].df * at_x.Y(n, m) * xc +
                             rad[n].f / r * at_x.gradY(n, m);
        sum += a1 * grad_u;
      }
    }
    return -sum / k;
  }

  // dperp e^{ikx.d} = sum A3/(n(n+1)) M[j] - (1/k) sum A2/(n(n+1)) curl M[j]
  for (int n = 1; n <= N; ++n) {
    const double nn1 = n * (n + 1.0);
    for (int m = -n; m <= n; ++m) {
      const CVec3 grad_conj = at_d.gradY(n, m).conjugate();
      const Complex a2 =
          4.0 * kPi * ipow(n + 1) * cdot(dperp.v(), grad_conj);
      const Complex a3 =
          4.0 * kPi * ipow(n) *
          cdot(dperp.v(), ccross(grad_conj, d.v()));
      const CVec3 M = rad[n].f * ccross(at_x.gradY(n, m), xc);
      const CVec3 curlM = nn1 * rad[n].f / r * at_x.Y(n, m) * xc +
                          rad[n].check / r * at_x.gradY(n, m);
      sum += a3 / nn1 * M - a2 / (nn1 * k) * curlM;
    }
  }
  return sum;
}

int default_truncation(double kr) {
  return static_cast<int>(std::ceil(kr + 4.0 * std::cbrt(kr) + 12.0));
}

}  // namespace ews::wavefuncs
