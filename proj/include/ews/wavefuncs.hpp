#pragma once

#include "ews/core.hpp"
#include "ews/harmonics.hpp"
#include "ews/special.hpp"

namespace ews::wavefuncs {

using harmonics::MultipoleIndex;
using harmonics::UnitVector;
using special::RadialKind;

/// Material and frequency data with the derived wavenumbers.
/// Requires mu > 0 and 3*lambda + 2*mu > 0, which forces kp < ks.
struct WaveParams {
  WaveParams(double lambda, double mu, double omega);
  double lambda;
  double mu;
  double omega;
  double kp;  // omega / sqrt(lambda + 2 mu)
  double ks;  // omega / sqrt(mu)
};

/// Plane elastic wave  alpha_p d e^{i kp x.d} + alpha_s dperp e^{i ks x.d}.
struct IncidentWave {
  IncidentWave(const UnitVector& d, const UnitVector& dperp, Complex alpha_p,
               Complex alpha_s);
  UnitVector d;
  UnitVector dperp;
  Complex alpha_p;
  Complex alpha_s;
};

struct FieldSample {
  Vec3 point;
  CVec3 value;
};

/// Incident-field evaluation (pressure part, shear part, and their sum).
CVec3 incident_p(const WaveParams& wp, const IncidentWave& inc, const Vec3& x);
CVec3 incident_s(const WaveParams& wp, const IncidentWave& inc, const Vec3& x);
CVec3 incident_total(const WaveParams& wp, const IncidentWave& inc,
                     const Vec3& x);

/// u_n^m[f;k](x) = f_n(k|x|) Y_n^m(x^) and its Cartesian gradient.
struct ScalarWave {
  Complex value;
  CVec3 gradient;
};
ScalarWave scalar_wavefunc(RadialKind kind, double k, MultipoleIndex idx,
                           const Vec3& x);

/// M_n^m[f;k] = curl(x f_n(k|x|) Y_n^m(x^)) and curl M_n^m[f;k].
struct VectorWave {
  CVec3 M;
  CVec3 curlM;
};
VectorWave vector_wavefunc(RadialKind kind, double k, MultipoleIndex idx,
                           const Vec3& x);

/// Multipole coefficients of the plane wave relative to direction d and
/// polarization dperp:
///   A1 = 4 pi i^{n+1} conj(Y_n^m(d))
///   A2 = 4 pi i^{n+1} dperp . Grad conj(Y_n^m(d))
///   A3 = 4 pi i^n     dperp . (Grad conj(Y_n^m(d)) x d)
struct PlaneWaveCoeffs {
  Complex A1;
  Complex A2;
  Complex A3;
};
PlaneWaveCoeffs plane_wave_coeffs(MultipoleIndex idx, const UnitVector& d,
                                  const UnitVector& dperp);

enum class PlaneWavePart { Longitudinal, Transversal };

/// Truncated multipole expansion of d e^{ikx.d} (longitudinal) or
/// dperp e^{ikx.d} (transversal), summed through degree N.
CVec3 expand_plane_wave(PlaneWavePart which, double k, const UnitVector& d,
                        const UnitVector& dperp, int N, const Vec3& x);

/// Mie-style truncation rule: ceil(kr + 4 (kr)^{1/3} + 12).
int default_truncation(double kr);

}  // namespace ews::wavefuncs
