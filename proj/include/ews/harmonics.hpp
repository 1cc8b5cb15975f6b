#pragma once

#include <vector>

#include "ews/core.hpp"

namespace ews::harmonics {

/// Degree/order pair of a multipole, |m| <= n.
struct MultipoleIndex {
  int n;
  int m;
};

/// A direction on the unit sphere. The constructor normalizes and rejects
/// near-zero input, so instances always carry a unit vector.
class UnitVector {
 public:
  explicit UnitVector(const Vec3& v);
  UnitVector(double x, double y, double z) : UnitVector(Vec3(x, y, z)) {}

  const Vec3& v() const { return v_; }
  double x() const { return v_(0); }
  double y() const { return v_(1); }
  double z() const { return v_(2); }

 private:
  Vec3 v_;
};

/// A complex vector tangent to the sphere at its anchor direction.
struct TangentVector {
  TangentVector(const CVec3& components, const UnitVector& anchor);
  CVec3 components;
  UnitVector anchor;
};

/// Y_n^m and Grad Y_n^m for every (n, m) with n <= nmax at one direction.
/// Orthonormal convention with Condon-Shortley phase; Grad is the surface
/// gradient on the unit sphere. Values at the poles use the analytic limits
/// (only m = 0 harmonics and |m| = 1 gradients survive there).
class SphBasis {
 public:
  SphBasis(int nmax, const UnitVector& dir);

  Complex Y(int n, int m) const { return y_[idx(n, m)]; }
  const CVec3& gradY(int n, int m) const { return g_[idx(n, m)]; }
  int nmax() const { return nmax_; }

 private:
  size_t idx(int n, int m) const {
    return static_cast<size_t>(n) * n + n + m;
  }
  int nmax_;
  std::vector<Complex> y_;
  std::vector<CVec3> g_;
};

Complex sph_harmonic(MultipoleIndex idx, const UnitVector& dir);
TangentVector surface_grad_sph_harmonic(MultipoleIndex idx,
                                        const UnitVector& dir);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Product quadrature on the unit sphere: Gauss-Legendre in cos(theta) times
/// uniform trapezoid in phi. Weights sum to 4*pi.
struct SphereQuadrature {
  std::vector<UnitVector> dirs;
  std::vector<double> weights;
  int ntheta = 0;
  int nphi = 0;
};
SphereQuadrature sphere_quadrature(int ntheta = 64, int nphi = 128);

}  // namespace ews::harmonics
