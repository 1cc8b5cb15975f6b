#pragma once

// Test-side oracles, independent of the library's computation paths:
// extended-precision series, finite-difference differential operators, and
// the per-mode collocation solve for ball coefficients.

#include <functional>
#include <random>
#include <vector>

#include "ews/ball_solver.hpp"
#include "ews/core.hpp"

namespace oracles {

using ews::Complex;
using ews::CVec3;
using ews::Vec3;
using ews::harmonics::UnitVector;

using ScalarF = std::function<Complex(const Vec3&)>;
using VectorF = std::function<CVec3(const Vec3&)>;

// j_n(t) by direct power-series summation in long double.
double series_sph_bessel_j(int n, double t);

// Second-order central differences (step h).
CVec3 fd_grad(const ScalarF& f, const Vec3& x, double h);
Complex fd_div(const VectorF& f, const Vec3& x, double h);
CVec3 fd_curl(const VectorF& f, const Vec3& x, double h);
Complex fd_laplacian(const ScalarF& f, const Vec3& x, double h);
CVec3 fd_vec_laplacian(const VectorF& f, const Vec3& x, double h);

// Fourth-order central differences for the collocation oracle.
CVec3 fd_grad4(const ScalarF& f, const Vec3& x, double h);
Complex fd_div4(const VectorF& f, const Vec3& x, double h);
CVec3 fd_curl4(const VectorF& f, const Vec3& x, double h);
CVec3 fd_dirderiv4(const VectorF& f, const Vec3& x, const Vec3& dir, double h);

// grad(div U) by nested central differences.
CVec3 fd_grad_div(const VectorF& f, const Vec3& x, double h);

// Lame operator residual (Delta* + omega^2) U by finite differences.
CVec3 fd_lame_residual(const VectorF& f, const Vec3& x, double lambda,
                       double mu, double omega, double h);

// Traction T U = 2 mu (nu.grad) U + lambda nu (div U) + mu nu x (curl U)
// evaluated by fourth-order finite differences.
CVec3 fd_traction(const VectorF& f, const Vec3& x, const Vec3& nu,
                  double lambda, double mu, double h);

// Quasi-uniform deterministic point set on the unit sphere.
std::vector<UnitVector> fibonacci_sphere(int n);

// Seeded random helpers.
Vec3 random_point(std::mt19937& rng, double rmin, double rmax);
UnitVector random_unit(std::mt19937& rng);
UnitVector orthogonal_unit(const UnitVector& d, std::mt19937& rng);

// Independent least-squares solve of one (n, m) mode of the ball problem:
// impose the boundary conditions of the scatterer's kind at sample points on
// the span of the three radiating basis fields, with tractions evaluated by
// finite differences.
struct CollocationCoeffs {
  Complex a{0, 0};
  Complex b{0, 0};
  Complex c{0, 0};
};
CollocationCoeffs collocate_mode(const ews::wavefuncs::WaveParams& params,
                                 const ews::wavefuncs::IncidentWave& incident,
                                 const ews::ball::BallScatterer& scatterer,
                                 int n, int m, int npts = 40,
                                 double fd_h = 1e-4);

}  // namespace oracles
