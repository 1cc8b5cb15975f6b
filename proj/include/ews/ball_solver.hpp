#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ews/core.hpp"
#include "ews/wavefuncs.hpp"

namespace ews::ball {

using harmonics::UnitVector;
using wavefuncs::FieldSample;
using wavefuncs::IncidentWave;
using wavefuncs::WaveParams;

struct BallScatterer {
  BallScatterer(double radius, BoundaryKind kind);
  double radius;
  BoundaryKind kind;
};

/// Per-mode boundary matching hit a numerically singular system.
class DegenerateModeError : public std::runtime_error {
 public:
  DegenerateModeError(int n, int m, const std::string& what);
  int n;
  int m;
};

/// Complex coefficients indexed by (n, m), 0 <= n <= nmax, |m| <= n.
class ModeTable {
 public:
  explicit ModeTable(int nmax);
  Complex& at(int n, int m) { return v_[idx(n, m)]; }
  Complex at(int n, int m) const { return v_[idx(n, m)]; }
  int nmax() const { return nmax_; }

 private:
  size_t idx(int n, int m) const;
  int nmax_;
  std::vector<Complex> v_;
};

/// Decoupled-candidate tables and the coupling corrections for a fourth-kind
/// ball. The P- and S-side corrections are distinct tables:
///   a = a_tilde + alpha_a,   b = b_tilde - alpha_b.
struct KindIVParts {
  ModeTable a_tilde;
  ModeTable b_tilde;
  ModeTable alpha_a;
  ModeTable alpha_b;
};

/// Decoupled-candidate tables and corrections for a third-kind ball:
///   a = a_check + beta,  b = b_check + gamma,  c = c_check + zeta.
struct KindIIIParts {
  ModeTable a_check;
  ModeTable b_check;
  ModeTable c_check;
  ModeTable beta;
  ModeTable gamma;
  ModeTable zeta;
};

/// Multipole representation of the scattered field of a ball:
///   U_p^sc = sum a_n^m grad u_n^m[h;kp]
///   U_s^sc = sum (b_n^m curl M_n^m[h;ks] + c_n^m M_n^m[h;ks])
struct MultipoleSolution {
  MultipoleSolution(const WaveParams& params, const IncidentWave& incident,
                    const BallScatterer& scatterer, int trunc);

  WaveParams params;
  IncidentWave incident;
  BallScatterer scatterer;
  int trunc;
  ModeTable a;
  ModeTable b;
  ModeTable c;
  std::optional<KindIVParts> iv;
  std::optional<KindIIIParts> iii;
};

/// Guard on the nondimensional size of the scatterer.
inline constexpr double kMaxKsR = 30.0;

/// Closed-form multipole solve of the third/fourth kind ball problem,
/// matching the boundary condition mode by mode.
MultipoleSolution solve_ball(const WaveParams& params,
                             const IncidentWave& incident,
                             const BallScatterer& scatterer, int N);

enum class FieldPart { Incident, Scattered, Total, P, S };

/// Displacement field samples at exterior points. P and S select the
/// pressure/shear part of the total field (incident part included).
/// Points marginally inside the boundary (within 0.1% of R) are accepted so
/// finite-difference stencils can straddle the sphere.
std::vector<FieldSample> eval_field(const MultipoleSolution& sol,
                                    std::span<const Vec3> points,
                                    FieldPart part);

/// v_p = -div U and E_s = curl U of the total field, term-wise.
struct ScalarVectorParts {
  std::vector<Complex> vp;
  std::vector<CVec3> es;
};
ScalarVectorParts eval_scalar_vector_parts(const MultipoleSolution& sol,
                                           std::span<const Vec3> points);

/// nu . TU and nu x TU on the boundary sphere, term-wise/analytic.
struct TractionSamples {
  std::vector<Complex> nu_dot_T;
  std::vector<CVec3> nu_cross_T;
};
TractionSamples boundary_traction(const MultipoleSolution& sol,
                                  std::span<const UnitVector> dirs);

/// Direction grid with quadrature weights for boundary norms.
struct BoundaryGrid {
  std::vector<UnitVector> dirs;
  std::vector<double> weights;  // sum 4*pi
  int ntheta = 0;
  int nphi = 0;
};
BoundaryGrid boundary_grid(int ntheta = 32, int nphi = 64);

struct ResidualNorms {
  double max_norm = 0.0;
  double l2_norm = 0.0;
};

/// Residuals of the kind's two boundary conditions over a sample grid.
/// Kind III reports (|nu.U|, |nu x TU|); kind IV reports (|nu x U|, |nu.TU|).
struct BoundaryResiduals {
  BoundaryKind kind;
  ResidualNorms first;
  ResidualNorms second;
  int ntheta = 0;
  int nphi = 0;
};
BoundaryResiduals boundary_residuals(const MultipoleSolution& sol,
                                     const BoundaryGrid& grid);

/// Far-field patterns: radial P part, tangential S part, and their sum.
struct FarFieldSamples {
  std::vector<CVec3> up;
  std::vector<CVec3> us;
  std::vector<CVec3> ut;
};
FarFieldSamples far_field(const MultipoleSolution& sol,
                          std::span<const UnitVector> dirs);

}  // namespace ews::ball
