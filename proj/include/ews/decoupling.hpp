#pragma once

#include <functional>
#include <span>

#include "ews/ball_solver.hpp"
#include "ews/core.hpp"

namespace ews::decoupling {

using ball::BoundaryGrid;
using ball::MultipoleSolution;
using ball::ResidualNorms;
using harmonics::UnitVector;
using wavefuncs::WaveParams;

/// Residuals of the kind-matched decoupling pair, normalized by the incident
/// amplitude scale max(|alpha_p| kp, |alpha_s| ks).
///   kind IV : div U = 0            and  nu x (curl curl U) = 0
///   kind III: nu . grad(div U) = 0 and  nu x (curl U) = 0
struct DecouplingResidual {
  BoundaryKind kind;
  ResidualNorms scalar;
  ResidualNorms vector;
  int ntheta = 0;
  int nphi = 0;
};

DecouplingResidual decoupling_residual(const MultipoleSolution& sol,
                                       const BoundaryGrid& grid);

/// Split a total far-field pattern into its radial/tangential parts and map
/// them to the scalar and Maxwell far fields:
///   vp_inf = -i kp x^ . Up_inf,   Es_inf = i ks x^ x Us_inf.
struct FarFieldCorrespondence {
  std::vector<Complex> vp_inf;
  std::vector<CVec3> es_inf;
};
FarFieldCorrespondence farfield_correspondence(std::span<const Vec3> dirs,
                                               std::span<const CVec3> ut_inf,
                                               const WaveParams& params);

/// Inverse map of farfield_correspondence.
struct FarFieldParts {
  std::vector<CVec3> up_inf;
  std::vector<CVec3> us_inf;
};
FarFieldParts farfield_from_correspondence(std::span<const Vec3> dirs,
                                           std::span<const Complex> vp_inf,
                                           std::span<const CVec3> es_inf,
                                           const WaveParams& params);

/// Plane n . x = offset together with the two reflections it induces.
struct ReflectionPlane {
  UnitVector normal;
  double offset = 0.0;
};
Vec3 reflect_point(const ReflectionPlane& plane, const Vec3& x);
Vec3 reflect_linear(const ReflectionPlane& plane, const Vec3& v);
CVec3 reflect_linear(const ReflectionPlane& plane, const CVec3& v);

using ScalarField = std::function<Complex(const Vec3&)>;
using VectorField = std::function<CVec3(const Vec3&)>;

/// Finite-difference verification of the reflection identities
///   grad(v o R)   = R'(grad v) o R          (scalar part)
///   curl(-R' E o R) = R'(curl E) o R        (vector part)
/// at the probe points. A null sampler skips its identity.
struct ReflectReport {
  double max_gradient_mismatch = 0.0;
  double max_curl_mismatch = 0.0;
};
ReflectReport reflect_check(const ScalarField& scalar_field,
                            const VectorField& vector_field,
                            const ReflectionPlane& plane,
                            std::span<const Vec3> probes,
                            double fd_step = 1e-5);

}  // namespace ews::decoupling
