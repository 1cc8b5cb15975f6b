#pragma once

#include <span>
#include <vector>

#include "ews/core.hpp"
#include "ews/harmonics.hpp"

namespace ews::metrics {

using harmonics::UnitVector;

/// A far-field pattern sampled on a quadrature grid over the unit sphere.
struct FarFieldPattern {
  enum class Tag { P, S, T };
  std::vector<UnitVector> directions;
  std::vector<double> weights;  // positive, sum 4*pi
  std::vector<CVec3> values;
  Tag tag = Tag::T;

  void validate() const;
};

/// Quadrature-weighted L2(S^2) distance between two patterns sampled on the
/// same grid.
double farfield_distance(const FarFieldPattern& F, const FarFieldPattern& G);

/// Hausdorff distance between finite point sets.
double hausdorff(std::span<const Vec3> A, std::span<const Vec3> B);

/// Stability bound C * psi(s*epsilon)^alpha with
/// psi(t) = exp(-sqrt(log(-log t))), defined for t in (0, 1/e).
double stability_modulus(double epsilon, double s, double C, double alpha);

}  // namespace ews::metrics
