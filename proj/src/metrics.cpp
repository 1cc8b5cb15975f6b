#include "ews/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ews::metrics {

void FarFieldPattern::validate() const {
  if (directions.size() != weights.size() ||
      directions.size() != values.size()) {
    throw std::invalid_argument("far-field pattern arrays differ in length");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 4.0 * std::numbers::pi) > 1e-10) {
    throw std::invalid_argument("weights must sum to 4*pi");
  }
}

double farfield_distance(const FarFieldPattern& F, const FarFieldPattern& G) {
  F.validate();
  G.validate();
  if (F.directions.size() != G.directions.size()) {
    throw std::invalid_argument("far-field grids have different sizes");
  }
  for (size_t i = 0; i < F.directions.size(); ++i) {
    if ((F.directions[i].v() - G.directions[i].v()).norm() > 1e-12 ||
        std::abs(F.weights[i] - G.weights[i]) > 1e-12) {
      throw std::invalid_argument("far-field grids do not match");
    }
  }
  double sum = 0.0;
  for (size_t i = 0; i < F.values.size(); ++i) {
    sum += F.weights[i] * (F.values[i] - G.values[i]).squaredNorm();
  }
  return std::sqrt(sum);
}

double hausdorff(std::span<const Vec3> A, std::span<const Vec3> B) {
  if (A.empty() || B.empty()) {
    throw std::domain_error("Hausdorff distance needs nonempty sets");
  }
  auto directed = [](std::span<const Vec3> X, std::span<const Vec3> Y) {
    double sup = 0.0;
    for (const Vec3& x : X) {
      double inf = std::numeric_limits<double>::infinity();
      for (const Vec3& y : Y) inf = std::min(inf, (x - y).norm());
      sup = std::max(sup, inf);
    }
    return sup;
  };
  return std::max(directed(A, B), directed(B, A));
}

double stability_modulus(double epsilon, double s, double C, double alpha) {
  if (!(s > 0.0) || !(C > 0.0) || !(alpha > 0.0)) {
    throw std::domain_error("constants s, C, alpha must be positive");
  }
  const double t = s * epsilon;
  if (!(t > 0.0) || !(t < std::exp(-1.0))) {
    throw std::domain_error("argument s*epsilon must lie in (0, 1/e)");
  }
  const double psi = std::exp(-std::sqrt(std::log(-std::log(t))));
  return C * std::pow(psi, alpha);
}

}  // namespace ews::metrics
