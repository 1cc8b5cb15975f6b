#include "ews/decoupling.hpp"

#include <cmath>

namespace ews::decoupling {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

DecouplingResidual decoupling_residual(const MultipoleSolution& sol,
                                       const BoundaryGrid& grid) {
  const double R = sol.scatterer.radius;
  const double kp = sol.params.kp;
  const double ks = sol.params.ks;
  const double amp = std::max(std::abs(sol.incident.alpha_p) * kp,
                              std::abs(sol.incident.alpha_s) * ks);
  const double norm = amp > 0.0 ? amp : 1.0;

  std::vector<Vec3> pts;
  pts.reserve(grid.dirs.size());
  for (const UnitVector& nu : grid.dirs) pts.push_back(R * nu.v());

  DecouplingResidual out;
  out.kind = sol.scatterer.kind;
  out.ntheta = grid.ntheta;
  out.nphi = grid.nphi;

  double sum_s = 0.0, sum_v = 0.0;
  if (sol.scatterer.kind == BoundaryKind::IV) {
    // Scalar: div U = -v_p. Vector: curl curl U = ks^2 U_s (total S part).
    const ball::ScalarVectorParts parts =
        ball::eval_scalar_vector_parts(sol, pts);
    const std::vector<ball::FieldSample> us =
        ball::eval_field(sol, pts, ball::FieldPart::S);
    for (size_t i = 0; i < pts.size(); ++i) {
      const double qs = std::abs(parts.vp[i]) / norm;
      const CVec3 nuc = grid.dirs[i].v().cast<Complex>();
      const double qv = ks * ks * ccross(nuc, us[i].value).norm() / norm;
      out.scalar.max_norm = std::max(out.scalar.max_norm, qs);
      out.vector.max_norm = std::max(out.vector.max_norm, qv);
      sum_s += grid.weights[i] * qs * qs;
      sum_v += grid.weights[i] * qv * qv;
    }
  } else {
    // Scalar: nu . grad(div U) by central FD of the term-wise v_p along nu.
    // The truncated series continues smoothly through the boundary, so the
    // inward stencil leg is well defined.
    const double h = 1e-5 * R;
    std::vector<Vec3> plus, minus;
    plus.reserve(pts.size());
    minus.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      plus.push_back(pts[i] + h * grid.dirs[i].v());
      minus.push_back(pts[i] - h * grid.dirs[i].v());
    }
    const ball::ScalarVectorParts at_plus =
        ball::eval_scalar_vector_parts(sol, plus);
    const ball::ScalarVectorParts at_minus =
        ball::eval_scalar_vector_parts(sol, minus);
    const ball::ScalarVectorParts at_mid =
        ball::eval_scalar_vector_parts(sol, pts);
    for (size_t i = 0; i < pts.size(); ++i) {
      // nu . grad(div U) = -d(v_p)/d(nu)
      const Complex dvp = (at_plus.vp[i] - at_minus.vp[i]) / (2.0 * h);
      const double qs = std::abs(dvp) / norm;
      const CVec3 nuc = grid.dirs[i].v().cast<Complex>();
      const double qv = ccross(nuc, at_mid.es[i]).norm() / norm;
      out.scalar.max_norm = std::max(out.scalar.max_norm, qs);
      out.vector.max_norm = std::max(out.vector.max_norm, qv);
      sum_s += grid.weights[i] * qs * qs;
      sum_v += grid.weights[i] * qv * qv;
    }
  }
  out.scalar.l2_norm = std::sqrt(sum_s);
  out.vector.l2_norm = std::sqrt(sum_v);
  return out;
}

FarFieldCorrespondence farfield_correspondence(std::span<const Vec3> dirs,
                                               std::span<const CVec3> ut_inf,
                                               const WaveParams& params) {
  if (dirs.size() != ut_inf.size()) {
    throw std::invalid_argument("direction and value counts differ");
  }
  FarFieldCorrespondence out;
  out.vp_inf.reserve(dirs.size());
  out.es_inf.reserve(dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) {
    if (std::abs(dirs[i].norm() - 1.0) > 1e-10) {
      throw std::invalid_argument("far-field directions must be unit vectors");
    }
    const CVec3 xc = dirs[i].cast<Complex>();
    const CVec3 up = cdot(dirs[i], ut_inf[i]) * xc;
    const CVec3 us = ccross(ccross(xc, ut_inf[i]), xc);
    out.vp_inf.push_back(-kI * params.kp * cdot(dirs[i], up));
    out.es_inf.push_back(kI * params.ks * ccross(xc, us));
  }
  return out;
}

FarFieldParts farfield_from_correspondence(std::span<const Vec3> dirs,
                                           std::span<const Complex> vp_inf,
                                           std::span<const CVec3> es_inf,
                                           const WaveParams& params) {
  if (dirs.size() != vp_inf.size() || dirs.size() != es_inf.size()) {
    throw std::invalid_argument("direction and value counts differ");
  }
  FarFieldParts out;
  out.up_inf.reserve(dirs.size());
  out.us_inf.reserve(dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) {
    const CVec3 xc = dirs[i].cast<Complex>();
    out.up_inf.push_back(kI / params.kp * vp_inf[i] * xc);
    out.us_inf.push_back(kI / params.ks * ccross(xc, es_inf[i]));
  }
  return out;
}

Vec3 reflect_point(const ReflectionPlane& plane, const Vec3& x) {
  const Vec3& n = plane.normal.v();
  return x - 2.0 * ((x.dot(n) - plane.offset)) * n;
}

Vec3 reflect_linear(const ReflectionPlane& plane, const Vec3& v) {
  const Vec3& n = plane.normal.v();
  return v - 2.0 * v.dot(n) * n;
}

CVec3 reflect_linear(const ReflectionPlane& plane, const CVec3& v) {
  const CVec3 n = plane.normal.v().cast<Complex>();
  return v - 2.0 * cdot(plane.normal.v(), v) * n;
}

namespace {

CVec3 fd_gradient(const ScalarField& f, const Vec3& x, double h) {
  CVec3 g;
  for (int i = 0; i < 3; ++i) {
    Vec3 e = Vec3::Zero();
    e(i) = h;
    g(i) = (f(x + e) - f(x - e)) / (2.0 * h);
  }
  return g;
}

CVec3 fd_curl(const VectorField& f, const Vec3& x, double h) {
  Eigen::Matrix3cd jac;  // jac(i, j) = d f_i / d x_j
  for (int j = 0; j < 3; ++j) {
    Vec3 e = Vec3::Zero();
    e(j) = h;
    const CVec3 diff = (f(x + e) - f(x - e)) / (2.0 * h);
    jac.col(j) = diff;
  }
  return CVec3(jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0),
               jac(1, 0) - jac(0, 1));
}

}  // namespace

ReflectReport reflect_check(const ScalarField& scalar_field,
                            const VectorField& vector_field,
                            const ReflectionPlane& plane,
                            std::span<const Vec3> probes, double fd_step) {
  ReflectReport report;
  for (const Vec3& x : probes) {
    const Vec3 rx = reflect_point(plane, x);
    if (scalar_field) {
      const ScalarField composed = [&](const Vec3& y) {
        return scalar_field(reflect_point(plane, y));
      };
      const CVec3 lhs = fd_gradient(composed, x, fd_step);
      const CVec3 rhs = reflect_linear(plane, fd_gradient(scalar_field, rx, fd_step));
      report.max_gradient_mismatch =
          std::max(report.max_gradient_mismatch, (lhs - rhs).norm());
    }
    if (vector_field) {
      const VectorField composed = [&](const Vec3& y) {
        return CVec3(-reflect_linear(plane, vector_field(reflect_point(plane, y))));
      };
      const CVec3 lhs = fd_curl(composed, x, fd_step);
      const CVec3 rhs = reflect_linear(plane, fd_curl(vector_field, rx, fd_step));
      report.max_curl_mismatch =
          std::max(report.max_curl_mismatch, (lhs - rhs).norm());
    }
  }
  return report;
}

}  // namespace ews::decoupling
