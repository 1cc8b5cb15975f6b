#include "ews/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ews::harmonics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

void check_index(MultipoleIndex idx) {
  if (idx.n < 0 || std::abs(idx.m) > idx.n) {
    throw std::out_of_range("multipole index out of range: n=" +
                            std::to_string(idx.n) +
                            " m=" + std::to_string(idx.m));
  }
}

}  // namespace

UnitVector::UnitVector(const Vec3& v) {
  const double norm = v.norm();
  if (!(norm > 1e-14)) {
    throw std::domain_error("cannot normalize a near-zero vector");
  }
  v_ = v / norm;
}

TangentVector::TangentVector(const CVec3& c, const UnitVector& a)
    : components(c), anchor(a) {
  const double scale = 1.0 + components.norm();
  if (std::abs(cdot(anchor.v(), components)) > 1e-10 * scale) {
    throw std::invalid_argument("tangent vector is not tangent to its anchor");
  }
}

SphBasis::SphBasis(int nmax, const UnitVector& dir) : nmax_(nmax) {
  if (nmax < 0) throw std::out_of_range("negative degree");
  const size_t count = static_cast<size_t>(nmax + 1) * (nmax + 1);
  y_.assign(count, Complex(0, 0));
  g_.assign(count, CVec3::Zero());

  const double c = dir.z();
  const double s = std::hypot(dir.x(), dir.y());

  if (s < kPoleTol) {
    // Pole limits: only m = 0 values and |m| = 1 gradients are nonzero.
    const bool north = c > 0;
    for (int n = 0; n <= nmax; ++n) {
      const double sign = (north || n % 2 == 0) ? 1.0 : -1.0;
      y_[idx(n, 0)] = Complex(sign * std::sqrt((2 * n + 1) / (4.0 * kPi)), 0);
      if (n >= 1) {
        double cn =
            -0.5 * std::sqrt(n * (n + 1.0) * (2 * n + 1) / (4.0 * kPi));
        if (!north && n % 2 == 0) cn = -cn;  // (-1)^{n+1} flip at the south pole
        g_[idx(n, 1)] = CVec3(Complex(cn, 0), Complex(0, cn), Complex(0, 0));
        g_[idx(n, -1)] = CVec3(Complex(-cn, 0), Complex(0, cn), Complex(0, 0));
      }
    }
    return;
  }

  const double phi = std::atan2(dir.y(), dir.x());
  const Vec3 e_theta(c * std::cos(phi), c * std::sin(phi), -s);
  const Vec3 e_phi(-std::sin(phi), std::cos(phi), 0.0);

  // Normalized associated Legendre values P[n][m] via the stable three-term
  // recurrence, diagonal seeded with the Condon-Shortley phase.
  std::vector<std::vector<double>> P(nmax + 1);
  for (int n = 0; n <= nmax; ++n) P[n].assign(n + 1, 0.0);
  P[0][0] = 1.0 / std::sqrt(4.0 * kPi);
  for (int m = 1; m <= nmax; ++m) {
    P[m][m] = -std::sqrt((2 * m + 1.0) / (2.0 * m)) * s * P[m - 1][m - 1];
  }
  for (int m = 0; m < nmax; ++m) {
    P[m + 1][m] = std::sqrt(2 * m + 3.0) * c * P[m][m];
  }
  for (int m = 0; m <= nmax; ++m) {
    for (int n = m + 2; n <= nmax; ++n) {
      const double a = std::sqrt((4.0 * n * n - 1.0) /
                                 (static_cast<double>(n) * n - m * m));
      const double b = std::sqrt(
          (2.0 * n + 1) * (n - 1.0 - m) * (n - 1.0 + m) /
          ((2.0 * n - 3) * (static_cast<double>(n) - m) * (n + m)));
      P[n][m] = a * c * P[n - 1][m] - b * P[n - 2][m];
    }
  }

  // e^{i m phi}, built multiplicatively.
  std::vector<Complex> eim(nmax + 1);
  eim[0] = Complex(1, 0);
  const Complex e1 = std::polar(1.0, phi);
  for (int m = 1; m <= nmax; ++m) eim[m] = eim[m - 1] * e1;

  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= n; ++m) {
      // d/dtheta of the normalized Legendre factor.
      double prev = (n >= 1 && m <= n - 1) ? P[n - 1][m] : 0.0;
      const double e_nm =
          (n >= 1)
              ? std::sqrt((static_cast<double>(n) * n - m * m) *
                          (2.0 * n + 1) / (2.0 * n - 1))
              : 0.0;
      const double dP = (n * c * P[n][m] - e_nm * prev) / s;

      const Complex y = P[n][m] * eim[m];
      const Complex dtheta = dP * eim[m];
      const Complex dphi_over_s = Complex(0, m) * P[n][m] / s * eim[m];

      CVec3 grad = dtheta * e_theta.cast<Complex>() +
                   dphi_over_s * e_phi.cast<Complex>();
      y_[idx(n, m)] = y;
      g_[idx(n, m)] = grad;
      if (m > 0) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        y_[idx(n, -m)] = sign * std::conj(y);
        g_[idx(n, -m)] = sign * grad.conjugate();
      }
    }
  }
}

Complex sph_harmonic(MultipoleIndex idx, const UnitVector& dir) {
  check_index(idx);
  return SphBasis(idx.n, dir).Y(idx.n, idx.m);
}

TangentVector surface_grad_sph_harmonic(MultipoleIndex idx,
                                        const UnitVector& dir) {
  check_index(idx);
  return TangentVector(SphBasis(idx.n, dir).gradY(idx.n, idx.m), dir);
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n, starting from the Chebyshev-like estimate.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Recompute polynomial derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[n - 1 - i] = weights[i];
  }
}

SphereQuadrature sphere_quadrature(int ntheta, int nphi) {
  std::vector<double> x, w;
  gauss_legendre(ntheta, x, w);
  SphereQuadrature q;
  q.ntheta = ntheta;
  q.nphi = nphi;
  q.dirs.reserve(static_cast<size_t>(ntheta) * nphi);
  q.weights.reserve(static_cast<size_t>(ntheta) * nphi);
  const double dphi = 2.0 * kPi / nphi;
  for (int i = 0; i < ntheta; ++i) {
    const double c = x[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < nphi; ++j) {
      const double phi = dphi * j;
      q.dirs.emplace_back(Vec3(s * std::cos(phi), s * std::sin(phi), c));
      q.weights.push_back(w[i] * dphi);
    }
  }
  return q;
}

}  // namespace ews::harmonics
