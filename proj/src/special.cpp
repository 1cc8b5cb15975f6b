#include "ews/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ews::special {

namespace {

void check_domain(int n, double t, int order_cap) {
  if (!(t > 0.0)) {
    throw std::domain_error("radial argument must be positive");
  }
  if (n < 0) {
    throw std::out_of_range("radial order must be nonnegative");
  }
  if (n > order_cap) {
    throw std::out_of_range("radial order " + std::to_string(n) +
                            " exceeds cap " + std::to_string(order_cap));
  }
}

}  // namespace

std::vector<double> sph_bessel_j(int nmax, double t) {
  if (t < 1e-8) {
    // Two-term Taylor expansion; relative error O(t^4). The closed forms
    // below cancel catastrophically here.
    std::vector<double> out(static_cast<size_t>(nmax) + 1);
    double lead = 1.0;  // t^n / (2n+1)!!
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) lead *= t / (2.0 * n + 1.0);
      out[n] = lead * (1.0 - t * t / (2.0 * (2.0 * n + 3.0)));
    }
    return out;
  }

  const double j0 = std::sin(t) / t;
  if (nmax == 0) return {j0};
  const double j1 = std::sin(t) / (t * t) - std::cos(t) / t;
  if (nmax == 1) return {j0, j1};

  // Upward recurrence is unstable once n > t, so run Miller downward in long
  // double from a start order padded past both n and t. The padding makes the
  // contamination from the arbitrary seed decay below machine precision by
  // the time the recurrence reaches nmax.
  const int pad =
      15 + static_cast<int>(std::ceil(std::sqrt(20.0 * std::max(t, 1.0))));
  const int start = std::max(nmax, static_cast<int>(std::ceil(t))) + pad;

  std::vector<long double> v(static_cast<size_t>(start) + 2, 0.0L);
  v[start + 1] = 0.0L;
  v[start] = 1e-30L;
  const long double lt = t;
  for (int k = start; k >= 1; --k) {
    v[k - 1] = (2 * k + 1) / lt * v[k] - v[k + 1];
    if (std::abs(v[k - 1]) > 1e4000L) {
      // keep the downward pass inside long double range; a common factor
      // drops out in the final normalization
      for (int i = k - 1; i <= start + 1; ++i) v[i] *= 1e-4000L;
    }
  }

  // Normalize against the larger of j_0, j_1 (j_0 vanishes at t = m*pi).
  long double scale;
  if (std::fabs(j0) >= std::fabs(j1)) {
    scale = static_cast<long double>(j0) / v[0];
  } else {
    scale = static_cast<long double>(j1) / v[1];
  }

  std::vector<double> out(static_cast<size_t>(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) {
    out[k] = static_cast<double>(v[k] * scale);
  }
  return out;
}

std::vector<double> sph_bessel_y(int nmax, double t) {
  std::vector<double> y(static_cast<size_t>(nmax) + 1);
  y[0] = -std::cos(t) / t;
  if (nmax >= 1) {
    y[1] = -std::cos(t) / (t * t) - std::sin(t) / t;
  }
  for (int k = 1; k < nmax; ++k) {
    y[k + 1] = (2 * k + 1) / t * y[k] - y[k - 1];
    if (!std::isfinite(y[k + 1])) {
      throw std::overflow_error("spherical Bessel y_n overflow at order " +
                                std::to_string(k + 1) + ", argument " +
                                std::to_string(t));
    }
  }
  return y;
}

std::vector<Complex> sph_hankel1(int nmax, double t) {
  const std::vector<double> j = sph_bessel_j(nmax, t);
  const std::vector<double> y = sph_bessel_y(nmax, t);
  std::vector<Complex> h(static_cast<size_t>(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) h[k] = Complex(j[k], y[k]);
  return h;
}

std::vector<RadialEval> radial_eval_all(RadialKind kind, int nmax, double t,
                                        int order_cap) {
  check_domain(nmax, t, order_cap);
  const int top = std::max(nmax, 1);

  std::vector<Complex> f(static_cast<size_t>(top) + 1);
  if (kind == RadialKind::J) {
    const std::vector<double> j = sph_bessel_j(top, t);
    for (int k = 0; k <= top; ++k) f[k] = Complex(j[k], 0.0);
  } else {
    f = sph_hankel1(top, t);
  }

  std::vector<RadialEval> out(static_cast<size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    RadialEval e;
    e.f = f[n];
    // f'_n = f_{n-1} - ((n+1)/t) f_n, with f'_0 = -f_1.
    e.df = (n == 0) ? -f[1] : f[n - 1] - (n + 1) / t * f[n];
    // Second derivative from the spherical Bessel ODE.
    e.ddf = -2.0 / t * e.df + (n * (n + 1.0) / (t * t) - 1.0) * e.f;
    e.check = e.f + t * e.df;
    e.tilde = e.f - t * e.df;
    out[n] = e;
  }
  return out;
}

RadialEval radial_eval(RadialKind kind, int n, double t, int order_cap) {
  check_domain(n, t, order_cap);
  return radial_eval_all(kind, n, t, order_cap)[n];
}

}  // namespace ews::special
