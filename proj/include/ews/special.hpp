#pragma once

#include <complex>
#include <vector>

namespace ews::special {

using Complex = std::complex<double>;

/// Which radial function backs a wave mode: regular (entire) or radiating.
enum class RadialKind {
  J,   // spherical Bessel j_n
  H1,  // spherical Hankel of the first kind h_n
};

/// Value, first and second derivative of the radial function at t, plus the
/// two combinations that keep showing up in the boundary-matching algebra:
///   check = f(t) + t f'(t),   tilde = f(t) - t f'(t).
/// For kind J every imaginary part is exactly zero.
struct RadialEval {
  Complex f;
  Complex df;
  Complex ddf;
  Complex check;
  Complex tilde;
};

/// Hard cap on the order unless the caller raises it explicitly.
inline constexpr int kDefaultOrderCap = 200;

/// j_n(t) for n = 0..nmax, t > 0. Downward (Miller) recurrence normalized
/// against whichever of j_0, j_1 is larger in magnitude.
std::vector<double> sph_bessel_j(int nmax, double t);

/// y_n(t) for n = 0..nmax, t > 0. Upward recurrence from closed forms.
std::vector<double> sph_bessel_y(int nmax, double t);

/// h_n(t) = j_n(t) + i y_n(t) for n = 0..nmax.
std::vector<Complex> sph_hankel1(int nmax, double t);

RadialEval radial_eval(RadialKind kind, int n, double t,
                       int order_cap = kDefaultOrderCap);

/// All orders 0..nmax at once; the solver's workhorse.
std::vector<RadialEval> radial_eval_all(RadialKind kind, int nmax, double t,
                                        int order_cap = kDefaultOrderCap);

}  // namespace ews::special
