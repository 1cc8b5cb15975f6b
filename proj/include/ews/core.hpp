#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ews {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

/// Boundary condition family of an impenetrable scatterer.
///   III : nu . U = 0  and  nu x TU = 0
///   IV  : nu x U = 0  and  nu . TU = 0
enum class BoundaryKind { III, IV };

inline const char* to_string(BoundaryKind k) {
  return k == BoundaryKind::III ? "III" : "IV";
}

/// i^k for any integer k (period 4).
inline Complex ipow(int k) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

/// Bilinear dot product of complex 3-vectors (no conjugation).
inline Complex cdot(const CVec3& a, const CVec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

inline Complex cdot(const Vec3& a, const CVec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

/// Bilinear cross product. Eigen's cross() conjugates its result for complex
/// scalars, which is never what the wave-function algebra wants.
inline CVec3 ccross(const CVec3& a, const CVec3& b) {
  return CVec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
               a(0) * b(1) - a(1) * b(0));
}

inline CVec3 ccross(const Vec3& a, const CVec3& b) {
  return ccross(CVec3(a.cast<Complex>()), b);
}

inline CVec3 ccross(const CVec3& a, const Vec3& b) {
  return ccross(a, CVec3(b.cast<Complex>()));
}

}  // namespace ews
