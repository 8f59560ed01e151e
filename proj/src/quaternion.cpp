#include "octo/quaternion.hpp"

#include <cmath>
#include <stdexcept>

namespace octo {

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.x * b.w + a.w * b.x - a.z * b.y + a.y * b.z,
          a.y * b.w + a.z * b.x + a.w * b.y - a.x * b.z,
          a.z * b.w - a.y * b.x + a.x * b.y + a.w * b.z};
}

Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

double norm_sq(const Quaternion& a) {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

double norm(const Quaternion& a) { return std::sqrt(norm_sq(a)); }

Quaternion inverse(const Quaternion& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return (1.0 / n2) * conj(a);
}

namespace {

// Signed 1-based coefficient index per matrix cell; |v|-1 selects the
// coefficient, the sign multiplies it.
constexpr int kPhi[4][4] = {{1, -2, -3, -4},
                            {2, 1, -4, 3},
                            {3, 4, 1, -2},
                            {4, -3, 2, 1}};

constexpr int kTau[4][4] = {{1, -2, -3, -4},
                            {2, 1, 4, -3},
                            {3, -4, 1, 2},
                            {4, 3, -2, 1}};

RealMatrix from_pattern(const int (&pat)[4][4], const Quaternion& a) {
  const double c[4] = {a.w, a.x, a.y, a.z};
  RealMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int v = pat[i][j];
      const double e = c[(v > 0 ? v : -v) - 1];
      m(i, j) = v > 0 ? e : -e;
    }
  return m;
}

}  // namespace

RealMatrix phi(const Quaternion& a) { return from_pattern(kPhi, a); }

RealMatrix tau(const Quaternion& a) { return from_pattern(kTau, a); }

RealVector vec(const Quaternion& x) { return RealVector{x.w, x.x, x.y, x.z}; }

}  // namespace octo
