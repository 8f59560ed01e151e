#pragma once

#include "octo/realmat.hpp"

namespace octo {

struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator*(double s, const Quaternion& a);

// Hamilton product. Component sums are ordered to match the rows of the
// left-representation pattern, so rep identities hold bit for bit.
Quaternion operator*(const Quaternion& a, const Quaternion& b);

Quaternion conj(const Quaternion& a);
double norm_sq(const Quaternion& a);
double norm(const Quaternion& a);
Quaternion inverse(const Quaternion& a);  // throws std::domain_error on zero

// 4x4 left matrix representation: vec(a x) == phi(a) vec(x).
RealMatrix phi(const Quaternion& a);

// 4x4 right matrix representation: vec(x b) == tau(b) vec(x).
// Equals K phi(a)^T K with K = diag(1, -1, -1, -1).
RealMatrix tau(const Quaternion& a);

RealVector vec(const Quaternion& x);

}  // namespace octo
