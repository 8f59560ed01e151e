#pragma once

#include <array>
#include <string>

#include "octo/quaternion.hpp"
#include "octo/rng.hpp"

namespace octo {

// Octonion with coefficients for the canonical basis 1, e1..e7, where
// e1 = i, e2 = j, e3 = k, e4 = e, e5 = ie, e6 = je, e7 = ke. Products use
// the Cayley-Dickson doubling of the quaternions.
struct Octonion {
  std::array<double, 8> c{};

  static Octonion scalar(double s) {
    Octonion o;
    o.c[0] = s;
    return o;
  }
  static Octonion unit(int k) {
    Octonion o;
    o.c[static_cast<size_t>(k)] = 1.0;
    return o;
  }

  double re() const { return c[0]; }
  Octonion im() const {
    Octonion o = *this;
    o.c[0] = 0.0;
    return o;
  }

  // Cayley-Dickson halves: a = first + second * e4.
  Quaternion first() const { return {c[0], c[1], c[2], c[3]}; }
  Quaternion second() const { return {c[4], c[5], c[6], c[7]}; }
  static Octonion from_pair(const Quaternion& p, const Quaternion& q) {
    return Octonion{{p.w, p.x, p.y, p.z, q.w, q.x, q.y, q.z}};
  }
};

Octonion operator+(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a);
Octonion operator*(double s, const Octonion& a);
Octonion operator+(double s, const Octonion& a);
Octonion operator*(const Octonion& a, const Octonion& b);

Octonion conj(const Octonion& a);
double norm_sq(const Octonion& a);
double norm(const Octonion& a);
Octonion inverse(const Octonion& a);  // throws std::domain_error on zero

// (ab)x - a(bx)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& x);

// Text literal: 8 comma-separated decimal reals in basis order
// "c0,c1,c2,c3,c4,c5,c6,c7".
Octonion parse_octonion(const std::string& text);
std::string format_octonion(const Octonion& a);

Quaternion random_quaternion(Rng& rng);          // components in [-1, 1]
Octonion random_octonion(Rng& rng);              // components in [-1, 1]
Octonion random_unit_octonion(Rng& rng);
Octonion random_imaginary_octonion(Rng& rng);    // zero real part

}  // namespace octo
