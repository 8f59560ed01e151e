#include "octo/orep.hpp"

#include <cmath>
#include <stdexcept>

namespace octo {

namespace {

// Signed 1-based coefficient index per cell; |v|-1 selects the coefficient.
constexpr int kLeft[8][8] = {
    {1, -2, -3, -4, -5, -6, -7, -8},
    {2, 1, -4, 3, -6, 5, 8, -7},
    {3, 4, 1, -2, -7, -8, 5, 6},
    {4, -3, 2, 1, -8, 7, -6, 5},
    {5, 6, 7, 8, 1, -2, -3, -4},
    {6, -5, 8, -7, 2, 1, 4, -3},
    {7, -8, -5, 6, 3, -4, 1, 2},
    {8, 7, -6, -5, 4, 3, -2, 1},
};

constexpr int kRight[8][8] = {
    {1, -2, -3, -4, -5, -6, -7, -8},
    {2, 1, 4, -3, 6, -5, -8, 7},
    {3, -4, 1, 2, 7, 8, -5, -6},
    {4, 3, -2, 1, 8, -7, 6, -5},
    {5, -6, -7, -8, 1, 2, 3, 4},
    {6, 5, -8, 7, -2, 1, -4, 3},
    {7, 8, 5, -6, -3, 4, 1, -2},
    {8, -7, 6, 5, -4, -3, 2, 1},
};

RealMatrix from_pattern(const int (&pat)[8][8], const Octonion& a) {
  RealMatrix m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int v = pat[i][j];
      const double e = a.c[static_cast<size_t>((v > 0 ? v : -v) - 1)];
      m(i, j) = v > 0 ? e : -e;
    }
  return m;
}

}  // namespace

RealMatrix left_rep(const Octonion& a) { return from_pattern(kLeft, a); }

RealMatrix right_rep(const Octonion& a) { return from_pattern(kRight, a); }

RealMatrix rep(RepKind kind, const Octonion& a) {
  return kind == RepKind::Left ? left_rep(a) : right_rep(a);
}

RealVector vec(const Octonion& x) {
  RealVector v(8);
  for (int i = 0; i < 8; ++i) v[i] = x.c[static_cast<size_t>(i)];
  return v;
}

Octonion unvec(const RealVector& v) {
  if (v.dim() != 8) throw std::invalid_argument("unvec needs a vector of dimension 8");
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[static_cast<size_t>(i)] = v[i];
  return o;
}

RealMatrix delta(const Octonion& a, const Octonion& b) {
  return left_rep(a) - right_rep(b);
}

std::pair<double, double> delta_det_closed(const Octonion& a, const Octonion& b) {
  const double s = a.re() - b.re();
  const double na = norm(a.im());
  const double nb = norm(b.im());
  const double mix = norm_sq(a.im() + b.im());

  const double d1 = std::pow(norm_sq(a - conj(b)), 2) *
                    (s * s + (na - nb) * (na - nb)) * (s * s + (na + nb) * (na + nb));
  const double d2 =
      (s * s + mix) * (s * s + mix) *
      (s * s * s * s + 2.0 * s * s * (na * na + nb * nb) +
       (na * na - nb * nb) * (na * na - nb * nb));
  return {d1, d2};
}

Polynomial delta_char_poly(const Octonion& a, const Octonion& b) {
  const double s = a.re() - b.re();
  const double na = norm(a.im());
  const double nb = norm(b.im());
  const double mix = norm(a.im() + b.im());
  auto quad = [&](double t) { return Polynomial{{s * s + t * t, -2.0 * s, 1.0}}; };
  return poly_mul(poly_mul(quad(mix), quad(mix)),
                  poly_mul(quad(na - nb), quad(na + nb)));
}

RealMatrix mu(const Octonion& a, const Octonion& b) {
  const RealMatrix w = left_rep(a);
  const RealMatrix n = right_rep(b);
  return w * n - n * w;
}

RealMatrix rep_inverse(RepKind kind, const Octonion& a) {
  return rep(kind, inverse(a));
}

}  // namespace octo
