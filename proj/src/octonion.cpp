#include "octo/octonion.hpp"

#include <cmath>
#include <stdexcept>

#include "octo/format.hpp"

namespace octo {

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Octonion operator-(const Octonion& a) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

Octonion operator*(double s, const Octonion& a) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
  return r;
}

Octonion operator+(double s, const Octonion& a) {
  Octonion r = a;
  r.c[0] += s;
  return r;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  const Quaternion ap = a.first(), app = a.second();
  const Quaternion bp = b.first(), bpp = b.second();
  return Octonion::from_pair(ap * bp - conj(bpp) * app, bpp * ap + app * conj(bp));
}

Octonion conj(const Octonion& a) {
  Octonion r;
  r.c[0] = a.c[0];
  for (int i = 1; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

double norm_sq(const Octonion& a) {
  double s = 0.0;
  for (double x : a.c) s += x * x;
  return s;
}

double norm(const Octonion& a) { return std::sqrt(norm_sq(a)); }

Octonion inverse(const Octonion& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw std::domain_error("inverse of zero octonion");
  return (1.0 / n2) * conj(a);
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& x) {
  return (a * b) * x - a * (b * x);
}

Octonion parse_octonion(const std::string& text) {
  const auto fields = split(text, ',');
  if (fields.size() != 8)
    throw format_error("octonion literal needs 8 comma-separated reals, got " +
                       std::to_string(fields.size()));
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = parse_real(fields[static_cast<size_t>(i)]);
  return o;
}

std::string format_octonion(const Octonion& a) {
  std::string out = fmt_real(a.c[0]);
  for (int i = 1; i < 8; ++i) {
    out += ',';
    out += fmt_real(a.c[i]);
  }
  return out;
}

Quaternion random_quaternion(Rng& rng) {
  return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

Octonion random_octonion(Rng& rng) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = rng.uniform(-1, 1);
  return o;
}

Octonion random_unit_octonion(Rng& rng) {
  Octonion o = random_octonion(rng);
  double n = norm(o);
  while (n < 1e-3) {
    o = random_octonion(rng);
    n = norm(o);
  }
  return (1.0 / n) * o;
}

Octonion random_imaginary_octonion(Rng& rng) {
  Octonion o = random_octonion(rng);
  o.c[0] = 0.0;
  return o;
}

}  // namespace octo
