#pragma once

#include <cmath>
#include <vector>

#include "octo/octonion.hpp"
#include "octo/realmat.hpp"

namespace testsupport {

// Structure-constant table for the canonical basis: e_s e_t = sign * e_idx,
// encoded as a signed 1-based index. Independent of the Cayley-Dickson
// production path; serves as the multiplication oracle.
constexpr int kMulTable[8][8] = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},
    {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},
    {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},
    {8, -7, 6, 5, -4, -3, 2, -1},
};

inline octo::Octonion table_mul(const octo::Octonion& a, const octo::Octonion& b) {
  octo::Octonion r;
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) {
      const double w = a.c[static_cast<size_t>(s)] * b.c[static_cast<size_t>(t)];
      if (w == 0.0) continue;
      const int v = kMulTable[s][t];
      const int idx = (v > 0 ? v : -v) - 1;
      r.c[static_cast<size_t>(idx)] += v > 0 ? w : -w;
    }
  return r;
}

// Plain i-j-k triple loop, the product oracle for the production kernel.
inline octo::RealMatrix naive_mat_mul(const octo::RealMatrix& a,
                                      const octo::RealMatrix& b) {
  octo::RealMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

// Cofactor expansion along the first row; exponential, fine for order <= 6.
inline double cofactor_det(const octo::RealMatrix& a) {
  const int n = a.rows();
  if (n == 1) return a(0, 0);
  double det = 0.0;
  for (int j = 0; j < n; ++j) {
    octo::RealMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    const double term = a(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool oclose(const octo::Octonion& a, const octo::Octonion& b, double tol) {
  return octo::norm(a - b) <= tol;
}

inline bool mclose(const octo::RealMatrix& a, const octo::RealMatrix& b, double tol) {
  return octo::max_abs_diff(a, b) <= tol;
}

inline bool poly_close(const octo::Polynomial& p, const octo::Polynomial& q,
                       double rtol) {
  if (p.coeffs.size() != q.coeffs.size()) return false;
  double scale = 1.0;
  for (double c : p.coeffs) scale = std::max(scale, std::fabs(c));
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    if (std::fabs(p.coeffs[i] - q.coeffs[i]) > rtol * scale) return false;
  return true;
}

inline octo::Octonion unit(int k) { return octo::Octonion::unit(k); }

}  // namespace testsupport
