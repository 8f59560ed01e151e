#include "octo/realmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace octo {

namespace {

void ensure_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs)
    if (!std::isfinite(x)) throw std::domain_error(std::string("non-finite result in ") + what);
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double dot(const RealVector& a, const RealVector& b) {
  require(a.dim() == b.dim(), "vector dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const RealVector& a) { return std::sqrt(dot(a, a)); }

RealVector operator+(const RealVector& a, const RealVector& b) {
  require(a.dim() == b.dim(), "vector dimension mismatch");
  RealVector r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

RealVector operator-(const RealVector& a, const RealVector& b) {
  require(a.dim() == b.dim(), "vector dimension mismatch");
  RealVector r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

RealVector operator*(double s, const RealVector& a) {
  RealVector r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = s * a[i];
  return r;
}

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealVector RealMatrix::col(int j) const {
  RealVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix shape mismatch");
  RealMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      r(i, j) = a(i, j) + b(i, j);
      if (!std::isfinite(r(i, j))) throw std::domain_error("non-finite matrix sum");
    }
  return r;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix shape mismatch");
  RealMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      r(i, j) = a(i, j) - b(i, j);
      if (!std::isfinite(r(i, j))) throw std::domain_error("non-finite matrix difference");
    }
  return r;
}

RealMatrix operator*(double s, const RealMatrix& a) {
  RealMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      r(i, j) = s * a(i, j);
      if (!std::isfinite(r(i, j))) throw std::domain_error("non-finite matrix scaling");
    }
  return r;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  RealMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (!std::isfinite(r(i, j))) throw std::domain_error("non-finite matrix product");
  return r;
}

RealVector operator*(const RealMatrix& a, const RealVector& x) {
  require(a.cols() == x.dim(), "matrix-vector dimension mismatch");
  RealVector r(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

double inf_norm(const RealMatrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += std::fabs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double frob_norm(const RealMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double max_abs(const RealMatrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) best = std::max(best, std::fabs(a(i, j)));
  return best;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix shape mismatch");
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      best = std::max(best, std::fabs(a(i, j) - b(i, j)));
  return best;
}

double trace(const RealMatrix& a) {
  require(a.rows() == a.cols(), "trace of non-square matrix");
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

double determinant(const RealMatrix& a) {
  require(a.rows() == a.cols(), "determinant of non-square matrix");
  const int n = a.rows();
  RealMatrix m = a;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(m(piv, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

double Polynomial::eval(double x) const {
  double s = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) s = s * x + coeffs[i];
  return s;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, 0.0);
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    for (size_t j = 0; j < q.coeffs.size(); ++j)
      r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  return r;
}

Polynomial poly_pow(const Polynomial& p, int k) {
  Polynomial r{{1.0}};
  for (int i = 0; i < k; ++i) r = poly_mul(r, p);
  return r;
}

namespace {

// Radix-2 balancing: diagonal similarity scaling that roughly equalizes row
// and column norms. Leaves the characteristic polynomial unchanged.
void balance(RealMatrix& m) {
  const int n = m.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::fabs(m(j, i));
        r += std::fabs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        const double inv = 1.0 / f;
        for (int j = 0; j < n; ++j) m(i, j) *= inv;
        for (int j = 0; j < n; ++j) m(j, i) *= f;
      }
    }
  }
}

}  // namespace

Polynomial char_poly(const RealMatrix& a) {
  require(a.rows() == a.cols(), "characteristic polynomial of non-square matrix");
  const int n = a.rows();
  require(n >= 1 && n <= 64, "characteristic polynomial supports orders 1..64");
  RealMatrix w = a;
  if (n > 24) balance(w);

  Polynomial p;
  p.coeffs.assign(static_cast<size_t>(n) + 1, 0.0);
  p.coeffs[static_cast<size_t>(n)] = 1.0;
  RealMatrix m = w;
  p.coeffs[static_cast<size_t>(n - 1)] = -trace(m);
  for (int k = 2; k <= n; ++k) {
    RealMatrix shifted = m;
    const double c = p.coeffs[static_cast<size_t>(n - k + 1)];
    for (int i = 0; i < n; ++i) shifted(i, i) += c;
    m = w * shifted;
    p.coeffs[static_cast<size_t>(n - k)] = -trace(m) / k;
  }
  ensure_finite(p.coeffs, "char_poly");
  return p;
}

SymEigen sym_eigen(const RealMatrix& a) {
  require(a.rows() == a.cols(), "sym_eigen of non-square matrix");
  const int n = a.rows();
  const double scale = inf_norm(a);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(a(i, j) - a(j, i)) > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("sym_eigen requires a symmetric matrix");

  RealMatrix m = a;
  RealMatrix v = RealMatrix::identity(n);
  const double target = 1e-12 * frob_norm(a);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 64 && off_norm() > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double app = m(p, p), aqq = m(q, q);
        m(p, p) = app - t * apq;
        m(q, q) = aqq + t * apq;
        m(p, q) = m(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = m(k, p), akq = m(k, q);
          m(k, p) = m(p, k) = c * akp - s * akq;
          m(k, q) = m(q, k) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_norm() > target) throw std::runtime_error("Jacobi eigensolver did not converge");

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return m(i, i) < m(j, j); });

  SymEigen out;
  out.values = RealVector(n);
  out.vectors = RealMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<size_t>(j)];
    out.values[j] = m(src, src);
    int top = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(v(i, src)) > std::fabs(v(top, src))) top = i;
    const double sign = v(top, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
  }
  return out;
}

Svd svd(const RealMatrix& a) {
  const int r = a.rows(), c = a.cols();
  RealMatrix w = a;
  RealMatrix v = RealMatrix::identity(c);

  for (int sweep = 0; sweep < 64; ++sweep) {
    bool changed = false;
    for (int p = 0; p < c - 1; ++p) {
      for (int q = p + 1; q < c; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (int i = 0; i < r; ++i) {
          alpha += w(i, p) * w(i, p);
          beta += w(i, q) * w(i, q);
          gamma += w(i, p) * w(i, q);
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::fabs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        changed = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0)
                             ? 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta))
                             : -1.0 / (-zeta + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        for (int i = 0; i < r; ++i) {
          const double wp = w(i, p), wq = w(i, q);
          w(i, p) = cs * wp - sn * wq;
          w(i, q) = sn * wp + cs * wq;
        }
        for (int i = 0; i < c; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = cs * vp - sn * vq;
          v(i, q) = sn * vp + cs * vq;
        }
      }
    }
    if (!changed) break;
  }

  std::vector<double> sig(static_cast<size_t>(c), 0.0);
  for (int j = 0; j < c; ++j) {
    double s = 0.0;
    for (int i = 0; i < r; ++i) s += w(i, j) * w(i, j);
    sig[static_cast<size_t>(j)] = std::sqrt(s);
  }
  std::vector<int> order(static_cast<size_t>(c));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return sig[static_cast<size_t>(i)] > sig[static_cast<size_t>(j)];
  });

  Svd out;
  out.u = RealMatrix(r, c);
  out.v = RealMatrix(c, c);
  out.sigma.assign(static_cast<size_t>(c), 0.0);
  for (int j = 0; j < c; ++j) {
    const int src = order[static_cast<size_t>(j)];
    const double s = sig[static_cast<size_t>(src)];
    out.sigma[static_cast<size_t>(j)] = s;
    if (s > 0.0)
      for (int i = 0; i < r; ++i) out.u(i, j) = w(i, src) / s;
    for (int i = 0; i < c; ++i) out.v(i, j) = v(i, src);
  }
  return out;
}

double rank_tolerance(int rows, int cols, double sigma_max) {
  return 1e-10 * std::max(rows, cols) * sigma_max;
}

namespace {

RealMatrix pinv_from(const Svd& s, int rows, int cols) {
  const double tol = rank_tolerance(rows, cols, s.sigma.empty() ? 0.0 : s.sigma[0]);
  RealMatrix p(cols, rows);
  for (int j = 0; j < cols; ++j) {
    const double sj = s.sigma[static_cast<size_t>(j)];
    if (sj <= tol) break;  // sigma is descending
    for (int i = 0; i < cols; ++i) {
      const double vij = s.v(i, j) / sj;
      if (vij == 0.0) continue;
      for (int k = 0; k < rows; ++k) p(i, k) += vij * s.u(k, j);
    }
  }
  return p;
}

int rank_from(const Svd& s, int rows, int cols) {
  const double tol = rank_tolerance(rows, cols, s.sigma.empty() ? 0.0 : s.sigma[0]);
  int r = 0;
  for (double x : s.sigma)
    if (x > tol) ++r;
  return r;
}

std::vector<RealVector> null_basis_from(const RealMatrix& a, const RealMatrix& apinv,
                                        int nullity) {
  const int n = a.cols();
  std::vector<RealVector> basis;
  if (nullity == 0) return basis;
  RealMatrix proj = RealMatrix::identity(n) - apinv * a;

  auto mgs_collect = [&](const std::vector<int>& cols_order, bool pivoted) {
    std::vector<RealVector> got;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int step = 0; step < n && static_cast<int>(got.size()) < nullity; ++step) {
      int pick = -1;
      if (!pivoted) {
        pick = cols_order[static_cast<size_t>(step)];
      } else {
        double best = -1.0;
        for (int j = 0; j < n; ++j) {
          if (used[static_cast<size_t>(j)]) continue;
          RealVector w = proj.col(j);
          for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : got) w = w - dot(u, w) * u;
          const double nw = norm(w);
          if (nw > best) {
            best = nw;
            pick = j;
          }
        }
        used[static_cast<size_t>(pick)] = true;
      }
      RealVector w = proj.col(pick);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : got) w = w - dot(u, w) * u;
      const double nw = norm(w);
      if (nw > 1e-6) got.push_back((1.0 / nw) * w);
    }
    return got;
  };

  std::vector<int> ascending(static_cast<size_t>(n));
  std::iota(ascending.begin(), ascending.end(), 0);
  basis = mgs_collect(ascending, false);
  if (static_cast<int>(basis.size()) != nullity) basis = mgs_collect(ascending, true);
  if (static_cast<int>(basis.size()) != nullity)
    throw std::runtime_error("null-space basis extraction failed");
  return basis;
}

}  // namespace

RealMatrix pseudo_inverse(const RealMatrix& a) {
  return pinv_from(svd(a), a.rows(), a.cols());
}

int rank(const RealMatrix& a) { return rank_from(svd(a), a.rows(), a.cols()); }

std::vector<RealVector> null_space_basis(const RealMatrix& a) {
  const Svd s = svd(a);
  const int nullity = a.cols() - rank_from(s, a.rows(), a.cols());
  return null_basis_from(a, pinv_from(s, a.rows(), a.cols()), nullity);
}

LinearSolution solve_consistent(const RealMatrix& a, const RealVector& b) {
  require(a.rows() == b.dim(), "solve_consistent dimension mismatch");
  const Svd s = svd(a);
  const RealMatrix apinv = pinv_from(s, a.rows(), a.cols());

  LinearSolution out;
  out.particular = apinv * b;
  out.residual = norm(a * out.particular - b);
  out.solvable =
      out.residual <= 1e-9 * std::max(1.0, inf_norm(a)) * std::max(1.0, norm(b));
  const int nullity = a.cols() - rank_from(s, a.rows(), a.cols());
  out.null_basis = null_basis_from(a, apinv, nullity);
  if (!out.solvable) out.particular = RealVector(a.cols());
  return out;
}

}  // namespace octo
