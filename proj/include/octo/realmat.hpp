#pragma once

#include <initializer_list>
#include <vector>

namespace octo {

class RealVector {
 public:
  RealVector() = default;
  explicit RealVector(int dim) : v_(static_cast<size_t>(dim), 0.0) {}
  RealVector(std::initializer_list<double> xs) : v_(xs) {}

  int dim() const { return static_cast<int>(v_.size()); }
  double& operator[](int i) { return v_[static_cast<size_t>(i)]; }
  double operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  std::vector<double>& data() { return v_; }
  const std::vector<double>& data() const { return v_; }

 private:
  std::vector<double> v_;
};

double dot(const RealVector& a, const RealVector& b);
double norm(const RealVector& a);
RealVector operator+(const RealVector& a, const RealVector& b);
RealVector operator-(const RealVector& a, const RealVector& b);
RealVector operator*(double s, const RealVector& a);

// Dense row-major matrix of doubles. Arithmetic rejects non-finite results.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {}
  static RealMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  RealVector col(int j) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealVector operator*(const RealMatrix& a, const RealVector& x);
RealMatrix transpose(const RealMatrix& a);
double inf_norm(const RealMatrix& a);
double frob_norm(const RealMatrix& a);
double max_abs(const RealMatrix& a);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
double trace(const RealMatrix& a);

// Determinant by partially pivoted elimination. Square input only.
double determinant(const RealMatrix& a);

struct Polynomial {
  std::vector<double> coeffs;  // ascending degree; coeffs[0] is the constant
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double x) const;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_pow(const Polynomial& p, int k);

// Monic characteristic polynomial via the Faddeev-LeVerrier recursion.
// Orders above 24 are balanced first (diagonal similarity scaling) to curb
// coefficient growth; orders above 64 are rejected.
Polynomial char_poly(const RealMatrix& a);

struct SymEigen {
  RealVector values;   // ascending
  RealMatrix vectors;  // orthonormal columns, same order as values
};

// Cyclic Jacobi rotations, iterated until the off-diagonal Frobenius norm is
// at most 1e-12 times the Frobenius norm of the input. Input must be
// symmetric within 1e-12 * inf-norm.
SymEigen sym_eigen(const RealMatrix& a);

struct Svd {
  RealMatrix u;               // rows x cols, columns orthonormal where sigma > 0
  std::vector<double> sigma;  // descending, size == cols
  RealMatrix v;               // cols x cols, orthogonal
};

// Singular value decomposition through the Jacobi eigendecomposition of
// a^T a, executed one-sidedly on the columns of a so small singular values
// keep full accuracy relative to sigma_max.
Svd svd(const RealMatrix& a);

// Rank cutoff: 1e-10 * max(rows, cols) * largest singular value.
double rank_tolerance(int rows, int cols, double sigma_max);

RealMatrix pseudo_inverse(const RealMatrix& a);
int rank(const RealMatrix& a);

// Orthonormal basis of the null space, extracted from the projector
// I - pinv(a) * a by Gram-Schmidt over its columns in ascending index order.
std::vector<RealVector> null_space_basis(const RealMatrix& a);

struct LinearSolution {
  bool solvable = false;
  RealVector particular;                // pinv(a) * b when solvable
  std::vector<RealVector> null_basis;   // orthonormal
  double residual = 0.0;                // ||a * particular - b||
};

// Consistency decided by the pseudo-inverse: solvable iff
// ||a * pinv(a) * b - b|| <= 1e-9 * max(1, ||a||_inf) * max(1, ||b||).
LinearSolution solve_consistent(const RealMatrix& a, const RealVector& b);

}  // namespace octo
