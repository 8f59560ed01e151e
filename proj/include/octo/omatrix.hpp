#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "octo/orep.hpp"

namespace octo {

// Dense matrix of octonions. Multiplication is not associative, so every
// product in this module is written with an explicit nesting; there is no
// operator* chaining.
class OctonionMatrix {
 public:
  OctonionMatrix() = default;
  OctonionMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static OctonionMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Octonion& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Octonion& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Octonion> e_;
};

OctonionMatrix operator+(const OctonionMatrix& a, const OctonionMatrix& b);
OctonionMatrix operator-(const OctonionMatrix& a, const OctonionMatrix& b);
OctonionMatrix operator*(double s, const OctonionMatrix& a);
OctonionMatrix conj_transpose(const OctonionMatrix& a);
bool is_hermitian(const OctonionMatrix& a, double tol);
double max_entry_norm(const OctonionMatrix& a);
double max_entry_dist(const OctonionMatrix& a, const OctonionMatrix& b);

// Entrywise product sums run left to right over the inner index.
OctonionMatrix mul(const OctonionMatrix& a, const OctonionMatrix& x);

// k-fold strictly nested products: nested_left(A, X, k) = A(A(...(AX)...)),
// nested_right(Y, A, k) = ((...(YA)...)A)A.
OctonionMatrix nested_left(const OctonionMatrix& a, const OctonionMatrix& x, int k);
OctonionMatrix nested_right(const OctonionMatrix& y, const OctonionMatrix& a, int k);

// Blockwise left representation: 8m x 8n, block (s,t) = left_rep(a_st).
RealMatrix left_adjoint(const OctonionMatrix& a);

// Blockwise right representation in transposed layout: 8n x 8m, block (s,t)
// = right_rep(a_ts). With this layout vec(XA) == block_kron_left(
// right_adjoint(A), I) vec(X).
RealMatrix right_adjoint(const OctonionMatrix& a);

// Column-stacked coefficient vector: entries are visited column by column,
// each contributing its 8 coefficients. All Kronecker identities in this
// module assume exactly this order.
RealVector vec(const OctonionMatrix& a);
OctonionMatrix unvec(const RealVector& v, int rows, int cols);

// Kronecker-style products over 8x8 blocks. Operand dimensions must be
// divisible by 8. In block indices:
//   block_kron_left(A, B)  [(s p + u), (t q + v)] = A_st B_uv
//   block_kron_right(A, B) [(u m + s), (v n + t)] = A_st B_uv
// where A is m x n and B is p x q blocks; the factor order A_st B_uv is
// preserved in both.
RealMatrix block_kron_left(const RealMatrix& a, const RealMatrix& b);
RealMatrix block_kron_right(const RealMatrix& a, const RealMatrix& b);

enum class MatrixEquation {
  AX_B,         // A X = B
  XA_B,         // X A = B
  AXB_C_left,   // (A X) B = C
  AXB_C_right,  // A (X B) = C
  AX_XB_C,      // A X - X B = C
  ABX_assoc,    // (A X) A - A (X A) = B
};

struct MatrixSolution {
  bool solvable = false;
  OctonionMatrix particular;
  std::vector<OctonionMatrix> null_basis;
  double residual = 0.0;  // max entry norm of lhs(particular) - rhs
};

// Reduces the equation to its real linear system, solves it consistently and
// maps the result back. coeffs carries A (and B for the two-coefficient
// forms). Unsolvable systems are flagged, never least-squares fitted.
MatrixSolution solve_matrix_equation(MatrixEquation eq,
                                     const std::vector<OctonionMatrix>& coeffs,
                                     const OctonionMatrix& rhs);

// True when the left adjoint is an invertible real matrix (full rank at the
// standard rank tolerance).
bool is_completely_invertible(const OctonionMatrix& a);

// Inverse operators of a completely invertible matrix: polynomial expressions
// in nested products built from the characteristic polynomial of the left
// adjoint. LeftOp solves A X = B, RightOp solves X A = B.
struct InverseOperator {
  enum class Side { LeftOp, RightOp };
  Side side = Side::LeftOp;
  OctonionMatrix source;
  Polynomial poly;  // char poly of left_adjoint(source); coeffs[0] != 0
};

InverseOperator make_inverse_operator(InverseOperator::Side side,
                                      const OctonionMatrix& a);
OctonionMatrix apply_inverse_operator(const InverseOperator& op,
                                      const OctonionMatrix& b);

// Unique one-sided inverses of a completely invertible matrix:
// mul(left_inverse(A), A) == I and mul(A, right_inverse(A)) == I.
OctonionMatrix left_inverse(const OctonionMatrix& a);
OctonionMatrix right_inverse(const OctonionMatrix& a);

// Max entry norms of the two nested-power identities p(A) = 0 taken with the
// characteristic polynomial of the left adjoint; first left-nested, then
// right-nested. Supported for m <= 3.
std::pair<double, double> cayley_hamilton_residuals(const OctonionMatrix& a);

OctonionMatrix random_octonion_matrix(Rng& rng, int rows, int cols);

// JSON file format:
// {"rows": m, "cols": n, "entries": [[[c0,...,c7], ...], ...]} with row-major
// nesting; writers emit 17 significant digits, readers accept any JSON number.
OctonionMatrix read_octonion_matrix(std::istream& in);
OctonionMatrix read_octonion_matrix_file(const std::string& path);
void write_octonion_matrix(std::ostream& out, const OctonionMatrix& a);
void write_octonion_matrix_file(const std::string& path, const OctonionMatrix& a);

}  // namespace octo
