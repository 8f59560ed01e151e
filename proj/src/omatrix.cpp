#include "octo/omatrix.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "octo/format.hpp"

namespace octo {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

OctonionMatrix OctonionMatrix::identity(int n) {
  OctonionMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Octonion::scalar(1.0);
  return m;
}

OctonionMatrix operator+(const OctonionMatrix& a, const OctonionMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "octonion matrix shape mismatch");
  OctonionMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

OctonionMatrix operator-(const OctonionMatrix& a, const OctonionMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "octonion matrix shape mismatch");
  OctonionMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

OctonionMatrix operator*(double s, const OctonionMatrix& a) {
  OctonionMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.at(i, j);
  return r;
}

OctonionMatrix conj_transpose(const OctonionMatrix& a) {
  OctonionMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = conj(a.at(i, j));
  return r;
}

bool is_hermitian(const OctonionMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_entry_dist(conj_transpose(a), a) <= tol;
}

double max_entry_norm(const OctonionMatrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) best = std::max(best, norm(a.at(i, j)));
  return best;
}

double max_entry_dist(const OctonionMatrix& a, const OctonionMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "octonion matrix shape mismatch");
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      best = std::max(best, norm(a.at(i, j) - b.at(i, j)));
  return best;
}

OctonionMatrix mul(const OctonionMatrix& a, const OctonionMatrix& x) {
  require(a.cols() == x.rows(), "octonion matrix product dimension mismatch");
  OctonionMatrix r(a.rows(), x.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      Octonion s;
      for (int k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * x.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

OctonionMatrix nested_left(const OctonionMatrix& a, const OctonionMatrix& x, int k) {
  require(k >= 1, "nested product needs k >= 1");
  require(a.rows() == a.cols(), "nested product needs a square coefficient");
  OctonionMatrix r = x;
  for (int i = 0; i < k; ++i) r = mul(a, r);
  return r;
}

OctonionMatrix nested_right(const OctonionMatrix& y, const OctonionMatrix& a, int k) {
  require(k >= 1, "nested product needs k >= 1");
  require(a.rows() == a.cols(), "nested product needs a square coefficient");
  OctonionMatrix r = y;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

RealMatrix left_adjoint(const OctonionMatrix& a) {
  RealMatrix w(8 * a.rows(), 8 * a.cols());
  for (int s = 0; s < a.rows(); ++s)
    for (int t = 0; t < a.cols(); ++t) {
      const RealMatrix b = left_rep(a.at(s, t));
      for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) w(8 * s + u, 8 * t + v) = b(u, v);
    }
  return w;
}

RealMatrix right_adjoint(const OctonionMatrix& a) {
  RealMatrix w(8 * a.cols(), 8 * a.rows());
  for (int s = 0; s < a.cols(); ++s)
    for (int t = 0; t < a.rows(); ++t) {
      const RealMatrix b = right_rep(a.at(t, s));
      for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) w(8 * s + u, 8 * t + v) = b(u, v);
    }
  return w;
}

RealVector vec(const OctonionMatrix& a) {
  RealVector v(8 * a.rows() * a.cols());
  int pos = 0;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < 8; ++k) v[pos++] = a.at(i, j).c[static_cast<size_t>(k)];
  return v;
}

OctonionMatrix unvec(const RealVector& v, int rows, int cols) {
  require(v.dim() == 8 * rows * cols, "unvec dimension mismatch");
  OctonionMatrix a(rows, cols);
  int pos = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < 8; ++k) a.at(i, j).c[static_cast<size_t>(k)] = v[pos++];
  return a;
}

namespace {

struct BlockGrid {
  int rows8, cols8;  // block counts
};

BlockGrid grid_of(const RealMatrix& m, const char* what) {
  if (m.rows() % 8 != 0 || m.cols() % 8 != 0)
    throw std::invalid_argument(std::string(what) + ": dimensions must be divisible by 8");
  return {m.rows() / 8, m.cols() / 8};
}

// out[br*8.., bc*8..] += A-block(bi,bj) * B-block(ci,cj)
void place_block_product(RealMatrix& out, int br, int bc, const RealMatrix& a, int ai,
                         int aj, const RealMatrix& b, int bi, int bj) {
  for (int u = 0; u < 8; ++u)
    for (int w = 0; w < 8; ++w) {
      const double x = a(8 * ai + u, 8 * aj + w);
      if (x == 0.0) continue;
      for (int v = 0; v < 8; ++v)
        out(8 * br + u, 8 * bc + v) += x * b(8 * bi + w, 8 * bj + v);
    }
}

}  // namespace

RealMatrix block_kron_left(const RealMatrix& a, const RealMatrix& b) {
  const BlockGrid ga = grid_of(a, "block_kron_left");
  const BlockGrid gb = grid_of(b, "block_kron_left");
  RealMatrix out(8 * ga.rows8 * gb.rows8, 8 * ga.cols8 * gb.cols8);
  for (int s = 0; s < ga.rows8; ++s)
    for (int t = 0; t < ga.cols8; ++t)
      for (int u = 0; u < gb.rows8; ++u)
        for (int v = 0; v < gb.cols8; ++v)
          place_block_product(out, s * gb.rows8 + u, t * gb.cols8 + v, a, s, t, b, u, v);
  return out;
}

RealMatrix block_kron_right(const RealMatrix& a, const RealMatrix& b) {
  const BlockGrid ga = grid_of(a, "block_kron_right");
  const BlockGrid gb = grid_of(b, "block_kron_right");
  RealMatrix out(8 * ga.rows8 * gb.rows8, 8 * ga.cols8 * gb.cols8);
  for (int u = 0; u < gb.rows8; ++u)
    for (int v = 0; v < gb.cols8; ++v)
      for (int s = 0; s < ga.rows8; ++s)
        for (int t = 0; t < ga.cols8; ++t)
          place_block_product(out, u * ga.rows8 + s, v * ga.cols8 + t, a, s, t, b, u, v);
  return out;
}

namespace {

RealMatrix real_identity8(int blocks) { return RealMatrix::identity(8 * blocks); }

OctonionMatrix eval_equation(MatrixEquation eq, const std::vector<OctonionMatrix>& cs,
                             const OctonionMatrix& x) {
  switch (eq) {
    case MatrixEquation::AX_B:
      return mul(cs[0], x);
    case MatrixEquation::XA_B:
      return mul(x, cs[0]);
    case MatrixEquation::AXB_C_left:
      return mul(mul(cs[0], x), cs[1]);
    case MatrixEquation::AXB_C_right:
      return mul(cs[0], mul(x, cs[1]));
    case MatrixEquation::AX_XB_C:
      return mul(cs[0], x) - mul(x, cs[1]);
    case MatrixEquation::ABX_assoc:
      return mul(mul(cs[0], x), cs[0]) - mul(cs[0], mul(x, cs[0]));
  }
  throw std::logic_error("unknown equation form");
}

}  // namespace

MatrixSolution solve_matrix_equation(MatrixEquation eq,
                                     const std::vector<OctonionMatrix>& coeffs,
                                     const OctonionMatrix& rhs) {
  const size_t expected = (eq == MatrixEquation::AXB_C_left ||
                           eq == MatrixEquation::AXB_C_right ||
                           eq == MatrixEquation::AX_XB_C)
                              ? 2
                              : 1;
  require(coeffs.size() == expected, "wrong number of coefficient matrices");

  int xr = 0, xc = 0;
  RealMatrix m;
  switch (eq) {
    case MatrixEquation::AX_B: {
      const OctonionMatrix& a = coeffs[0];
      require(rhs.rows() == a.rows(), "A X = B: row mismatch");
      xr = a.cols();
      xc = rhs.cols();
      m = block_kron_left(real_identity8(xc), left_adjoint(a));
      break;
    }
    case MatrixEquation::XA_B: {
      const OctonionMatrix& a = coeffs[0];
      require(rhs.cols() == a.cols(), "X A = B: column mismatch");
      xr = rhs.rows();
      xc = a.rows();
      m = block_kron_left(right_adjoint(a), real_identity8(xr));
      break;
    }
    case MatrixEquation::AXB_C_left:
    case MatrixEquation::AXB_C_right: {
      const OctonionMatrix& a = coeffs[0];
      const OctonionMatrix& b = coeffs[1];
      require(rhs.rows() == a.rows() && rhs.cols() == b.cols(),
              "A X B = C: shape mismatch");
      xr = a.cols();
      xc = b.rows();
      m = (eq == MatrixEquation::AXB_C_left)
              ? block_kron_left(right_adjoint(b), left_adjoint(a))
              : block_kron_right(left_adjoint(a), right_adjoint(b));
      break;
    }
    case MatrixEquation::AX_XB_C: {
      const OctonionMatrix& a = coeffs[0];
      const OctonionMatrix& b = coeffs[1];
      require(a.rows() == a.cols() && b.rows() == b.cols(),
              "A X - X B = C: coefficients must be square");
      require(rhs.rows() == a.rows() && rhs.cols() == b.rows(),
              "A X - X B = C: shape mismatch");
      xr = a.rows();
      xc = b.rows();
      m = block_kron_left(real_identity8(xc), left_adjoint(a)) -
          block_kron_left(right_adjoint(b), real_identity8(xr));
      break;
    }
    case MatrixEquation::ABX_assoc: {
      const OctonionMatrix& a = coeffs[0];
      require(a.rows() == a.cols(), "(A X) A - A (X A) = B: coefficient must be square");
      require(rhs.rows() == a.rows() && rhs.cols() == a.rows(),
              "(A X) A - A (X A) = B: shape mismatch");
      xr = a.rows();
      xc = a.rows();
      m = block_kron_left(right_adjoint(a), left_adjoint(a)) -
          block_kron_right(left_adjoint(a), right_adjoint(a));
      break;
    }
  }

  const LinearSolution ls = solve_consistent(m, vec(rhs));
  MatrixSolution out;
  out.solvable = ls.solvable;
  for (const auto& h : ls.null_basis) out.null_basis.push_back(unvec(h, xr, xc));
  if (ls.solvable) {
    out.particular = unvec(ls.particular, xr, xc);
    out.residual = max_entry_dist(eval_equation(eq, coeffs, out.particular), rhs);
  } else {
    out.particular = OctonionMatrix(xr, xc);
    out.residual = ls.residual;
  }
  return out;
}

bool is_completely_invertible(const OctonionMatrix& a) {
  require(a.rows() == a.cols(), "complete invertibility needs a square matrix");
  const RealMatrix w = left_adjoint(a);
  return rank(w) == w.rows();
}

InverseOperator make_inverse_operator(InverseOperator::Side side,
                                      const OctonionMatrix& a) {
  if (!is_completely_invertible(a))
    throw std::domain_error("matrix is not completely invertible");
  InverseOperator op;
  op.side = side;
  op.source = a;
  op.poly = char_poly(left_adjoint(a));
  if (op.poly.coeffs[0] == 0.0)
    throw std::domain_error("vanishing constant coefficient in adjoint char poly");
  return op;
}

OctonionMatrix apply_inverse_operator(const InverseOperator& op,
                                      const OctonionMatrix& b) {
  const bool left = op.side == InverseOperator::Side::LeftOp;
  if (left)
    require(op.source.cols() == b.rows(), "inverse operator shape mismatch");
  else
    require(b.cols() == op.source.rows(), "inverse operator shape mismatch");

  const auto& r = op.poly.coeffs;
  const int t = op.poly.degree();
  // Horner in nested form keeps the octonion product count at t - 1.
  OctonionMatrix s = b;
  for (int k = t - 1; k >= 1; --k) {
    s = left ? mul(op.source, s) : mul(s, op.source);
    if (r[static_cast<size_t>(k)] != 0.0)
      s = s + r[static_cast<size_t>(k)] * b;
  }
  return (-1.0 / r[0]) * s;
}

OctonionMatrix left_inverse(const OctonionMatrix& a) {
  // X A = I is inverted by the right operator.
  const InverseOperator op = make_inverse_operator(InverseOperator::Side::RightOp, a);
  return apply_inverse_operator(op, OctonionMatrix::identity(a.rows()));
}

OctonionMatrix right_inverse(const OctonionMatrix& a) {
  const InverseOperator op = make_inverse_operator(InverseOperator::Side::LeftOp, a);
  return apply_inverse_operator(op, OctonionMatrix::identity(a.rows()));
}

std::pair<double, double> cayley_hamilton_residuals(const OctonionMatrix& a) {
  require(a.rows() == a.cols(), "Cayley-Hamilton needs a square matrix");
  require(a.rows() >= 1 && a.rows() <= 3, "Cayley-Hamilton supported for m <= 3");
  const Polynomial p = char_poly(left_adjoint(a));
  const int t = p.degree();
  const int n = a.rows();

  OctonionMatrix left_acc = p.coeffs[0] * OctonionMatrix::identity(n);
  OctonionMatrix right_acc = left_acc;
  OctonionMatrix pl = a, pr = a;
  left_acc = left_acc + p.coeffs[1] * pl;
  right_acc = right_acc + p.coeffs[1] * pr;
  for (int k = 2; k <= t; ++k) {
    pl = mul(a, pl);
    pr = mul(pr, a);
    left_acc = left_acc + p.coeffs[static_cast<size_t>(k)] * pl;
    right_acc = right_acc + p.coeffs[static_cast<size_t>(k)] * pr;
  }
  return {max_entry_norm(left_acc), max_entry_norm(right_acc)};
}

OctonionMatrix random_octonion_matrix(Rng& rng, int rows, int cols) {
  OctonionMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_octonion(rng);
  return m;
}

OctonionMatrix read_octonion_matrix(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw format_error("matrix file needs fields rows, cols, entries");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw format_error("rows and cols must be integers");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (rows < 1 || cols < 1 || rows > 64 || cols > 64)
    throw format_error("rows and cols must be in 1..64");
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw format_error("entries must be an array with one row per matrix row");
  OctonionMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw format_error("each row must have cols entries");
    for (int k = 0; k < cols; ++k) {
      const auto& cell = row[static_cast<size_t>(k)];
      if (!cell.is_array() || cell.size() != 8)
        throw format_error("each entry must be an array of 8 numbers");
      for (int u = 0; u < 8; ++u) {
        const auto& x = cell[static_cast<size_t>(u)];
        if (!x.is_number()) throw format_error("entry coefficients must be numbers");
        const double v = x.get<double>();
        if (!std::isfinite(v)) throw format_error("entry coefficients must be finite");
        m.at(i, k).c[static_cast<size_t>(u)] = v;
      }
    }
  }
  return m;
}

OctonionMatrix read_octonion_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open matrix file: " + path);
  return read_octonion_matrix(in);
}

void write_octonion_matrix(std::ostream& out, const OctonionMatrix& a) {
  out << "{\"rows\": " << a.rows() << ", \"cols\": " << a.cols()
      << ", \"entries\": [";
  for (int i = 0; i < a.rows(); ++i) {
    out << (i ? ",\n" : "\n") << " [";
    for (int j = 0; j < a.cols(); ++j) {
      out << (j ? ", [" : "[");
      for (int k = 0; k < 8; ++k)
        out << (k ? "," : "") << fmt_real(a.at(i, j).c[static_cast<size_t>(k)]);
      out << "]";
    }
    out << "]";
  }
  out << "\n]}\n";
}

void write_octonion_matrix_file(const std::string& path, const OctonionMatrix& a) {
  std::ofstream out(path);
  if (!out) throw format_error("cannot open output file: " + path);
  write_octonion_matrix(out, a);
}

}  // namespace octo
