#include "octo/olinsolve.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace octo {

namespace {

constexpr double kSimilarTol = 1e-9;

double scale_of(const Octonion& a, const Octonion& b) {
  return std::max(1.0, std::max(norm(a), norm(b)));
}

ScalarSolution from_linear(const RealMatrix& m, const Octonion& rhs,
                           const std::function<Octonion(const Octonion&)>& lhs) {
  const LinearSolution ls = solve_consistent(m, vec(rhs));
  ScalarSolution out;
  out.solvable = ls.solvable;
  for (const auto& h : ls.null_basis) out.null_basis.push_back(unvec(h));
  if (ls.solvable) {
    out.particular = unvec(ls.particular);
    out.residual = norm(lhs(out.particular) - rhs);
  } else {
    out.residual = ls.residual;
  }
  return out;
}

void require_not_real(const Octonion& a) {
  if (norm(a.im()) <= 1e-12 * std::max(1.0, norm(a)))
    throw std::domain_error("degenerate input: coefficient is real");
}

}  // namespace

SimilarityCertificate similarity_certificate(const Octonion& a, const Octonion& b) {
  SimilarityCertificate cert;
  cert.re_a = a.re();
  cert.re_b = b.re();
  cert.im_norm_a = norm(a.im());
  cert.im_norm_b = norm(b.im());
  const double tol = kSimilarTol * scale_of(a, b);
  cert.similar = std::fabs(cert.re_a - cert.re_b) <= tol &&
                 std::fabs(cert.im_norm_a - cert.im_norm_b) <= tol;
  return cert;
}

bool check_rep_similarity(const Octonion& a, const Octonion& b) {
  return similarity_certificate(a, b).similar;
}

ScalarSolution solve_sim(const Octonion& a, const Octonion& b) {
  ScalarSolution out;
  out.solvable = true;
  out.residual = 0.0;
  if (!similarity_certificate(a, b).similar) return out;  // only x = 0
  const LinearSolution ls = solve_consistent(delta(a, b), RealVector(8));
  for (const auto& h : ls.null_basis) out.null_basis.push_back(unvec(h));
  return out;
}

ScalarSolution solve_commutator(const Octonion& a, const Octonion& b) {
  require_not_real(a);
  ScalarSolution out = from_linear(
      delta(a, a), b, [&](const Octonion& x) { return a * x - x * a; });
  const double tol = 1e-9 * scale_of(a, b) * scale_of(a, b);
  const bool closed_solvable = norm(a * b - b * conj(a)) <= tol;
  if (closed_solvable != out.solvable)
    out.diagnostic = "closed-form condition ab == b*conj(a) disagrees with the rank test";
  return out;
}

ScalarSolution solve_conj(const Octonion& a, const Octonion& b) {
  require_not_real(a);
  ScalarSolution out = from_linear(
      delta(a, conj(a)), b, [&](const Octonion& x) { return a * x - x * conj(a); });
  // Closed condition: Im b parallel to Im a.
  const Octonion ia = a.im(), ib = b.im();
  const double lambda1 = dot(vec(ib), vec(ia)) / norm_sq(ia);
  const bool closed_solvable =
      norm(ib - lambda1 * ia) <= 1e-9 * scale_of(a, b);
  if (closed_solvable != out.solvable)
    out.diagnostic = "closed-form condition Im b || Im a disagrees with the rank test";
  return out;
}

ScalarSolution solve_sylvester(const Octonion& a, const Octonion& b, const Octonion& c) {
  return from_linear(delta(a, b), c,
                     [&](const Octonion& x) { return a * x - x * b; });
}

ScalarSolution solve_assoc(const Octonion& a, const Octonion& b, const Octonion& c) {
  return from_linear(mu(a, b), c,
                     [&](const Octonion& x) { return a * (x * b) - (a * x) * b; });
}

}  // namespace octo
