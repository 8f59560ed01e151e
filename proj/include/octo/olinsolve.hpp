#pragma once

#include <string>
#include <vector>

#include "octo/orep.hpp"

namespace octo {

// Solution of one scalar linear octonion equation. The null basis spans the
// homogeneous solutions, orthonormal as 8-vectors, extracted deterministically
// from the real coefficient matrix of the equation.
struct ScalarSolution {
  bool solvable = false;
  Octonion particular;                 // zero when unsolvable
  std::vector<Octonion> null_basis;
  double residual = 0.0;               // ||lhs(particular) - rhs||, octonion norm
  std::string diagnostic;              // non-empty when a closed-form check disagrees
};

struct SimilarityCertificate {
  bool similar = false;
  double re_a = 0.0, re_b = 0.0;
  double im_norm_a = 0.0, im_norm_b = 0.0;
};

// similar iff Re a == Re b and |Im a| == |Im b| within 1e-9 * scale.
SimilarityCertificate similarity_certificate(const Octonion& a, const Octonion& b);
bool check_rep_similarity(const Octonion& a, const Octonion& b);

// a x == x b. Always solvable (x = 0); when the similarity condition holds the
// null basis carries the nonzero solutions, found through the real system.
ScalarSolution solve_sim(const Octonion& a, const Octonion& b);

// a x - x a == b. Requires a not real (throws std::domain_error otherwise).
ScalarSolution solve_commutator(const Octonion& a, const Octonion& b);

// a x - x conj(a) == b. Requires a not real.
ScalarSolution solve_conj(const Octonion& a, const Octonion& b);

// a x - x b == c.
ScalarSolution solve_sylvester(const Octonion& a, const Octonion& b, const Octonion& c);

// a(x b) - (a x) b == c, equal to (a b) x - a (b x) == c as maps of x.
// For the mirrored orientation x(a b) - (x a) b == c, negate c.
ScalarSolution solve_assoc(const Octonion& a, const Octonion& b, const Octonion& c);

}  // namespace octo
