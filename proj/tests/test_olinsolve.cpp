#include "octo/olinsolve.hpp"

#include <stdexcept>

#include "doctest.h"
#include "support.hpp"

using namespace octo;
using namespace testsupport;

namespace {

double span_gap(const Octonion& x, const ScalarSolution& sol) {
  RealVector d = vec(x - sol.particular);
  for (const auto& h : sol.null_basis) {
    const RealVector hv = vec(h);
    d = d - dot(hv, d) * hv;
  }
  return norm(d);
}

}  // namespace

TEST_CASE("similarity certificate") {
  CHECK(check_rep_similarity(unit(1), unit(2)));
  const Octonion a{{0.5, 1, -2, 0.25, 3, 0, -1, 0.75}};
  CHECK(check_rep_similarity(a, a));
  CHECK_FALSE(check_rep_similarity(unit(1), 2.0 * unit(2)));

  // similar scalars share the characteristic polynomial of the left rep
  CHECK(poly_close(char_poly(left_rep(unit(1))), char_poly(left_rep(unit(2))), 1e-12));
}

TEST_CASE("two-sided homogeneous equation") {
  {  // e1 x = x e2: two-dimensional solution family containing 1 - e3
    const ScalarSolution sol = solve_sim(unit(1), unit(2));
    CHECK(sol.solvable);
    REQUIRE(sol.null_basis.size() == 2);
    const Octonion x = Octonion::scalar(1.0) - unit(3);
    CHECK(oclose(unit(1) * x, x * unit(2), 0.0));
    ScalarSolution probe = sol;
    CHECK(span_gap(x, probe) <= 1e-12 * norm(x));
    for (const auto& h : sol.null_basis)
      CHECK(norm(unit(1) * h - h * unit(2)) <= 1e-12);
  }
  {  // b = conj(a) = -e1: six-dimensional family spanned by e2..e7
    const ScalarSolution sol = solve_sim(unit(1), -unit(1));
    REQUIRE(sol.null_basis.size() == 6);
    for (const auto& h : sol.null_basis) {
      CHECK(std::fabs(h.c[0]) <= 1e-12);  // no real part
      CHECK(std::fabs(h.c[1]) <= 1e-12);  // no e1 component
      CHECK(norm(unit(1) * h - h * (-unit(1))) <= 1e-12);
    }
  }
  {  // real parts differ: only the zero solution
    Octonion a = unit(1);
    a.c[0] = 1.0;
    Octonion b = unit(1);
    b.c[0] = 2.0;
    const ScalarSolution sol = solve_sim(a, b);
    CHECK(sol.solvable);
    CHECK(sol.null_basis.empty());
    CHECK(norm(sol.particular) == 0.0);
  }
}

TEST_CASE("commutator equation") {
  {
    const ScalarSolution sol = solve_commutator(unit(1), unit(2));
    CHECK(sol.solvable);
    CHECK(oclose(sol.particular, -0.5 * unit(3), 1e-12));
    CHECK(sol.residual <= 1e-12);
    CHECK(sol.diagnostic.empty());
  }
  {
    const ScalarSolution sol = solve_commutator(unit(1), Octonion{});
    CHECK(sol.solvable);
    CHECK(norm(sol.particular) <= 1e-14);
    CHECK(sol.null_basis.size() == 2);
  }
  {
    const ScalarSolution sol = solve_commutator(unit(1), Octonion::scalar(1.0));
    CHECK_FALSE(sol.solvable);
    CHECK(sol.diagnostic.empty());
  }
  CHECK_THROWS_AS(solve_commutator(Octonion::scalar(2.0), unit(1)), std::domain_error);
}

TEST_CASE("conjugate-coefficient equation") {
  {  // e1 x - x (-e1) = 2 e1 has the solution x = 1
    const ScalarSolution sol = solve_conj(unit(1), 2.0 * unit(1));
    CHECK(sol.solvable);
    CHECK(oclose(sol.particular, Octonion::scalar(1.0), 1e-12));
    CHECK(oclose(unit(1) * sol.particular - sol.particular * conj(unit(1)),
                 2.0 * unit(1), 1e-12));
  }
  {
    const ScalarSolution sol = solve_conj(unit(1), unit(2));
    CHECK_FALSE(sol.solvable);
  }
  {  // right-hand side 1: particular -e1/2, six free imaginary directions
    const ScalarSolution sol = solve_conj(unit(1), Octonion::scalar(1.0));
    CHECK(sol.solvable);
    CHECK(oclose(sol.particular, -0.5 * unit(1), 1e-12));
    CHECK(sol.null_basis.size() == 6);
  }
  CHECK_THROWS_AS(solve_conj(Octonion::scalar(1.0), unit(1)), std::domain_error);
}

TEST_CASE("sylvester equation") {
  {
    const ScalarSolution sol = solve_sylvester(unit(1), 2.0 * unit(2), Octonion{});
    CHECK(sol.solvable);
    CHECK(norm(sol.particular) <= 1e-14);
    CHECK(sol.null_basis.empty());  // delta is invertible here
  }
  {
    const Octonion xstar = unit(4);
    const Octonion c = unit(1) * xstar - xstar * unit(2);
    const ScalarSolution sol = solve_sylvester(unit(1), unit(2), c);
    CHECK(sol.solvable);
    CHECK(sol.residual <= 1e-9);
    CHECK(span_gap(xstar, sol) <= 1e-8);
  }
  {
    const ScalarSolution sol =
        solve_sylvester(unit(1), unit(1), Octonion::scalar(1.0));
    CHECK_FALSE(sol.solvable);
  }
}

TEST_CASE("associator equation") {
  {  // coefficient 1 annihilates the map: every x solves the homogeneous case
    const Octonion b{{0.3, 1, 0, -2, 0.5, 1, -1, 0.2}};
    const ScalarSolution sol = solve_assoc(Octonion::scalar(1.0), b, Octonion{});
    CHECK(sol.solvable);
    CHECK(sol.null_basis.size() == 8);
  }
  {
    const ScalarSolution sol = solve_assoc(unit(1), unit(2), 2.0 * unit(7));
    CHECK(sol.solvable);
    CHECK(sol.residual <= 1e-12);
    CHECK(span_gap(unit(4), sol) <= 1e-9);  // x = e4 is a solution
  }
  {  // associators are purely imaginary, so a real right-hand side fails
    const ScalarSolution sol = solve_assoc(unit(1), unit(2), Octonion::scalar(1.0));
    CHECK_FALSE(sol.solvable);
  }
}

TEST_CASE("round-trip residuals over seeded instances") {
  Rng rng(51);
  for (int t = 0; t < 300; ++t) {
    const Octonion a = random_octonion(rng);
    const Octonion b = random_octonion(rng);
    const Octonion xstar = random_octonion(rng);
    {
      const Octonion c = a * xstar - xstar * b;
      const ScalarSolution sol = solve_sylvester(a, b, c);
      REQUIRE(sol.solvable);
      CHECK(sol.residual <= 1e-9 * std::max(1.0, norm(c) + norm(a) * norm(xstar)));
      CHECK(span_gap(xstar, sol) <= 1e-8 * std::max(1.0, norm(xstar)));
    }
    {
      const Octonion c = a * (xstar * b) - (a * xstar) * b;
      const ScalarSolution sol = solve_assoc(a, b, c);
      REQUIRE(sol.solvable);
      CHECK(sol.residual <= 1e-9 * std::max(1.0, norm(a) * norm(xstar) * norm(b)));
      CHECK(span_gap(xstar, sol) <= 1e-8 * std::max(1.0, norm(xstar)));
    }
  }
}

TEST_CASE("mirrored associator orientation solves with a negated right side") {
  // x(ab) - (xa)b = c is the negative of the solver's canonical map.
  Rng rng(52);
  const Octonion a = random_octonion(rng);
  const Octonion b = random_octonion(rng);
  const Octonion xstar = random_octonion(rng);
  const Octonion c = xstar * (a * b) - (xstar * a) * b;
  const ScalarSolution sol = solve_assoc(a, b, -c);
  REQUIRE(sol.solvable);
  const Octonion got = sol.particular;
  CHECK(norm(got * (a * b) - (got * a) * b - c) <=
        1e-9 * std::max(1.0, norm(a) * norm(b) * norm(xstar)));
}
