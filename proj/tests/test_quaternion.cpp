#include "octo/quaternion.hpp"

#include <array>
#include <stdexcept>

#include "doctest.h"
#include "octo/rng.hpp"
#include "support.hpp"

using namespace octo;
using namespace testsupport;

namespace {
const Quaternion qone{1, 0, 0, 0};
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
}  // namespace

TEST_CASE("hamilton product") {
  CHECK(norm(qi * qj - qk) == 0.0);
  CHECK(norm(qj * qi - (-1.0 * qk)) == 0.0);
  const Quaternion b{0.3, -1, 2, 0.5};
  CHECK(norm(qone * b - b) == 0.0);

  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion c = random_quaternion(rng);
    CHECK(close(norm(a * c), norm(a) * norm(c),
                1e-12 * std::max(1.0, norm(a) * norm(c))));
  }
}

TEST_CASE("conjugate, norm, inverse") {
  CHECK(norm(conj(qi) + qi) == 0.0);
  const Quaternion one_plus_i{1, 1, 0, 0};
  const Quaternion want{0.5, -0.5, 0, 0};
  CHECK(norm(inverse(one_plus_i) - want) <= 1e-15);
  CHECK(norm(Quaternion{1, 1, 1, 1}) == 2.0);
  CHECK_THROWS_AS(inverse(Quaternion{}), std::domain_error);
}

TEST_CASE("left representation pattern") {
  CHECK(mclose(phi(qone), RealMatrix::identity(4), 0.0));

  RealMatrix want(4, 4);
  want(0, 1) = -1;
  want(1, 0) = 1;
  want(2, 3) = -1;
  want(3, 2) = 1;
  CHECK(mclose(phi(qi), want, 0.0));

  const Quaternion one_plus_i{1, 1, 0, 0};
  CHECK(close(determinant(phi(one_plus_i)), 4.0, 1e-12));
}

TEST_CASE("right representation pattern") {
  CHECK(mclose(tau(qone), RealMatrix::identity(4), 0.0));

  RealMatrix want(4, 4);
  want(0, 1) = -1;
  want(1, 0) = 1;
  want(2, 3) = 1;
  want(3, 2) = -1;
  CHECK(mclose(tau(qi), want, 0.0));

  RealMatrix k = RealMatrix::identity(4);
  k(1, 1) = k(2, 2) = k(3, 3) = -1;
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const Quaternion a = random_quaternion(rng);
    CHECK(mclose(tau(a), k * transpose(phi(a)) * k, 0.0));
    const Quaternion b = random_quaternion(rng);
    CHECK(mclose(tau(a * b), tau(b) * tau(a),
                 1e-13 * std::max(1.0, norm(a) * norm(b))));
  }
}

TEST_CASE("vector representation") {
  CHECK(norm(vec(qone) - RealVector{1, 0, 0, 0}) == 0.0);
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const Quaternion x = random_quaternion(rng);
    const double s = std::max(1.0, norm(a) * norm(x) * std::max(1.0, norm(b)));
    CHECK(norm(vec(a * x) - phi(a) * vec(x)) <= 1e-13 * s);
    CHECK(norm(vec(x * b) - tau(b) * vec(x)) <= 1e-13 * s);
    CHECK(norm(vec((a * x) * b) - phi(a) * (tau(b) * vec(x))) <= 1e-12 * s);
  }
}

TEST_CASE("diagonal quaternion matrix is unitarily similar to the left rep") {
  using QMat = std::array<std::array<Quaternion, 4>, 4>;
  const Quaternion h{0.5, 0, 0, 0}, hi{0, 0.5, 0, 0}, hj{0, 0, 0.5, 0},
      hk{0, 0, 0, 0.5};
  const QMat q = {{{h, hi, hj, hk},
                   {-1.0 * hi, h, hk, -1.0 * hj},
                   {-1.0 * hj, -1.0 * hk, h, hi},
                   {-1.0 * hk, hj, -1.0 * hi, h}}};
  QMat qstar{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) qstar[r][c] = conj(q[c][r]);
  const auto qmul_mat = [](const QMat& x, const QMat& y) {
    QMat r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Quaternion s;
        for (int k = 0; k < 4; ++k) s = s + x[i][k] * y[k][j];
        r[i][j] = s;
      }
    return r;
  };

  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = random_quaternion(rng);
    QMat diag{};
    for (int r = 0; r < 4; ++r) diag[r][r] = a;
    const QMat got = qmul_mat(qmul_mat(q, diag), qstar);
    const RealMatrix want = phi(a);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        CHECK(norm(got[r][c] - Quaternion{want(r, c), 0, 0, 0}) <=
              1e-13 * std::max(1.0, norm(a)));
  }
}

TEST_CASE("representation algebra is exact") {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    CHECK(mclose(phi(a + b), phi(a) + phi(b), 0.0));
    CHECK(mclose(phi(conj(a)), transpose(phi(a)), 0.0));
    CHECK(mclose(phi(a * b), phi(a) * phi(b), 1e-14 * std::max(1.0, norm(a) * norm(b))));
    CHECK(mclose(phi(a) * tau(b), tau(b) * phi(a),
                 1e-14 * std::max(1.0, norm(a) * norm(b))));
  }
}
