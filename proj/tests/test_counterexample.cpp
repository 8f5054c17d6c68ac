#include <doctest.h>

#include "exalg/counterexample.hpp"

using namespace exalg;

TEST_CASE("banded window arithmetic is exact") {
  auto sys = cx::counterexample_build(2, 2);
  const Field& L = *sys.ext;
  // t^p = alpha I on the window (re-check the construction invariant)
  auto tp = cx::power(sys.t_op, 2);
  Scalar alpha = L.parse("t");
  auto alphaI = cx::banded_identity(L, 2);
  alphaI.band[0] = linalg::scale(alphaI.band[0], alpha);
  CHECK(cx::eq(tp, alphaI));
  // off-band blocks vanish
  CHECK(tp.block_at(0, 1).is_zero());
  CHECK(tp.block_at(1, 3).is_zero());
  // y is idempotent with the I_p corner
  CHECK(cx::eq(cx::mul(sys.y_op, sys.y_op), sys.y_op));
  CHECK(sys.y_op.block_at(0, 0) == Matrix::identity(L, 2));
  // nu^p = 0 and nu^(p-1) != 0 for the Jordan choice
  CHECK_FALSE(sys.nu.is_zero());
  CHECK(linalg::mul(sys.nu, sys.nu).is_zero());
}

TEST_CASE("N and t commute with the band structure") {
  auto sys = cx::counterexample_build(3, 2);
  // N^p = 0
  auto np = cx::power(sys.n_op, 3);
  const Field& L = *sys.ext;
  auto zero = cx::banded_zero(L, 3);
  CHECK(cx::eq(np, zero));
  // tau I commutes with N: t N = N t
  CHECK(cx::eq(cx::mul(sys.t_op, sys.n_op), cx::mul(sys.n_op, sys.t_op)));
}

TEST_CASE("infeasibility verdicts") {
  for (uint64_t p : {2ull, 3ull}) {
    for (int n : {2, 4}) {
      auto v = cx::counterexample_verify(p, n, false);
      CHECK_FALSE(v.feasible);
      CHECK(v.certificate.has_value());
      auto s = cx::counterexample_verify(p, n, true);
      CHECK(s.feasible);
    }
  }
}

TEST_CASE("the nu = 0 sanity system is solved by e = y") {
  auto sys = cx::counterexample_build(2, 2, true);
  // with nu = 0 every equation is trivial: the zero assignment works,
  // which is exactly e = y
  const Field& L = *sys.ext;
  for (size_t i = 0; i < sys.rhs.size(); ++i) CHECK(L.is_zero(sys.rhs[i]));
}

TEST_CASE("brute force agrees at p = 2, n = 2") {
  // coefficients lie in F_2, so solvability over L is equivalent to
  // solvability over F_2; enumerate all 2^16 assignments
  auto sys = cx::counterexample_build(2, 2);
  const Field& L = *sys.ext;
  int vars = sys.unknowns;
  REQUIRE(vars == 16);
  bool any = false;
  for (uint32_t mask = 0; !any && mask < (1u << 16); ++mask) {
    bool ok = true;
    for (int r = 0; ok && r < sys.system.rows(); ++r) {
      Scalar acc = L.zero();
      for (int c = 0; c < vars; ++c) {
        if ((mask >> c) & 1) acc = L.add(acc, sys.system.at(r, c));
      }
      ok = L.eq(acc, sys.rhs[static_cast<size_t>(r)]);
    }
    if (ok) any = true;
  }
  CHECK_FALSE(any);
}

TEST_CASE("alternating certificate reproduces nu") {
  for (uint64_t p : {2ull, 3ull}) {
    auto sys = cx::counterexample_build(p, 2);
    Matrix rhs = cx::alternating_certificate(sys);
    const Field& L = *sys.ext;
    // the combined right side is +- nu
    bool plus = rhs == sys.nu;
    bool minus = rhs == linalg::scale(sys.nu, L.from_int(-1));
    CHECK((plus || minus));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(cx::counterexample_build(7, 2), doctest::Contains("UnsupportedParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(cx::counterexample_build(2, 3), doctest::Contains("UnsupportedParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(cx::counterexample_build(2, 10), doctest::Contains("UnsupportedParameters"),
                       Error);
}
