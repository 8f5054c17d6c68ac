#include <doctest.h>

#include "exalg/matrix.hpp"

using namespace exalg;

namespace {

Matrix random_matrix(const FieldRef& f, int r, int c, SplitMix64& rng) {
  Matrix m(f.get(), r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng.below(3) != 0) m.at(i, j) = f->random_small(rng);
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  auto F5 = make_field(FieldDesc::prime(5));
  Matrix id3 = Matrix::identity(*F5, 3);
  auto rr = linalg::rref(id3);
  CHECK(rr.R == id3);
  CHECK(rr.pivots == std::vector<int>{0, 1, 2});
  Matrix z(F5.get(), 2, 2);
  auto rz = linalg::rref(z);
  CHECK(rz.pivots.empty());
  CHECK(rz.R == z);
  auto F2 = make_field(FieldDesc::prime(2));
  Matrix m(F2.get(), 2, 2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = F2->one();
  auto rm = linalg::rref(m);
  CHECK(rm.pivots.size() == 1);
  CHECK(F2->is_one(rm.R.at(0, 0)));
  CHECK(F2->is_one(rm.R.at(0, 1)));
  CHECK(F2->is_zero(rm.R.at(1, 0)));
}

TEST_CASE("rref is idempotent and T M = R") {
  for (auto desc : {FieldDesc::prime(5), FieldDesc::rationals()}) {
    auto f = make_field(desc);
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix m = random_matrix(f, 4 + static_cast<int>(rng.below(3)), 5, rng);
      auto rr = linalg::rref(m);
      CHECK(linalg::mul(rr.T, m) == rr.R);
      auto rr2 = linalg::rref(rr.R);
      CHECK(rr2.R == rr.R);
      CHECK(linalg::inverse(rr.T).has_value());
    }
  }
}

TEST_CASE("solve_linear with certificates") {
  auto Q = make_field(FieldDesc::rationals());
  Matrix id = Matrix::identity(*Q, 3);
  std::vector<Scalar> b{Q->parse("1"), Q->parse("-2/3"), Q->parse("5")};
  auto out = linalg::solve_linear(id, b);
  REQUIRE(out.solution.has_value());
  CHECK(*out.solution == b);
  Matrix z(Q.get(), 2, 2);
  std::vector<Scalar> b2{Q->one(), Q->zero()};
  auto inf = linalg::solve_linear(z, b2);
  CHECK_FALSE(inf.solution.has_value());
  REQUIRE(inf.infeasible.has_value());
  // certificate: y A = 0 and y b != 0
  const auto& y = inf.infeasible->certificate;
  Scalar yb = Q->zero();
  for (int i = 0; i < 2; ++i) yb = Q->add(yb, Q->mul(y[static_cast<size_t>(i)], b2[static_cast<size_t>(i)]));
  CHECK_FALSE(Q->is_zero(yb));
}

TEST_CASE("solve soundness on seeded systems") {
  auto F5 = make_field(FieldDesc::prime(5));
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(F5, 4, 4, rng);
    std::vector<Scalar> b;
    for (int i = 0; i < 4; ++i) b.push_back(F5->random_small(rng));
    auto out = linalg::solve_linear(a, b);
    if (out.solution) {
      // A x = b exactly
      for (int i = 0; i < 4; ++i) {
        Scalar acc = F5->zero();
        for (int j = 0; j < 4; ++j)
          acc = F5->add(acc, F5->mul(a.at(i, j), (*out.solution)[static_cast<size_t>(j)]));
        CHECK(F5->eq(acc, b[static_cast<size_t>(i)]));
      }
    } else {
      const auto& y = out.infeasible->certificate;
      for (int j = 0; j < 4; ++j) {
        Scalar acc = F5->zero();
        for (int i = 0; i < 4; ++i)
          acc = F5->add(acc, F5->mul(y[static_cast<size_t>(i)], a.at(i, j)));
        CHECK(F5->is_zero(acc));
      }
      Scalar yb = F5->zero();
      for (int i = 0; i < 4; ++i) yb = F5->add(yb, F5->mul(y[static_cast<size_t>(i)], b[static_cast<size_t>(i)]));
      CHECK_FALSE(F5->is_zero(yb));
    }
  }
}

TEST_CASE("rank-nullity on seeded matrices") {
  for (auto desc : {FieldDesc::prime(5), FieldDesc::rationals()}) {
    auto f = make_field(desc);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      int r = 2 + static_cast<int>(rng.below(4));
      int c = 2 + static_cast<int>(rng.below(4));
      Matrix m = random_matrix(f, r, c, rng);
      CHECK(linalg::rank(m) + linalg::right_kernel(m).rows() == c);
    }
  }
}

TEST_CASE("subspace operations") {
  auto F5 = make_field(FieldDesc::prime(5));
  // U cap U = U
  SplitMix64 rng(17);
  Matrix m = random_matrix(F5, 2, 4, rng);
  auto u = linalg::subspace_from_rows(m);
  CHECK(linalg::intersect(u, u) == u);
  // span{e1} + span{e2} in dim 2 is everything
  Matrix e1(F5.get(), 1, 2), e2(F5.get(), 1, 2);
  e1.at(0, 0) = F5->one();
  e2.at(0, 1) = F5->one();
  auto s = linalg::sum(linalg::subspace_from_rows(e1), linalg::subspace_from_rows(e2));
  CHECK(s.dim() == 2);
  // complement is a direct complement
  auto w = linalg::complement(u);
  CHECK(u.dim() + w.dim() == 4);
  CHECK(linalg::intersect(u, w).dim() == 0);
}

TEST_CASE("dimension formula on seeded pairs") {
  for (auto desc : {FieldDesc::prime(3), FieldDesc::rationals()}) {
    auto f = make_field(desc);
    SplitMix64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      int amb = 4 + static_cast<int>(rng.below(3));
      Matrix mu = random_matrix(f, 1 + static_cast<int>(rng.below(3)), amb, rng);
      Matrix mv = random_matrix(f, 1 + static_cast<int>(rng.below(3)), amb, rng);
      auto u = linalg::subspace_from_rows(mu);
      auto v = linalg::subspace_from_rows(mv);
      auto s = linalg::sum(u, v);
      auto i = linalg::intersect(u, v);
      CHECK(u.dim() + v.dim() == s.dim() + i.dim());
      CHECK(linalg::contains(s, u));
      CHECK(linalg::contains(s, v));
      CHECK(linalg::contains(u, i));
      CHECK(linalg::contains(v, i));
    }
  }
}
