#include <doctest.h>

#include "exalg/generator.hpp"
#include "exalg/regtools.hpp"

using namespace exalg;

TEST_CASE("quasi inverse") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto m2 = algcore::matrix_algebra(F5, 2);
  // invertible element: y = x^{-1}
  auto x = m2.add(m2.basis_element(0), m2.scale(m2.basis_element(3), F5->from_int(2)));
  auto y = regtools::quasi_inverse(m2, x);
  auto xinv = m2.inverse(x);
  REQUIRE(xinv.has_value());
  CHECK(m2.eq(y, *xinv));
  // x = e12: y = e21 exactly (lexicographically least solution)
  auto y12 = regtools::quasi_inverse(m2, m2.basis_element(1));
  CHECK(m2.eq(y12, m2.basis_element(2)));
  // t in K[t]/(t^2) is not regular; brute force over F_2 agrees
  auto F2 = make_field(FieldDesc::prime(2));
  FDAlgebra::Table tab(4);
  tab[0].push_back({0, F2->one()});
  tab[1].push_back({1, F2->one()});
  tab[2].push_back({1, F2->one()});
  auto dual = FDAlgebra::make(F2, 2, std::move(tab));
  CHECK_THROWS_WITH_AS(regtools::quasi_inverse(dual, dual.basis_element(1)),
                       doctest::Contains("NotRegularElement"), Error);
  auto t = dual.basis_element(1);
  for (uint64_t zi = 0; zi < 4; ++zi) {
    auto z = dual.zero_element();
    z[0] = F2->element_at(zi % 2);
    z[1] = F2->element_at(zi / 2);
    CHECK_FALSE(dual.eq(dual.mul(t, dual.mul(z, t)), t));
  }
}

TEST_CASE("idempotent one-sided generators") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto m2 = algcore::matrix_algebra(F5, 2);
  // gens {e11}: f = e11
  CHECK(m2.eq(regtools::idempotent_right_generator(m2, {m2.basis_element(0)}),
              m2.basis_element(0)));
  // gens spanning A: f = 1
  std::vector<std::vector<Scalar>> all;
  for (int i = 0; i < 4; ++i) all.push_back(m2.basis_element(i));
  CHECK(m2.eq(regtools::idempotent_right_generator(m2, all), m2.identity()));
  // gens {e12}: W = span{e11, e12}, f = e11
  auto f = regtools::idempotent_right_generator(m2, {m2.basis_element(1)});
  CHECK(m2.eq(f, m2.basis_element(0)));
}

TEST_CASE("corner capture") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto m2 = algcore::matrix_algebra(F5, 2);
  // empty X gives e = 0
  CHECK(m2.is_zero_element(regtools::corner_capture(m2, {})));
  // X = {e12} inside M_3 (+) M_1
  auto m3 = algcore::matrix_algebra(F5, 3);
  auto s = algcore::direct_sum({m3, algcore::matrix_algebra(F5, 1)});
  auto e12 = s.basis_element(1);
  auto e = regtools::corner_capture(s, {e12});
  CHECK(s.is_idempotent(e));
  CHECK(s.eq(s.mul(e, s.mul(e12, e)), e12));
  CHECK(s.eq(s.mul(e, e12), e12));
  CHECK(s.eq(s.mul(e12, e), e12));
  // any X in a unital algebra: postconditions hold
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Scalar>> xs;
    for (int k = 0; k < 2; ++k) {
      auto v = s.zero_element();
      for (int i = 0; i < s.dim(); ++i)
        if (rng.below(2)) v[static_cast<size_t>(i)] = F5->random_small(rng);
      xs.push_back(v);
    }
    auto ee = regtools::corner_capture(s, xs);
    CHECK(s.is_idempotent(ee));
    for (const auto& xv : xs) {
      CHECK(s.eq(s.mul(ee, xv), xv));
      CHECK(s.eq(s.mul(xv, ee), xv));
    }
  }
}

TEST_CASE("unit regular witnesses over matricial algebras") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto m2 = algcore::matrix_algebra(F5, 2);
  auto mr = structure::is_matricial(m2);
  REQUIRE(mr.matricial);
  // invertible x: u = x^{-1}
  auto x = m2.add(m2.basis_element(1), m2.basis_element(2));  // e12 + e21
  auto wit = regtools::unit_regular_witness(m2, x, &*mr.units);
  CHECK(m2.eq(*wit.unit, *m2.inverse(x)));
  // e11: some unit with xux = x (u = 1 works, any verified unit accepted)
  auto w11 = regtools::unit_regular_witness(m2, m2.basis_element(0), &*mr.units);
  CHECK(m2.eq(m2.mul(m2.basis_element(0), m2.mul(*w11.unit, m2.basis_element(0))),
              m2.basis_element(0)));
  // e12: the construction produces exactly u = e12 + e21
  auto w12 = regtools::unit_regular_witness(m2, m2.basis_element(1), &*mr.units);
  CHECK(m2.eq(*w12.unit, m2.add(m2.basis_element(1), m2.basis_element(2))));
  // never fails over scrambled matricial algebras
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = gen::generate_scrambled_matricial(seed, F5, {2, 1});
    auto gm = structure::is_matricial(g.alg);
    REQUIRE(gm.matricial);
    SplitMix64 rng(seed);
    for (int k = 0; k < 10; ++k) {
      auto v = g.alg.zero_element();
      for (int i = 0; i < g.alg.dim(); ++i) v[static_cast<size_t>(i)] = F5->random_small(rng);
      auto w = regtools::unit_regular_witness(g.alg, v, &*gm.units);
      CHECK(g.alg.eq(g.alg.mul(v, g.alg.mul(*w.unit, v)), v));
    }
  }
  // the matricial precondition is enforced
  auto Q = make_field(FieldDesc::rationals());
  auto qi = gen::extension_component(Q, {"1", "0", "1"});
  CHECK_THROWS_WITH_AS(regtools::unit_regular_witness(qi, qi.basis_element(1)),
                       doctest::Contains("NotMatricial"), Error);
}

TEST_CASE("2n x 2n embedded witness") {
  auto Q = make_field(FieldDesc::rationals());
  // n = 1, x = 0, y = 0: u is the swap, self-inverse
  Matrix x0(Q.get(), 1, 1), y0(Q.get(), 1, 1);
  auto w0 = regtools::embed_unit_regular_witness(x0, y0);
  CHECK(Q->is_zero(w0.u.at(0, 0)));
  CHECK(Q->is_one(w0.u.at(0, 1)));
  CHECK(Q->is_one(w0.u.at(1, 0)));
  CHECK(Q->is_zero(w0.u.at(1, 1)));
  CHECK(w0.u == w0.u_inv);
  // n = 1, x = y = 1: u = [[1,1],[1,0]], u_inv = [[0,1],[1,-1]]
  Matrix x1 = Matrix::identity(*Q, 1), y1 = Matrix::identity(*Q, 1);
  auto w1 = regtools::embed_unit_regular_witness(x1, y1);
  CHECK(Q->is_one(w1.u.at(0, 0)));
  CHECK(Q->is_one(w1.u.at(0, 1)));
  CHECK(Q->is_one(w1.u.at(1, 0)));
  CHECK(Q->is_zero(w1.u.at(1, 1)));
  CHECK(Q->is_zero(w1.u_inv.at(0, 0)));
  CHECK(Q->to_string(w1.u_inv.at(1, 1)) == "-1");
  // precondition is verified
  Matrix bad(Q.get(), 1, 1);
  bad.at(0, 0) = Q->parse("2");
  Matrix ybad(Q.get(), 1, 1);
  ybad.at(0, 0) = Q->parse("1");
  CHECK_THROWS_WITH_AS(regtools::embed_unit_regular_witness(bad, ybad),
                       doctest::Contains("PreconditionFailed"), Error);
  // seeded pairs (x, quasi_inverse(x)) over F_3
  auto F3 = make_field(FieldDesc::prime(3));
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto mn = algcore::matrix_algebra(F3, n);
    auto v = mn.zero_element();
    for (int i = 0; i < mn.dim(); ++i) v[static_cast<size_t>(i)] = F3->random_small(rng);
    auto y = regtools::quasi_inverse(mn, v);
    Matrix xm(F3.get(), n, n), ym(F3.get(), n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        xm.at(i, j) = v[static_cast<size_t>(i * n + j)];
        ym.at(i, j) = y[static_cast<size_t>(i * n + j)];
      }
    auto w = regtools::embed_unit_regular_witness(xm, ym);
    CHECK(linalg::mul(w.u, w.u_inv) == Matrix::identity(*F3, 2 * n));
  }
}

TEST_CASE("unit lifting through a splitting") {
  auto F3 = make_field(FieldDesc::prime(3));
  // J = 0, T = R: w is the preimage of u_bar
  auto m2 = algcore::matrix_algebra(F3, 2);
  auto q0 = algcore::quotient(m2, linalg::subspace_zero(*F3, 4));
  auto full = linalg::subspace_full(*F3, 4);
  auto ubar = q0.quotient.add(q0.quotient.basis_element(1), q0.quotient.basis_element(2));
  auto w = regtools::lift_unit_through_splitting(q0, full, ubar);
  CHECK(m2.inverse(w).has_value());
  // u_bar = 1 gives w = 1
  auto w1 = regtools::lift_unit_through_splitting(q0, full, q0.quotient.identity());
  CHECK(m2.eq(w1, m2.identity()));
  // non-unit is rejected
  CHECK_THROWS_WITH_AS(
      regtools::lift_unit_through_splitting(q0, full, q0.quotient.basis_element(1)),
      doctest::Contains("NotAUnit"), Error);
  // seeded splittings R = T (+) J from generated extensions
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    ExtensionProfile prof;
    prof.ideal_blocks = {{2, {}}};
    prof.quotient_blocks = {{1, {}}, {1, {}}};
    auto g = gen::generate_random_extension(seed, F3, prof);
    // T: complement of J built from the section
    std::vector<std::vector<Scalar>> trows;
    for (int i = 0; i < g.inst.q.quotient.dim(); ++i)
      trows.push_back(g.inst.q.lift(g.inst.q.quotient.basis_element(i)));
    // the section complement is multiplicatively closed only after the
    // lifting construction; use lift_subalgebra via the extension API
    auto fullq = linalg::subspace_full(*F3, g.inst.q.quotient.dim());
    // find a unit of R/J by seeded search
    SplitMix64 rng(seed * 7 + 1);
    std::vector<Scalar> ub;
    for (;;) {
      ub = g.inst.q.quotient.zero_element();
      for (int i = 0; i < g.inst.q.quotient.dim(); ++i)
        ub[static_cast<size_t>(i)] = F3->random_small(rng);
      if (g.inst.q.quotient.inverse(ub).has_value()) break;
    }
    // T from the generator's own construction
    auto tsub = linalg::subspace_from_rows(Matrix::from_rows(*F3, trows));
    if (!algcore::is_multiplicatively_closed(g.inst.q.ambient, tsub)) continue;
    auto wlift = regtools::lift_unit_through_splitting(g.inst.q, tsub, ub);
    CHECK(g.inst.q.ambient.inverse(wlift).has_value());
    CHECK(g.inst.q.quotient.eq(g.inst.q.project(wlift), ub));
  }
}

TEST_CASE("exhaustive unit lifting over a small corner") {
  auto F2 = make_field(FieldDesc::prime(2));
  // R = M_2(F_2) (+) F_2 with J = the second summand
  auto r = algcore::direct_sum({algcore::matrix_algebra(F2, 2), algcore::matrix_algebra(F2, 1)});
  std::vector<std::vector<Scalar>> jrows{r.basis_element(4)};
  auto j = linalg::subspace_from_rows(Matrix::from_rows(*F2, jrows));
  auto rep = regtools::units_lift_exhaustively(r, j, r.identity());
  CHECK(rep.all_lift);
  CHECK(rep.units_checked > 0);
}
