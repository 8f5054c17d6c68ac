#include <doctest.h>

#include "exalg/factor.hpp"
#include "exalg/generator.hpp"
#include "exalg/structure.hpp"

using namespace exalg;

namespace {

// upper triangular 2x2 over f: basis e11, e12, e22
FDAlgebra triangular2(const FieldRef& f) {
  FDAlgebra::Table tab(9);
  tab[0 * 3 + 0].push_back({0, f->one()});
  tab[0 * 3 + 1].push_back({1, f->one()});
  tab[1 * 3 + 2].push_back({1, f->one()});
  tab[2 * 3 + 2].push_back({2, f->one()});
  return FDAlgebra::make(f, 3, std::move(tab));
}

// brute-force radical over a small finite field: the set of x such that
// every element of x * A^1 is nilpotent
linalg::SubspaceBasis radical_bruteforce(const FDAlgebra& a) {
  const Field& F = a.field();
  uint64_t q = F.size();
  int n = a.dim();
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  REQUIRE(total <= (1u << 16));
  auto decode = [&](uint64_t idx) {
    std::vector<Scalar> v(static_cast<size_t>(n), F.zero());
    for (int i = 0; i < n; ++i) {
      v[static_cast<size_t>(i)] = F.element_at(idx % q);
      idx /= q;
    }
    return v;
  };
  auto nilpotent = [&](const std::vector<Scalar>& x) {
    auto p = x;
    for (int e = 1; e <= n + 1; ++e) {
      if (a.is_zero_element(p)) return true;
      p = a.mul(p, x);
    }
    return a.is_zero_element(p);
  };
  std::vector<std::vector<Scalar>> members;
  for (uint64_t xi = 0; xi < total; ++xi) {
    auto x = decode(xi);
    if (a.is_zero_element(x)) continue;
    bool in_rad = nilpotent(x);
    for (uint64_t zi = 0; zi < total && in_rad; ++zi) {
      auto z = decode(zi);
      if (!nilpotent(a.mul(x, z))) in_rad = false;
    }
    if (in_rad) members.push_back(x);
  }
  if (members.empty()) return linalg::subspace_zero(F, n);
  return linalg::subspace_from_rows(Matrix::from_rows(F, members));
}

}  // namespace

TEST_CASE("radical of simple and triangular algebras") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto Q = make_field(FieldDesc::rationals());
  CHECK(structure::radical(algcore::matrix_algebra(F5, 3)).dim() == 0);
  CHECK(structure::radical(algcore::matrix_algebra(Q, 2)).dim() == 0);
  auto tri = triangular2(Q);
  auto rad = structure::radical(tri);
  CHECK(rad.dim() == 1);
  CHECK_FALSE(Q->is_zero(rad.basis.at(0, 1)));  // span{e12}
}

TEST_CASE("radical of E (x) E over F_2(t) with the nilpotent oracle") {
  auto F2t = make_field(FieldDesc::rational_functions(2, "t"));
  auto E = gen::extension_component(F2t, {"t", "0", "1"});
  auto EE = algcore::tensor_product(algcore::opposite(E), E);
  auto rad = structure::radical(EE);
  CHECK(rad.dim() == 2);
  // oracle: z = tau (x) 1 - 1 (x) tau satisfies z^2 = 0 and generates rad
  // basis of E (x) E: 1(x)1, 1(x)tau, tau(x)1, tau(x)tau
  auto z = EE.zero_element();
  z[2] = F2t->one();
  z[1] = F2t->neg(F2t->one());
  CHECK(EE.is_zero_element(EE.mul(z, z)));
  auto ideal = algcore::generated_ideal(EE, {z});
  CHECK(ideal.dim() == 2);
  CHECK(ideal == rad);
  // and separability detects the non-perfect base field
  CHECK_FALSE(structure::is_separable(E));
  auto F2 = make_field(FieldDesc::prime(2));
  CHECK(structure::is_separable(gen::extension_component(F2, {"1", "1", "1"})));
}

TEST_CASE("radical matches brute force over small finite fields") {
  auto F2 = make_field(FieldDesc::prime(2));
  auto F3 = make_field(FieldDesc::prime(3));
  // triangular over F_2 and F_3
  CHECK(structure::radical(triangular2(F2)) == radical_bruteforce(triangular2(F2)));
  CHECK(structure::radical(triangular2(F3)) == radical_bruteforce(triangular2(F3)));
  // M_2(F_2): zero radical
  auto m2 = algcore::matrix_algebra(F2, 2);
  CHECK(structure::radical(m2) == radical_bruteforce(m2));
  // F_4 as an F_2-algebra: a field, zero radical
  auto f4 = gen::extension_component(F2, {"1", "1", "1"});
  CHECK(structure::radical(f4) == radical_bruteforce(f4));
  // K[x]/(x^2) (+) F_2
  FDAlgebra::Table dual(4);
  dual[0].push_back({0, F2->one()});
  dual[1].push_back({1, F2->one()});
  dual[2].push_back({1, F2->one()});
  auto dn = FDAlgebra::make(F2, 2, std::move(dual));
  auto mix = algcore::direct_sum({dn, algcore::matrix_algebra(F2, 1)});
  CHECK(structure::radical(mix) == radical_bruteforce(mix));
  // a scrambled non-semisimple instance over F_2
  auto g = gen::generate_nonsemisimple(5, F2, 6);
  CHECK(structure::radical(g.alg) == radical_bruteforce(g.alg));
}

TEST_CASE("radical properties hold on seeded instances") {
  auto F3 = make_field(FieldDesc::prime(3));
  auto Q = make_field(FieldDesc::rationals());
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = gen::generate_nonsemisimple(seed, seed % 2 ? F3 : Q, 10);
    auto rad = structure::radical(g.alg);
    CHECK(rad == g.known_radical);
    // quotient by the radical is semisimple
    auto qp = algcore::quotient(g.alg, rad);
    CHECK(structure::radical(qp.quotient).dim() == 0);
  }
}

TEST_CASE("wedderburn reports") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto rep = structure::wedderburn(algcore::matrix_algebra(F5, 2));
  CHECK(rep.semisimple);
  CHECK(rep.matricial);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].matrix_size == 2);
  CHECK(rep.components[0].division_dim == 1);
  // Q[X]/(X^2+1): one component with d = 2, semisimple but not matricial
  auto Q = make_field(FieldDesc::rationals());
  auto qi = gen::extension_component(Q, {"1", "0", "1"});
  auto rq = structure::wedderburn(qi);
  CHECK(rq.semisimple);
  CHECK_FALSE(rq.matricial);
  REQUIRE(rq.components.size() == 1);
  CHECK(rq.components[0].division_dim == 2);
  CHECK_FALSE(rq.components[0].split);
}

TEST_CASE("scrambled sums are recovered exactly") {
  auto Q = make_field(FieldDesc::rationals());
  auto F3 = make_field(FieldDesc::prime(3));
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = gen::generate_scrambled_matricial(seed, Q, {1, 2});
    auto rep = structure::wedderburn(g.alg);
    std::vector<int> sizes;
    for (auto& c : rep.components) sizes.push_back(c.matrix_size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2});
  }
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = gen::generate_scrambled_matricial(seed, F3, {2, 3});
    auto rep = structure::wedderburn(g.alg);
    std::vector<int> sizes;
    for (auto& c : rep.components) sizes.push_back(c.matrix_size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3});
  }
}

TEST_CASE("is_matricial with reasons") {
  auto F2 = make_field(FieldDesc::prime(2));
  auto res = structure::is_matricial(algcore::matrix_algebra(F2, 3));
  CHECK(res.matricial);
  REQUIRE(res.units.has_value());
  CHECK(res.units->sizes == std::vector<int>{3});
  auto Q = make_field(FieldDesc::rationals());
  auto qi = structure::is_matricial(gen::extension_component(Q, {"1", "0", "1"}));
  CHECK_FALSE(qi.matricial);
  CHECK(qi.reason == "non-split component");
  auto tri = structure::is_matricial(triangular2(Q));
  CHECK_FALSE(tri.matricial);
  CHECK(tri.reason == "radical != 0");
  // a non-unital algebra is never matricial
  FDAlgebra z = FDAlgebra::make(Q, 2, FDAlgebra::Table(4));
  auto nz = structure::is_matricial(z);
  CHECK_FALSE(nz.matricial);
  CHECK(nz.reason == "no identity");
}

TEST_CASE("matrix units satisfy the relations after scrambling") {
  auto F3 = make_field(FieldDesc::prime(3));
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = gen::generate_scrambled_matricial(seed, F3, {2});
    auto res = structure::is_matricial(g.alg);
    REQUIRE(res.matricial);
    const auto& u = *res.units;
    REQUIRE(u.sizes == std::vector<int>{2});
    const auto& a = g.alg;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            auto prod = a.mul(u.units[0][static_cast<size_t>(i)][static_cast<size_t>(j)],
                              u.units[0][static_cast<size_t>(k)][static_cast<size_t>(l)]);
            auto want = (j == k) ? u.units[0][static_cast<size_t>(i)][static_cast<size_t>(l)]
                                 : a.zero_element();
            CHECK(a.eq(prod, want));
          }
  }
}

TEST_CASE("index of nilpotence") {
  auto F2 = make_field(FieldDesc::prime(2));
  auto Q = make_field(FieldDesc::rationals());
  CHECK(structure::index_of_nilpotence(algcore::matrix_algebra(Q, 3)) == 3);
  auto s = algcore::direct_sum({algcore::matrix_algebra(Q, 1), algcore::matrix_algebra(Q, 2)});
  CHECK(structure::index_of_nilpotence(s) == 2);
  CHECK_THROWS_WITH_AS(structure::index_of_nilpotence(triangular2(Q)),
                       doctest::Contains("NotSemisimple"), Error);
  // exhaustive check over F_2 at small dimension: the largest nilpotency
  // degree over all elements equals the reported index
  for (auto sizes : std::vector<std::vector<int>>{{2}, {1, 2}, {3}}) {
    std::vector<BlockSpec> blocks;
    for (int n : sizes) blocks.push_back({n, {}});
    auto a = gen::standard_semisimple(F2, blocks);
    int idx = structure::index_of_nilpotence(a);
    uint64_t total = 1;
    for (int i = 0; i < a.dim(); ++i) total *= 2;
    int max_deg = 1;
    for (uint64_t xi = 0; xi < total; ++xi) {
      auto x = a.zero_element();
      uint64_t v = xi;
      for (int i = 0; i < a.dim(); ++i) {
        x[static_cast<size_t>(i)] = F2->element_at(v % 2);
        v /= 2;
      }
      // nilpotency degree if nilpotent
      auto p = x;
      int deg = 1;
      bool nil = false;
      for (int e = 1; e <= a.dim() + 1; ++e) {
        if (a.is_zero_element(p)) {
          nil = true;
          deg = e;
          break;
        }
        p = a.mul(p, x);
      }
      if (nil && !a.is_zero_element(x)) max_deg = std::max(max_deg, deg);
    }
    CHECK(max_deg == idx);
  }
}

TEST_CASE("minimal polynomials") {
  auto F5 = make_field(FieldDesc::prime(5));
  auto m2 = algcore::matrix_algebra(F5, 2);
  auto m = structure::min_poly(m2, m2.identity(), m2.basis_element(0));  // e11
  // X^2 - X
  CHECK(m.deg() == 2);
  CHECK(F5->is_zero(m.c[0]));
  CHECK(F5->eq(m.c[1], F5->from_int(-1)));
  auto Q = make_field(FieldDesc::rationals());
  auto qi = gen::extension_component(Q, {"1", "0", "1"});
  auto mi = structure::min_poly(qi, qi.identity(), qi.basis_element(1));
  CHECK(mi.deg() == 2);
  CHECK(Q->is_one(mi.c[0]));
  CHECK(Q->is_zero(mi.c[1]));
}

TEST_CASE("charpoly sanity") {
  auto Q = make_field(FieldDesc::rationals());
  // companion matrix of X^3 - 2X - 5
  Matrix c(Q.get(), 3, 3);
  c.at(0, 2) = Q->parse("5");
  c.at(1, 0) = Q->one();
  c.at(1, 2) = Q->parse("2");
  c.at(2, 1) = Q->one();
  auto cp = structure::charpoly(c);
  CHECK(cp.deg() == 3);
  CHECK(Q->to_string(cp.c[0]) == "-5");
  CHECK(Q->to_string(cp.c[1]) == "-2");
  CHECK(Q->is_zero(cp.c[2]));
  // diagonal matrix over F_7
  auto F7 = make_field(FieldDesc::prime(7));
  Matrix d(F7.get(), 2, 2);
  d.at(0, 0) = F7->from_int(2);
  d.at(1, 1) = F7->from_int(3);
  auto dp = structure::charpoly(d);
  CHECK(F7->eq(dp.c[0], F7->from_int(6)));   // det
  CHECK(F7->eq(dp.c[1], F7->from_int(-5)));  // -trace
}
