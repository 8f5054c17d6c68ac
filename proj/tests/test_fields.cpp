#include <doctest.h>

#include "exalg/factor.hpp"
#include "exalg/field.hpp"
#include "exalg/poly.hpp"

using namespace exalg;

namespace {

FieldRef q_field() { return make_field(FieldDesc::rationals()); }

void check_field_axioms(const FieldRef& f, uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    Scalar a = f->random_small(rng);
    Scalar b = f->random_small(rng);
    Scalar c = f->random_small(rng);
    CHECK(f->eq(f->add(f->add(a, b), c), f->add(a, f->add(b, c))));
    CHECK(f->eq(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c))));
    CHECK(f->eq(f->mul(a, b), f->mul(b, a)));
    CHECK(f->eq(f->add(a, b), f->add(b, a)));
    CHECK(f->eq(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c))));
    if (!f->is_zero(a)) CHECK(f->is_one(f->mul(a, f->inv(a))));
  }
}

void check_canonical_uniqueness(const FieldRef& f, uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    Scalar a = f->random_small(rng);
    Scalar b = f->random_small(rng);
    bool repr_equal = (a == b);
    bool diff_zero = f->is_zero(f->sub(a, b));
    CHECK(repr_equal == diff_zero);
  }
}

}  // namespace

TEST_CASE("field_make examples") {
  CHECK(make_field(FieldDesc::prime(5))->size() == 5);
  // tau^2 = t in F_2(t)[tau]/(tau^2 - t)
  auto L = make_field(FieldDesc::extension(FieldDesc::rational_functions(2, "t"), {"t", "0", "1"}));
  Scalar tau = ext_generator(*L);
  CHECK(L->to_string(L->mul(tau, tau)) == "[t,0]");
  // X^2 - 1 factors over Q
  CHECK_THROWS_WITH_AS(make_field(FieldDesc::extension(FieldDesc::rationals(), {"-1", "0", "1"})),
                       doctest::Contains("ReduciblePolynomial"), Error);
  CHECK_THROWS_AS(make_field(FieldDesc::prime(6)), Error);
}

TEST_CASE("scalar_arith examples") {
  auto F2t = make_field(FieldDesc::rational_functions(2, "t"));
  CHECK(F2t->is_one(F2t->mul(F2t->parse("t"), F2t->parse("1/t"))));
  auto Q = q_field();
  CHECK(Q->to_string(Q->add(Q->parse("2/4"), Q->parse("1/2"))) == "1");
  CHECK_THROWS_AS(Q->div(Q->one(), Q->zero()), Error);
  // cross-field operations are a hard error
  auto F5 = make_field(FieldDesc::prime(5));
  CHECK_THROWS_WITH_AS(Q->add(Q->one(), F5->one()), doctest::Contains("FieldMismatch"), Error);
}

TEST_CASE("field axioms on seeded triples") {
  check_field_axioms(q_field(), 11, 1000);
  check_field_axioms(make_field(FieldDesc::prime(5)), 12, 1000);
  check_field_axioms(make_field(FieldDesc::rational_functions(2, "t")), 13, 1000);
  check_field_axioms(
      make_field(FieldDesc::extension(FieldDesc::rational_functions(2, "t"), {"t", "0", "1"})), 14,
      1000);
}

TEST_CASE("canonical form uniqueness") {
  check_canonical_uniqueness(q_field(), 21, 1000);
  check_canonical_uniqueness(make_field(FieldDesc::prime(7)), 22, 1000);
  check_canonical_uniqueness(make_field(FieldDesc::rational_functions(3, "t")), 23, 1000);
}

TEST_CASE("minimal polynomial vanishes on the generator") {
  auto check_gen = [](const FieldDesc& d) {
    auto f = make_field(d);
    const Field* base = ext_base(*f);
    Poly m = poly::make(*base, ext_minpoly(*f));
    // evaluate m at the generator inside the extension
    Scalar gen = ext_generator(*f);
    Scalar acc = f->zero();
    Scalar pw = f->one();
    for (int i = 0; i <= m.deg(); ++i) {
      // lift base coefficient into the extension
      std::vector<Scalar> c(ext_minpoly(*f).size() - 1, base->zero());
      c[0] = m.c[static_cast<size_t>(i)];
      acc = f->add(acc, f->mul(make_ext(f.get(), c), pw));
      pw = f->mul(pw, gen);
    }
    CHECK(f->is_zero(acc));
  };
  check_gen(FieldDesc::extension(FieldDesc::rationals(), {"1", "0", "1"}));            // Q(i)
  check_gen(FieldDesc::extension(FieldDesc::prime(2), {"1", "1", "1"}));               // F_4
  check_gen(FieldDesc::extension(FieldDesc::rational_functions(2, "t"), {"t", "0", "1"}));
  check_gen(FieldDesc::extension(FieldDesc::rational_functions(3, "t"), {"-t", "0", "0", "1"}));
}

TEST_CASE("scalar parse / print round trips") {
  auto Q = q_field();
  for (const char* s : {"0", "1", "-3/4", "17"})
    CHECK(Q->to_string(Q->parse(s)) == s);
  auto F2t = make_field(FieldDesc::rational_functions(2, "t"));
  for (const char* s : {"0", "1", "t", "t/(t+1)", "t^2+t+1"})
    CHECK(F2t->to_string(F2t->parse(s)) == s);
  auto F4 = make_field(FieldDesc::extension(FieldDesc::prime(2), {"1", "1", "1"}));
  CHECK(F4->to_string(F4->parse("[1,1]")) == "[1,1]");
  CHECK(F4->to_string(F4->parse("1")) == "[1,0]");
}

TEST_CASE("irreducibility scope over the supported fields") {
  auto Q = q_field();
  auto F2 = make_field(FieldDesc::prime(2));
  auto F2t = make_field(FieldDesc::rational_functions(2, "t"));
  auto P = [&](const FieldRef& f, std::initializer_list<const char*> cs) {
    std::vector<Scalar> v;
    for (const char* c : cs) v.push_back(f->parse(c));
    return poly::make(*f, v);
  };
  CHECK(factor::is_irreducible(*Q, P(Q, {"1", "0", "1"})));        // X^2+1
  CHECK_FALSE(factor::is_irreducible(*Q, P(Q, {"-1", "0", "1"})));  // X^2-1
  CHECK(factor::is_irreducible(*Q, P(Q, {"1", "1", "1", "1", "1"})));  // Phi_5
  CHECK_FALSE(factor::is_irreducible(*Q, P(Q, {"1", "0", "2", "0", "1"})));  // (X^2+1)^2
  CHECK(factor::is_irreducible(*F2, P(F2, {"1", "1", "0", "0", "1"})));  // X^4+X+1
  CHECK(factor::is_irreducible(*F2t, P(F2t, {"t", "0", "1"})));  // X^2 - t
  CHECK_FALSE(factor::is_irreducible(*F2t, P(F2t, {"t^2", "0", "1"})));  // (X-t)^2 in char 2
  // degree-3 binomial over F_3(t)
  auto F3t = make_field(FieldDesc::rational_functions(3, "t"));
  CHECK(factor::is_irreducible(*F3t, P(F3t, {"-t", "0", "0", "1"})));
}

TEST_CASE("factorization splits and multiplicities") {
  auto F3 = make_field(FieldDesc::prime(3));
  auto P = [&](const FieldRef& f, std::initializer_list<const char*> cs) {
    std::vector<Scalar> v;
    for (const char* c : cs) v.push_back(f->parse(c));
    return poly::make(*f, v);
  };
  // X^3 - X = X(X-1)(X+1) over F_3
  auto fac = factor::factor(*F3, P(F3, {"0", "-1", "0", "1"}));
  CHECK(fac.factors.size() == 3);
  // quartic over Q with two quadratic factors: (X^2+1)(X^2+2)
  auto Q = q_field();
  auto fq = factor::factor(*Q, P(Q, {"2", "0", "3", "0", "1"}));
  CHECK(fq.factors.size() == 2);
  for (auto& [g, e] : fq.factors) CHECK(g.deg() == 2);
}
