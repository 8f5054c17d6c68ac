#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

// Dense univariate polynomial over an arbitrary supported field,
// coefficients low degree first, normalized (no trailing zeros).
struct Poly {
  std::vector<Scalar> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const Scalar& lead() const { return c.back(); }
};

namespace poly {

Poly make(const Field& F, std::vector<Scalar> coeffs);
Poly zero();
Poly one(const Field& F);
Poly constant(const Field& F, const Scalar& s);
Poly x(const Field& F);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, const Scalar& k);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly gcd(const Field& F, Poly a, Poly b);  // monic
// extended gcd: returns (g, u, v) with u*a + v*b = g, g monic
std::tuple<Poly, Poly, Poly> xgcd(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly derivative(const Field& F, const Poly& a);
Poly pow_mod(const Field& F, const Poly& base, const BigInt& e, const Poly& mod);
Scalar eval(const Field& F, const Poly& a, const Scalar& v);
bool eq(const Poly& a, const Poly& b);
bool less(const Field& F, const Poly& a, const Poly& b);  // deterministic order

std::string to_string(const Field& F, const Poly& a, const std::string& var = "X");

}  // namespace poly
}  // namespace exalg
