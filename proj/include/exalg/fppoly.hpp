#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exalg {

// Dense univariate polynomials over F_p, coefficients low degree first,
// normalized (no trailing zeros; the zero polynomial has empty coeffs).
// p is passed explicitly; all values are least nonnegative residues.
// This is the workhorse behind F_p(t) scalars and factorization over F_p.
struct FpPoly {
  std::vector<uint64_t> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  uint64_t lead() const { return c.back(); }
};

namespace fp {

uint64_t add(uint64_t a, uint64_t b, uint64_t p);
uint64_t sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);
uint64_t pow(uint64_t a, uint64_t e, uint64_t p);

// true for p prime (deterministic Miller-Rabin, valid for p < 2^32)
bool is_prime(uint64_t p);

FpPoly make(std::vector<uint64_t> coeffs, uint64_t p);
FpPoly zero();
FpPoly one();
FpPoly constant(uint64_t v, uint64_t p);
FpPoly x();

FpPoly add(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly scale(const FpPoly& a, uint64_t k, uint64_t p);
// division with remainder; b must be nonzero
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, uint64_t p);  // monic
FpPoly monic(const FpPoly& a, uint64_t p);
FpPoly derivative(const FpPoly& a, uint64_t p);
FpPoly pow_mod(const FpPoly& base, uint64_t e, const FpPoly& mod, uint64_t p);
uint64_t eval(const FpPoly& a, uint64_t x, uint64_t p);
bool eq(const FpPoly& a, const FpPoly& b);

// complete factorization over F_p (Berlekamp with deterministic splitting;
// requires p small enough to enumerate, which holds for every field this
// library constructs factorizations over). Returns (monic factor, mult)
// pairs sorted deterministically, together with the leading unit.
struct FpFactorization {
  uint64_t unit;
  std::vector<std::pair<FpPoly, int>> factors;
};
FpFactorization factor(const FpPoly& a, uint64_t p);

bool is_irreducible(const FpPoly& a, uint64_t p);

std::string to_string(const FpPoly& a, uint64_t p, const std::string& var);

}  // namespace fp
}  // namespace exalg
