#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "exalg/error.hpp"
#include "exalg/fppoly.hpp"
#include "exalg/prng.hpp"

namespace exalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Descriptor of a supported coefficient field. Extensions nest through
// the base pointer; the minimal polynomial is monic, low degree first,
// with coefficients written as base-field scalar strings.
struct FieldDesc {
  enum class Kind { Rationals, Prime, RationalFunctions, Extension };
  Kind kind = Kind::Rationals;
  uint64_t p = 0;                      // Prime, RationalFunctions
  std::string var = "t";               // RationalFunctions
  std::shared_ptr<FieldDesc> base;     // Extension
  std::vector<std::string> minpoly;    // Extension, scalar strings c0..cn

  static FieldDesc rationals();
  static FieldDesc prime(uint64_t p);
  static FieldDesc rational_functions(uint64_t p, std::string var = "t");
  static FieldDesc extension(FieldDesc base, std::vector<std::string> minpoly);
};

// Rational function over F_p in canonical form: num/den gcd-reduced,
// den monic, zero represented as 0/1.
struct RatFunc {
  FpPoly num;
  FpPoly den;  // monic, nonzero
  bool operator==(const RatFunc& o) const { return fp::eq(num, o.num) && fp::eq(den, o.den); }
};

class Scalar;

// Extension-field element: coordinate vector over the base field,
// length exactly deg(minpoly).
struct ExtElem {
  std::vector<Scalar> coords;
  bool operator==(const ExtElem& o) const;
};

// A scalar in canonical form, tagged with its owning field. Equality is
// representation equality; cross-field arithmetic is a hard error.
class Scalar {
public:
  using Value = std::variant<uint64_t, BigRational, RatFunc, ExtElem>;

  Scalar() : field_(nullptr), v_(uint64_t{0}) {}
  Scalar(const Field* f, Value v) : field_(f), v_(std::move(v)) {}

  const Field* field() const { return field_; }
  const Value& value() const { return v_; }
  Value& value() { return v_; }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  const Field* field_;
  Value v_;
};

inline bool ExtElem::operator==(const ExtElem& o) const { return coords == o.coords; }

// Abstract exact field. Implementations: Q, F_p, F_p(t), simple
// extensions K[X]/(m). All operations return canonical-form scalars.
class Field {
public:
  virtual ~Field() = default;

  const FieldDesc& desc() const { return desc_; }
  FieldDesc::Kind kind() const { return desc_.kind; }

  virtual uint64_t characteristic() const = 0;
  virtual Scalar zero() const = 0;
  virtual Scalar one() const = 0;
  virtual Scalar from_int(int64_t v) const = 0;

  virtual Scalar add(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar sub(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar mul(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar neg(const Scalar& a) const = 0;
  virtual Scalar inv(const Scalar& a) const = 0;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  // division known to be exact on integral representatives (Bareiss
  // updates); overridden where a gcd-free path exists
  virtual Scalar div_exact(const Scalar& a, const Scalar& b) const { return div(a, b); }

  virtual bool is_zero(const Scalar& a) const = 0;
  bool is_one(const Scalar& a) const { return eq(a, one()); }
  bool eq(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    return a == b;
  }

  virtual std::string to_string(const Scalar& a) const = 0;
  virtual Scalar parse(const std::string& s) const = 0;

  // finite-field support (element enumeration drives Berlekamp splitting
  // and exhaustive unit searches)
  virtual bool is_finite() const { return false; }
  virtual uint64_t size() const { fail(Err::UnsupportedField, "infinite field"); }
  virtual Scalar element_at(uint64_t index) const {
    (void)index;
    fail(Err::UnsupportedField, "not enumerable");
  }

  // small random scalar for seeded instance generation
  virtual Scalar random_small(SplitMix64& rng) const = 0;
  // random element guaranteed nonzero
  Scalar random_small_nonzero(SplitMix64& rng) const {
    for (int i = 0; i < 64; ++i) {
      Scalar s = random_small(rng);
      if (!is_zero(s)) return s;
    }
    return one();
  }

  void check(const Scalar& a) const {
    require(a.field() == this, Err::FieldMismatch, "scalar belongs to another field");
  }

  // deterministic total order on canonical forms (tie-breaking)
  virtual bool less(const Scalar& a, const Scalar& b) const = 0;

protected:
  FieldDesc desc_;
};

// Build a field from a descriptor. Validates primality and minimal
// polynomial irreducibility; throws NotPrime / ReduciblePolynomial /
// UnsupportedField.
FieldRef make_field(const FieldDesc& desc);

// Accessors used by the factorization and extension machinery.
const FpPoly& ratfunc_num(const Scalar& s);
const FpPoly& ratfunc_den(const Scalar& s);
Scalar make_ratfunc(const Field* f, FpPoly num, FpPoly den);
const std::vector<Scalar>& ext_coords(const Scalar& s);
Scalar make_ext(const Field* f, std::vector<Scalar> coords);
uint64_t prime_value(const Scalar& s);
const BigRational& rational_value(const Scalar& s);

// For an extension field: its base field and minimal polynomial
// (coefficients in the base field, monic, low degree first).
const Field* ext_base(const Field& f);
const std::vector<Scalar>& ext_minpoly(const Field& f);
// The generator (class of X) of an extension field.
Scalar ext_generator(const Field& f);

}  // namespace exalg
