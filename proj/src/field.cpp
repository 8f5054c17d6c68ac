#include "exalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "exalg/factor.hpp"
#include "exalg/poly.hpp"

namespace exalg {

const char* err_code(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::ReduciblePolynomial: return "ReduciblePolynomial";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NonAssociative: return "NonAssociative";
    case Err::NotIdempotent: return "NotIdempotent";
    case Err::NotIdeal: return "NotIdeal";
    case Err::NotAUnit: return "NotAUnit";
    case Err::NotASplitting: return "NotASplitting";
    case Err::NotASubalgebra: return "NotASubalgebra";
    case Err::NotAComplement: return "NotAComplement";
    case Err::NotRegularElement: return "NotRegularElement";
    case Err::NotMatricial: return "NotMatricial";
    case Err::NotSplit: return "NotSplit";
    case Err::NotSimple: return "NotSimple";
    case Err::NotSemisimple: return "NotSemisimple";
    case Err::NotSeparable: return "NotSeparable";
    case Err::InfeasibleSystem: return "InfeasibleSystem";
    case Err::CertificateMissing: return "CertificateMissing";
    case Err::UnsupportedField: return "UnsupportedField";
    case Err::UnsupportedParameters: return "UnsupportedParameters";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

FieldDesc FieldDesc::rationals() {
  FieldDesc d;
  d.kind = Kind::Rationals;
  return d;
}

FieldDesc FieldDesc::prime(uint64_t p) {
  FieldDesc d;
  d.kind = Kind::Prime;
  d.p = p;
  return d;
}

FieldDesc FieldDesc::rational_functions(uint64_t p, std::string var) {
  FieldDesc d;
  d.kind = Kind::RationalFunctions;
  d.p = p;
  d.var = std::move(var);
  return d;
}

FieldDesc FieldDesc::extension(FieldDesc base, std::vector<std::string> minpoly) {
  FieldDesc d;
  d.kind = Kind::Extension;
  d.base = std::make_shared<FieldDesc>(std::move(base));
  d.minpoly = std::move(minpoly);
  return d;
}

// ---------------------------------------------------------------------------
// Q

namespace {

class RationalField final : public Field {
public:
  RationalField() { desc_ = FieldDesc::rationals(); }

  uint64_t characteristic() const override { return 0; }
  Scalar zero() const override { return Scalar(this, BigRational(0)); }
  Scalar one() const override { return Scalar(this, BigRational(1)); }
  Scalar from_int(int64_t v) const override { return Scalar(this, BigRational(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    return Scalar(this, rational_value(a) + rational_value(b));
  }
  Scalar sub(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    return Scalar(this, rational_value(a) - rational_value(b));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    return Scalar(this, rational_value(a) * rational_value(b));
  }
  Scalar neg(const Scalar& a) const override {
    check(a);
    return Scalar(this, -rational_value(a));
  }
  Scalar inv(const Scalar& a) const override {
    check(a);
    require(!is_zero(a), Err::DivisionByZero, "1/0 in Q");
    return Scalar(this, BigRational(1) / rational_value(a));
  }
  Scalar div_exact(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    require(!is_zero(b), Err::DivisionByZero, "exact division by 0");
    const BigRational& x = rational_value(a);
    const BigRational& y = rational_value(b);
    if (boost::multiprecision::denominator(x) == 1 &&
        boost::multiprecision::denominator(y) == 1) {
      // gcd-free integer quotient (the Bareiss update is exact)
      BigInt q, r;
      boost::multiprecision::divide_qr(boost::multiprecision::numerator(x),
                                       boost::multiprecision::numerator(y), q, r);
      if (r == 0) return Scalar(this, BigRational(q));
    }
    return Scalar(this, x / y);
  }
  bool is_zero(const Scalar& a) const override {
    check(a);
    return rational_value(a) == 0;
  }

  std::string to_string(const Scalar& a) const override {
    const BigRational& q = rational_value(a);
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
      os << "/" << boost::multiprecision::denominator(q);
    return os.str();
  }

  Scalar parse(const std::string& s) const override {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    require(!t.empty(), Err::ParseError, "empty rational");
    try {
      BigRational q(t);
      return Scalar(this, std::move(q));
    } catch (const std::exception&) {
      fail(Err::ParseError, "bad rational: " + s);
    }
  }

  Scalar random_small(SplitMix64& rng) const override {
    int64_t num = rng.range(-3, 3);
    int64_t den = rng.range(1, 2);
    return Scalar(this, BigRational(num, den));
  }

  bool less(const Scalar& a, const Scalar& b) const override {
    return rational_value(a) < rational_value(b);
  }
};

// ---------------------------------------------------------------------------
// F_p

class PrimeFieldImpl final : public Field {
public:
  explicit PrimeFieldImpl(uint64_t p) : p_(p) {
    require(p <= (1ULL << 31), Err::UnsupportedParameters, "p must be <= 2^31");
    require(fp::is_prime(p), Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
    desc_ = FieldDesc::prime(p);
  }

  uint64_t p() const { return p_; }
  uint64_t characteristic() const override { return p_; }
  Scalar zero() const override { return Scalar(this, uint64_t{0}); }
  Scalar one() const override { return Scalar(this, uint64_t{1} % p_); }
  Scalar from_int(int64_t v) const override {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += static_cast<int64_t>(p_);
    return Scalar(this, static_cast<uint64_t>(m));
  }

  Scalar add(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    return Scalar(this, fp::add(prime_value(a), prime_value(b), p_));
  }
  Scalar sub(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    return Scalar(this, fp::sub(prime_value(a), prime_value(b), p_));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    return Scalar(this, fp::mul(prime_value(a), prime_value(b), p_));
  }
  Scalar neg(const Scalar& a) const override {
    check(a);
    return Scalar(this, (p_ - prime_value(a)) % p_);
  }
  Scalar inv(const Scalar& a) const override {
    check(a);
    return Scalar(this, fp::inv(prime_value(a), p_));
  }
  bool is_zero(const Scalar& a) const override {
    check(a);
    return prime_value(a) == 0;
  }

  std::string to_string(const Scalar& a) const override { return std::to_string(prime_value(a)); }

  Scalar parse(const std::string& s) const override {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    require(!t.empty(), Err::ParseError, "empty F_p scalar");
    bool negv = false;
    size_t i = 0;
    if (t[0] == '-') negv = true, i = 1;
    else if (t[0] == '+') i = 1;
    require(i < t.size(), Err::ParseError, "bad F_p scalar: " + s);
    uint64_t v = 0;
    for (; i < t.size(); ++i) {
      require(std::isdigit(static_cast<unsigned char>(t[i])), Err::ParseError,
              "bad F_p scalar: " + s);
      v = (v * 10 + static_cast<uint64_t>(t[i] - '0')) % p_;
    }
    if (negv) v = (p_ - v) % p_;
    return Scalar(this, v);
  }

  bool is_finite() const override { return true; }
  uint64_t size() const override { return p_; }
  Scalar element_at(uint64_t index) const override { return Scalar(this, index % p_); }

  Scalar random_small(SplitMix64& rng) const override { return Scalar(this, rng.below(p_)); }

  bool less(const Scalar& a, const Scalar& b) const override {
    return prime_value(a) < prime_value(b);
  }

private:
  uint64_t p_;
};

// ---------------------------------------------------------------------------
// F_p(t)

// expression parser for rational-function strings; grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('-'|'+')* power
//   power  := atom ('^' uint)?
//   atom   := uint | var | '(' expr ')'
struct RfParser {
  const std::string& src;
  size_t pos = 0;
  uint64_t p;
  const std::string& var;

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < src.size() && src[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  RatFunc mk_const(uint64_t v) { return RatFunc{fp::constant(v % p, p), fp::one()}; }

  RatFunc add(const RatFunc& a, const RatFunc& b) {
    FpPoly num =
        fp::add(fp::mul(a.num, b.den, p), fp::mul(b.num, a.den, p), p);
    FpPoly den = fp::mul(a.den, b.den, p);
    return reduce(num, den);
  }
  RatFunc negr(const RatFunc& a) { return RatFunc{fp::scale(a.num, p - 1, p), a.den}; }
  RatFunc mulr(const RatFunc& a, const RatFunc& b) {
    return reduce(fp::mul(a.num, b.num, p), fp::mul(a.den, b.den, p));
  }
  RatFunc divr(const RatFunc& a, const RatFunc& b) {
    require(!b.num.is_zero(), Err::DivisionByZero, "division by zero in rational function");
    return reduce(fp::mul(a.num, b.den, p), fp::mul(a.den, b.num, p));
  }
  RatFunc reduce(FpPoly num, FpPoly den) {
    if (num.is_zero()) return RatFunc{fp::zero(), fp::one()};
    FpPoly g = fp::gcd(num, den, p);
    if (g.deg() > 0) {
      num = fp::divmod(num, g, p).first;
      den = fp::divmod(den, g, p).first;
    }
    uint64_t linv = fp::inv(den.lead(), p);
    return RatFunc{fp::scale(num, linv, p), fp::scale(den, linv, p)};
  }

  RatFunc parse_expr() {
    RatFunc v = parse_term();
    for (;;) {
      if (accept('+'))
        v = add(v, parse_term());
      else if (accept('-'))
        v = add(v, negr(parse_term()));
      else
        return v;
    }
  }
  RatFunc parse_term() {
    RatFunc v = parse_unary();
    for (;;) {
      if (accept('*'))
        v = mulr(v, parse_unary());
      else if (accept('/'))
        v = divr(v, parse_unary());
      else
        return v;
    }
  }
  RatFunc parse_unary() {
    bool neg = false;
    for (;;) {
      if (accept('-'))
        neg = !neg;
      else if (accept('+'))
        ;
      else
        break;
    }
    RatFunc v = parse_power();
    return neg ? negr(v) : v;
  }
  RatFunc parse_power() {
    RatFunc v = parse_atom();
    if (accept('^')) {
      uint64_t e = parse_uint();
      RatFunc r = mk_const(1);
      for (uint64_t i = 0; i < e; ++i) r = mulr(r, v);
      return r;
    }
    return v;
  }
  uint64_t parse_uint() {
    skip();
    require(pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])),
            Err::ParseError, "expected integer in: " + src);
    uint64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<uint64_t>(src[pos] - '0');
      require(v < (1ULL << 62), Err::ParseError, "integer literal too large");
      ++pos;
    }
    return v;
  }
  RatFunc parse_atom() {
    skip();
    if (accept('(')) {
      RatFunc v = parse_expr();
      require(accept(')'), Err::ParseError, "missing ')': " + src);
      return v;
    }
    if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      return mk_const(parse_uint() % p);
    if (src.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      return RatFunc{fp::x(), fp::one()};
    }
    fail(Err::ParseError, "bad rational function: " + src);
  }
};

class RationalFunctionFieldImpl final : public Field {
public:
  RationalFunctionFieldImpl(uint64_t p, std::string var) : p_(p) {
    require(p <= (1ULL << 31), Err::UnsupportedParameters, "p must be <= 2^31");
    require(fp::is_prime(p), Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
    require(!var.empty() && std::isalpha(static_cast<unsigned char>(var[0])),
            Err::UnsupportedParameters, "variable name must start with a letter");
    desc_ = FieldDesc::rational_functions(p, var);
  }

  uint64_t p() const { return p_; }
  const std::string& var() const { return desc_.var; }

  uint64_t characteristic() const override { return p_; }
  Scalar zero() const override { return Scalar(this, RatFunc{fp::zero(), fp::one()}); }
  Scalar one() const override { return Scalar(this, RatFunc{fp::one(), fp::one()}); }
  Scalar from_int(int64_t v) const override {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += static_cast<int64_t>(p_);
    return Scalar(this, RatFunc{fp::constant(static_cast<uint64_t>(m), p_), fp::one()});
  }

  Scalar variable() const { return Scalar(this, RatFunc{fp::x(), fp::one()}); }

  Scalar make(FpPoly num, FpPoly den) const {
    require(!den.is_zero(), Err::DivisionByZero, "zero denominator");
    RfParser helper{"", 0, p_, desc_.var};
    return Scalar(this, helper.reduce(std::move(num), std::move(den)));
  }

  Scalar add(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.add(rf(a), rf(b)));
  }
  Scalar sub(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.add(rf(a), h.negr(rf(b))));
  }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.mulr(rf(a), rf(b)));
  }
  Scalar neg(const Scalar& a) const override {
    check(a);
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.negr(rf(a)));
  }
  Scalar inv(const Scalar& a) const override {
    check(a);
    require(!rf(a).num.is_zero(), Err::DivisionByZero, "1/0 in F_p(t)");
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.reduce(rf(a).den, rf(a).num));
  }
  Scalar div_exact(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    require(!rf(b).num.is_zero(), Err::DivisionByZero, "exact division by 0");
    if (rf(a).den.deg() == 0 && rf(b).den.deg() == 0) {
      // denominators are monic constants, i.e. exactly 1: gcd-free
      // polynomial quotient when the division is exact
      auto [q, r] = fp::divmod(rf(a).num, rf(b).num, p_);
      if (r.is_zero()) return Scalar(this, RatFunc{q, fp::one()});
    }
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.mulr(rf(a), h.reduce(rf(b).den, rf(b).num)));
  }
  bool is_zero(const Scalar& a) const override {
    check(a);
    return rf(a).num.is_zero();
  }

  std::string to_string(const Scalar& a) const override {
    const RatFunc& v = rf(a);
    if (v.num.is_zero()) return "0";
    std::string ns = fp::to_string(v.num, p_, desc_.var);
    if (v.den.deg() == 0) return ns;
    bool num_sum = ns.find('+') != std::string::npos;
    std::string ds = fp::to_string(v.den, p_, desc_.var);
    bool den_sum = ds.find('+') != std::string::npos || ds.find('*') != std::string::npos;
    std::string out;
    out += num_sum ? "(" + ns + ")" : ns;
    out += "/";
    out += den_sum ? "(" + ds + ")" : ds;
    return out;
  }

  Scalar parse(const std::string& s) const override {
    RfParser parser{s, 0, p_, desc_.var};
    RatFunc v = parser.parse_expr();
    parser.skip();
    require(parser.pos == s.size(), Err::ParseError, "trailing input: " + s);
    return Scalar(this, std::move(v));
  }

  Scalar random_small(SplitMix64& rng) const override {
    // small polynomials, occasionally a denominator
    auto rnd_poly = [&](int maxdeg) {
      std::vector<uint64_t> c(static_cast<size_t>(rng.range(1, maxdeg + 1)));
      for (auto& v : c) v = rng.below(p_);
      return fp::make(std::move(c), p_);
    };
    FpPoly num = rnd_poly(2);
    FpPoly den = fp::one();
    if (rng.below(4) == 0) {
      den = rnd_poly(2);
      if (den.is_zero()) den = fp::one();
    }
    RfParser h{"", 0, p_, desc_.var};
    return Scalar(this, h.reduce(std::move(num), std::move(den)));
  }

  bool less(const Scalar& a, const Scalar& b) const override {
    const RatFunc& x = rf(a);
    const RatFunc& y = rf(b);
    if (x.den.c != y.den.c) return x.den.c < y.den.c;
    return x.num.c < y.num.c;
  }

private:
  static const RatFunc& rf(const Scalar& s) { return std::get<RatFunc>(s.value()); }
  uint64_t p_;
};

// ---------------------------------------------------------------------------
// simple extension K[X]/(m)

class ExtensionFieldImpl final : public Field {
public:
  ExtensionFieldImpl(FieldRef base, std::vector<Scalar> minpoly, FieldDesc desc)
      : base_(std::move(base)), m_(std::move(minpoly)) {
    desc_ = std::move(desc);
    d_ = static_cast<int>(m_.size()) - 1;
  }

  const Field& base() const { return *base_; }
  const std::vector<Scalar>& minpoly() const { return m_; }
  int degree() const { return d_; }

  uint64_t characteristic() const override { return base_->characteristic(); }

  Scalar zero() const override {
    return Scalar(this, ExtElem{std::vector<Scalar>(d_, base_->zero())});
  }
  Scalar one() const override {
    std::vector<Scalar> c(d_, base_->zero());
    c[0] = base_->one();
    return Scalar(this, ExtElem{std::move(c)});
  }
  Scalar from_int(int64_t v) const override {
    std::vector<Scalar> c(d_, base_->zero());
    c[0] = base_->from_int(v);
    return Scalar(this, ExtElem{std::move(c)});
  }

  Scalar generator() const {
    std::vector<Scalar> c(d_, base_->zero());
    if (d_ == 1) {
      // X = -m0 in a degree-1 extension
      c[0] = base_->neg(m_[0]);
    } else {
      c[1] = base_->one();
    }
    return Scalar(this, ExtElem{std::move(c)});
  }

  Scalar lift(std::vector<Scalar> coords) const {
    require(static_cast<int>(coords.size()) <= d_, Err::DimensionMismatch, "coords too long");
    coords.resize(d_, base_->zero());
    for (const auto& s : coords) base_->check(s);
    return Scalar(this, ExtElem{std::move(coords)});
  }

  Scalar add(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    const auto& x = ext_coords(a);
    const auto& y = ext_coords(b);
    std::vector<Scalar> c(d_);
    for (int i = 0; i < d_; ++i) c[i] = base_->add(x[i], y[i]);
    return Scalar(this, ExtElem{std::move(c)});
  }
  Scalar sub(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    const auto& x = ext_coords(a);
    const auto& y = ext_coords(b);
    std::vector<Scalar> c(d_);
    for (int i = 0; i < d_; ++i) c[i] = base_->sub(x[i], y[i]);
    return Scalar(this, ExtElem{std::move(c)});
  }
  Scalar neg(const Scalar& a) const override {
    check(a);
    const auto& x = ext_coords(a);
    std::vector<Scalar> c(d_);
    for (int i = 0; i < d_; ++i) c[i] = base_->neg(x[i]);
    return Scalar(this, ExtElem{std::move(c)});
  }

  Scalar mul(const Scalar& a, const Scalar& b) const override {
    check(a);
    check(b);
    const auto& x = ext_coords(a);
    const auto& y = ext_coords(b);
    // schoolbook product then reduction by the monic minimal polynomial
    std::vector<Scalar> prod(2 * d_ - 1, base_->zero());
    for (int i = 0; i < d_; ++i) {
      if (base_->is_zero(x[i])) continue;
      for (int j = 0; j < d_; ++j)
        prod[i + j] = base_->add(prod[i + j], base_->mul(x[i], y[j]));
    }
    for (int k = 2 * d_ - 2; k >= d_; --k) {
      if (base_->is_zero(prod[k])) continue;
      Scalar c = prod[k];
      for (int i = 0; i < d_; ++i)
        prod[k - d_ + i] = base_->sub(prod[k - d_ + i], base_->mul(c, m_[i]));
      prod[k] = base_->zero();
    }
    prod.resize(d_);
    return Scalar(this, ExtElem{std::move(prod)});
  }

  Scalar inv(const Scalar& a) const override {
    check(a);
    require(!is_zero(a), Err::DivisionByZero, "1/0 in extension field");
    Poly ap = poly::make(*base_, ext_coords(a));
    Poly mp = poly::make(*base_, m_);
    auto [g, u, v] = poly::xgcd(*base_, ap, mp);
    require(g.deg() == 0, Err::ReduciblePolynomial, "element not invertible: minpoly reducible");
    Scalar ginv = base_->inv(g.c[0]);
    Poly r = poly::scale(*base_, u, ginv);
    std::vector<Scalar> c = r.c;
    c.resize(d_, base_->zero());
    return Scalar(this, ExtElem{std::move(c)});
  }

  bool is_zero(const Scalar& a) const override {
    check(a);
    for (const auto& s : ext_coords(a))
      if (!base_->is_zero(s)) return false;
    return true;
  }

  std::string to_string(const Scalar& a) const override {
    std::ostringstream os;
    os << "[";
    const auto& c = ext_coords(a);
    for (int i = 0; i < d_; ++i) {
      if (i) os << ",";
      os << base_->to_string(c[i]);
    }
    os << "]";
    return os.str();
  }

  Scalar parse(const std::string& s) const override {
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '[') {
      size_t close = s.rfind(']');
      require(close != std::string::npos && close > i, Err::ParseError, "bad extension scalar");
      std::string inner = s.substr(i + 1, close - i - 1);
      std::vector<Scalar> coords;
      int depth = 0;
      std::string cur;
      for (char ch : inner) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
          coords.push_back(base_->parse(cur));
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      if (!cur.empty() ||
          !std::all_of(inner.begin(), inner.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
        coords.push_back(base_->parse(cur));
      require(static_cast<int>(coords.size()) <= d_, Err::ParseError,
              "too many coordinates for extension of degree " + std::to_string(d_));
      coords.resize(d_, base_->zero());
      return Scalar(this, ExtElem{std::move(coords)});
    }
    // bare base-field scalar means a constant
    std::vector<Scalar> coords(d_, base_->zero());
    coords[0] = base_->parse(s);
    return Scalar(this, ExtElem{std::move(coords)});
  }

  bool is_finite() const override { return base_->is_finite(); }
  uint64_t size() const override {
    uint64_t b = base_->size();
    uint64_t r = 1;
    for (int i = 0; i < d_; ++i) {
      require(r < (1ULL << 40), Err::UnsupportedField, "field too large to enumerate");
      r *= b;
    }
    return r;
  }
  Scalar element_at(uint64_t index) const override {
    uint64_t b = base_->size();
    std::vector<Scalar> c(d_, base_->zero());
    for (int i = 0; i < d_; ++i) {
      c[i] = base_->element_at(index % b);
      index /= b;
    }
    return Scalar(this, ExtElem{std::move(c)});
  }

  Scalar random_small(SplitMix64& rng) const override {
    std::vector<Scalar> c(d_, base_->zero());
    for (int i = 0; i < d_; ++i)
      if (rng.below(2) == 0) c[i] = base_->random_small(rng);
    return Scalar(this, ExtElem{std::move(c)});
  }

  bool less(const Scalar& a, const Scalar& b) const override {
    const auto& x = ext_coords(a);
    const auto& y = ext_coords(b);
    for (int i = d_ - 1; i >= 0; --i) {
      if (!(x[i] == y[i])) return base_->less(x[i], y[i]);
    }
    return false;
  }

private:
  FieldRef base_;
  std::vector<Scalar> m_;
  int d_;
};

}  // namespace

// ---------------------------------------------------------------------------

const FpPoly& ratfunc_num(const Scalar& s) { return std::get<RatFunc>(s.value()).num; }
const FpPoly& ratfunc_den(const Scalar& s) { return std::get<RatFunc>(s.value()).den; }

Scalar make_ratfunc(const Field* f, FpPoly num, FpPoly den) {
  auto* rf = dynamic_cast<const RationalFunctionFieldImpl*>(f);
  require(rf != nullptr, Err::FieldMismatch, "not a rational function field");
  return rf->make(std::move(num), std::move(den));
}

const std::vector<Scalar>& ext_coords(const Scalar& s) {
  return std::get<ExtElem>(s.value()).coords;
}

Scalar make_ext(const Field* f, std::vector<Scalar> coords) {
  auto* e = dynamic_cast<const ExtensionFieldImpl*>(f);
  require(e != nullptr, Err::FieldMismatch, "not an extension field");
  return e->lift(std::move(coords));
}

uint64_t prime_value(const Scalar& s) { return std::get<uint64_t>(s.value()); }

const BigRational& rational_value(const Scalar& s) { return std::get<BigRational>(s.value()); }

const Field* ext_base(const Field& f) {
  auto* e = dynamic_cast<const ExtensionFieldImpl*>(&f);
  require(e != nullptr, Err::FieldMismatch, "not an extension field");
  return &e->base();
}

const std::vector<Scalar>& ext_minpoly(const Field& f) {
  auto* e = dynamic_cast<const ExtensionFieldImpl*>(&f);
  require(e != nullptr, Err::FieldMismatch, "not an extension field");
  return e->minpoly();
}

Scalar ext_generator(const Field& f) {
  auto* e = dynamic_cast<const ExtensionFieldImpl*>(&f);
  require(e != nullptr, Err::FieldMismatch, "not an extension field");
  return e->generator();
}

FieldRef make_field(const FieldDesc& desc) {
  switch (desc.kind) {
    case FieldDesc::Kind::Rationals:
      return std::make_shared<RationalField>();
    case FieldDesc::Kind::Prime:
      return std::make_shared<PrimeFieldImpl>(desc.p);
    case FieldDesc::Kind::RationalFunctions:
      return std::make_shared<RationalFunctionFieldImpl>(desc.p, desc.var);
    case FieldDesc::Kind::Extension: {
      require(desc.base != nullptr, Err::UnsupportedParameters, "extension without base");
      FieldRef base = make_field(*desc.base);
      require(desc.minpoly.size() >= 2, Err::UnsupportedParameters,
              "minimal polynomial must have degree >= 1");
      require(desc.minpoly.size() <= 9, Err::UnsupportedParameters,
              "minimal polynomial degree > 8 unsupported");
      std::vector<Scalar> coeffs;
      coeffs.reserve(desc.minpoly.size());
      for (const auto& s : desc.minpoly) coeffs.push_back(base->parse(s));
      require(base->is_one(coeffs.back()), Err::UnsupportedParameters,
              "minimal polynomial must be monic");
      Poly m = poly::make(*base, coeffs);
      require(m.deg() >= 1, Err::UnsupportedParameters, "minimal polynomial degenerate");
      require(factor::is_irreducible(*base, m), Err::ReduciblePolynomial,
              "minimal polynomial factors over the base field");
      return std::make_shared<ExtensionFieldImpl>(std::move(base), std::move(coeffs), desc);
    }
  }
  fail(Err::UnsupportedParameters, "unknown field kind");
}

}  // namespace exalg
