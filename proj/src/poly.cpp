#include "exalg/poly.hpp"

#include <sstream>
#include <tuple>

namespace exalg {
namespace poly {

static void normalize(const Field& F, Poly& a) {
  while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
}

Poly make(const Field& F, std::vector<Scalar> coeffs) {
  Poly r{std::move(coeffs)};
  for (const auto& s : r.c) F.check(s);
  normalize(F, r);
  return r;
}

Poly zero() { return Poly{}; }
Poly one(const Field& F) { return Poly{{F.one()}}; }
Poly constant(const Field& F, const Scalar& s) { return make(F, {s}); }
Poly x(const Field& F) { return Poly{{F.zero(), F.one()}}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size())
      r.c.push_back(F.add(a.c[i], b.c[i]));
    else if (i < a.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(b.c[i]);
  }
  normalize(F, r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Scalar va = i < a.c.size() ? a.c[i] : F.zero();
    Scalar vb = i < b.c.size() ? b.c[i] : F.zero();
    r.c.push_back(F.sub(va, vb));
  }
  normalize(F, r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return zero();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  normalize(F, r);
  return r;
}

Poly scale(const Field& F, const Poly& a, const Scalar& k) {
  if (F.is_zero(k)) return zero();
  Poly r = a;
  for (auto& s : r.c) s = F.mul(s, k);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  require(!b.is_zero(), Err::DivisionByZero, "polynomial division by zero");
  Poly rem = a, quot;
  if (a.deg() < b.deg()) return {zero(), rem};
  quot.c.assign(a.deg() - b.deg() + 1, F.zero());
  Scalar linv = F.inv(b.lead());
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    int top = b.deg() + k;
    if (rem.deg() < top) continue;
    Scalar coef = F.mul(rem.c[top], linv);
    if (F.is_zero(coef)) {
      rem.c.pop_back();
      continue;
    }
    quot.c[k] = coef;
    for (int i = 0; i <= b.deg(); ++i)
      rem.c[i + k] = F.sub(rem.c[i + k], F.mul(coef, b.c[i]));
    normalize(F, rem);
  }
  normalize(F, quot);
  return {quot, rem};
}

Poly monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

std::tuple<Poly, Poly, Poly> xgcd(const Field& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = one(F), s1 = zero();
  Poly t0 = zero(), t1 = one(F);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(F, t0, mul(F, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar linv = F.inv(r0.lead());
  return {scale(F, r0, linv), scale(F, s0, linv), scale(F, t0, linv)};
}

Poly derivative(const Field& F, const Poly& a) {
  Poly r;
  if (a.c.size() <= 1) return r;
  r.c.reserve(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c.push_back(F.mul(a.c[i], F.from_int(static_cast<int64_t>(i))));
  normalize(F, r);
  return r;
}

Poly pow_mod(const Field& F, const Poly& base, const BigInt& e, const Poly& mod) {
  Poly r = divmod(F, one(F), mod).second;
  Poly b = divmod(F, base, mod).second;
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = divmod(F, mul(F, r, b), mod).second;
    b = divmod(F, mul(F, b, b), mod).second;
    k >>= 1;
  }
  return r;
}

Scalar eval(const Field& F, const Poly& a, const Scalar& v) {
  Scalar r = F.zero();
  for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, v), a.c[i]);
  return r;
}

bool eq(const Poly& a, const Poly& b) { return a.c == b.c; }

bool less(const Field& F, const Poly& a, const Poly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (size_t i = a.c.size(); i-- > 0;) {
    if (!(a.c[i] == b.c[i])) return F.less(a.c[i], b.c[i]);
  }
  return false;
}

std::string to_string(const Field& F, const Poly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg(); i >= 0; --i) {
    if (F.is_zero(a.c[i])) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = F.to_string(a.c[i]);
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << "(" << cs << ")*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace poly
}  // namespace exalg
