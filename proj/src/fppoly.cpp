#include "exalg/fppoly.hpp"

#include <algorithm>
#include <sstream>

#include "exalg/error.hpp"

namespace exalg {
namespace fp {

uint64_t add(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b % p) % p; }
uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return (a % p) * (b % p) % p; }

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

uint64_t inv(uint64_t a, uint64_t p) {
  a %= p;
  require(a != 0, Err::DivisionByZero, "inverse of 0 in F_p");
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Miller-Rabin, deterministic for n < 3,215,031,751 with bases 2,3,5,7
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulmod = [&](uint64_t a, uint64_t b) { return (__uint128_t)a * b % n; };
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL}) {
    uint64_t x = 1, e = d, base = a % n;
    while (e) {
      if (e & 1) x = mulmod(x, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

static void normalize(FpPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FpPoly make(std::vector<uint64_t> coeffs, uint64_t p) {
  FpPoly r{std::move(coeffs)};
  for (auto& v : r.c) v %= p;
  normalize(r);
  return r;
}

FpPoly zero() { return FpPoly{}; }
FpPoly one() { return FpPoly{{1}}; }
FpPoly constant(uint64_t v, uint64_t p) { return make({v}, p); }
FpPoly x() { return FpPoly{{0, 1}}; }

FpPoly add(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t v = 0;
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v += b.c[i];
    r.c[i] = v % p;
  }
  normalize(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t va = i < a.c.size() ? a.c[i] : 0;
    uint64_t vb = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (va + p - vb) % p;
  }
  normalize(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
  if (a.is_zero() || b.is_zero()) return zero();
  FpPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  normalize(r);
  return r;
}

FpPoly scale(const FpPoly& a, uint64_t k, uint64_t p) {
  k %= p;
  if (k == 0) return zero();
  FpPoly r = a;
  for (auto& v : r.c) v = v * k % p;
  return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, uint64_t p) {
  require(!b.is_zero(), Err::DivisionByZero, "polynomial division by zero");
  FpPoly rem = a, quot;
  if (a.deg() < b.deg()) return {zero(), rem};
  quot.c.assign(a.deg() - b.deg() + 1, 0);
  uint64_t linv = inv(b.lead(), p);
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    if (rem.deg() < b.deg() + k) continue;
    if (static_cast<int>(rem.c.size()) <= b.deg() + k) continue;
    uint64_t coef = rem.c[b.deg() + k] * linv % p;
    if (coef == 0) continue;
    quot.c[k] = coef;
    for (int i = 0; i <= b.deg(); ++i)
      rem.c[i + k] = (rem.c[i + k] + p - coef * b.c[i] % p) % p;
  }
  normalize(rem);
  normalize(quot);
  return {quot, rem};
}

FpPoly monic(const FpPoly& a, uint64_t p) {
  if (a.is_zero()) return a;
  return scale(a, inv(a.lead(), p), p);
}

FpPoly gcd(FpPoly a, FpPoly b, uint64_t p) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

FpPoly derivative(const FpPoly& a, uint64_t p) {
  FpPoly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * (i % p) % p;
  normalize(r);
  return r;
}

FpPoly pow_mod(const FpPoly& base, uint64_t e, const FpPoly& mod, uint64_t p) {
  FpPoly r = one();
  FpPoly b = divmod(base, mod, p).second;
  while (e) {
    if (e & 1) r = divmod(mul(r, b, p), mod, p).second;
    b = divmod(mul(b, b, p), mod, p).second;
    e >>= 1;
  }
  return r;
}

uint64_t eval(const FpPoly& a, uint64_t x, uint64_t p) {
  uint64_t r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = (r * x + a.c[i]) % p;
  return r;
}

bool eq(const FpPoly& a, const FpPoly& b) { return a.c == b.c; }

static bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (size_t i = a.c.size(); i-- > 0;)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

// squarefree decomposition in characteristic p; returns (g_i, mult) with
// a = unit * prod g_i^mult, g_i squarefree monic pairwise coprime
static void squarefree_decompose(const FpPoly& a, uint64_t p,
                                 std::vector<std::pair<FpPoly, int>>& out, int mult_scale) {
  FpPoly f = monic(a, p);
  if (f.deg() <= 0) return;
  FpPoly fp = derivative(f, p);
  if (fp.is_zero()) {
    // f = g(x^p); coefficients' p-th roots in F_p are themselves
    FpPoly g;
    g.c.resize(f.deg() / static_cast<int>(p) + 1, 0);
    for (size_t i = 0; i < f.c.size(); i += p) g.c[i / p] = f.c[i];
    squarefree_decompose(g, p, out, mult_scale * static_cast<int>(p));
    return;
  }
  FpPoly c = gcd(f, fp, p);
  FpPoly w = divmod(f, c, p).first;
  int i = 1;
  while (w.deg() > 0) {
    FpPoly y = gcd(w, c, p);
    FpPoly fac = divmod(w, y, p).first;
    if (fac.deg() > 0) out.emplace_back(monic(fac, p), i * mult_scale);
    w = y;
    c = divmod(c, y, p).first;
    ++i;
  }
  if (c.deg() > 0) squarefree_decompose(c, p, out, mult_scale * static_cast<int>(p));
}

// Berlekamp factorization of a squarefree monic polynomial
static void berlekamp_squarefree(const FpPoly& f, uint64_t p, std::vector<FpPoly>& out) {
  int n = f.deg();
  if (n <= 1) {
    out.push_back(f);
    return;
  }
  require(p <= (1u << 20), Err::UnsupportedField,
          "factorization over F_p needs enumerable p at this scale");
  // Q matrix: row i = x^(i*p) mod f
  std::vector<FpPoly> rows(n);
  FpPoly xp = pow_mod(x(), p, f, p);
  rows[0] = one();
  for (int i = 1; i < n; ++i) rows[i] = divmod(mul(rows[i - 1], xp, p), f, p).second;
  // kernel of (Q - I)^T acting on coefficient vectors: we need v with
  // v(x)^p = v(x) mod f, i.e. sum_i v_i x^{ip} = sum v_i x^i
  std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= rows[i].deg(); ++j) m[j][i] = rows[i].c[j];
    m[i][i] = (m[i][i] + p - 1) % p;
  }
  // gaussian elimination to find kernel basis
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (m[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    uint64_t iv = inv(m[rank][col], p);
    for (int j = 0; j < n; ++j) m[rank][j] = m[rank][j] * iv % p;
    for (int row = 0; row < n; ++row) {
      if (row != rank && m[row][col] != 0) {
        uint64_t c0 = m[row][col];
        for (int j = 0; j < n; ++j)
          m[row][j] = (m[row][j] + p - c0 * m[rank][j] % p) % p;
      }
    }
    pivot_col[rank] = col;
    ++rank;
  }
  int kdim = n - rank;
  if (kdim == 1) {
    out.push_back(f);
    return;
  }
  std::vector<FpPoly> kernel;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<uint64_t> v(n, 0);
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = (p - m[i][col]) % p;
    kernel.push_back(make(std::move(v), p));
  }
  // split with gcd(f, b - c) over kernel elements
  std::vector<FpPoly> work{f};
  for (const FpPoly& b : kernel) {
    if (static_cast<int>(work.size()) >= kdim) break;
    std::vector<FpPoly> next;
    for (const FpPoly& g : work) {
      if (g.deg() <= 1 || static_cast<int>(work.size() + next.size()) >= kdim + 1) {
        next.push_back(g);
        continue;
      }
      FpPoly rem = g;
      for (uint64_t c0 = 0; c0 < p && rem.deg() > 0; ++c0) {
        FpPoly d = gcd(rem, sub(b, constant(c0, p), p), p);
        if (d.deg() > 0 && d.deg() < rem.deg()) {
          next.push_back(d);
          rem = divmod(rem, d, p).first;
        }
      }
      if (rem.deg() > 0) next.push_back(rem);
    }
    work = std::move(next);
  }
  // work now holds pairwise coprime factors; recurse until irreducible
  for (const FpPoly& g : work) {
    if (eq(g, f)) {
      out.push_back(f);  // should not happen for kdim > 1
    } else {
      berlekamp_squarefree(g, p, out);
    }
  }
}

FpFactorization factor(const FpPoly& a, uint64_t p) {
  require(!a.is_zero(), Err::PreconditionFailed, "factor(0)");
  FpFactorization res;
  res.unit = a.lead();
  std::vector<std::pair<FpPoly, int>> sqfree;
  squarefree_decompose(a, p, sqfree, 1);
  for (auto& [g, mult] : sqfree) {
    std::vector<FpPoly> irr;
    berlekamp_squarefree(g, p, irr);
    for (auto& h : irr) res.factors.emplace_back(monic(h, p), mult);
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& x, const auto& y) {
              if (x.second != y.second) return x.second < y.second;
              return poly_less(x.first, y.first);
            });
  return res;
}

bool is_irreducible(const FpPoly& a, uint64_t p) {
  if (a.deg() <= 0) return false;
  if (a.deg() == 1) return true;
  // Rabin: f irreducible iff x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1
  int n = a.deg();
  FpPoly f = monic(a, p);
  auto frob_pow = [&](int e) {
    // x^(p^e) mod f by repeated p-th powering
    FpPoly r = divmod(x(), f, p).second;
    for (int i = 0; i < e; ++i) r = pow_mod(r, p, f, p);
    return r;
  };
  FpPoly xq = frob_pow(n);
  if (!eq(xq, divmod(x(), f, p).second)) return false;
  std::vector<int> primes;
  int m = n;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) primes.push_back(m);
  for (int q : primes) {
    FpPoly d = gcd(sub(frob_pow(n / q), x(), p), f, p);
    if (d.deg() != 0) return false;
  }
  return true;
}

std::string to_string(const FpPoly& a, uint64_t p, const std::string& var) {
  (void)p;
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg(); i >= 0; --i) {
    uint64_t c = a.c[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fp
}  // namespace exalg
