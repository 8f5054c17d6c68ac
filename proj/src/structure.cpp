#include "exalg/structure.hpp"

#include <algorithm>
#include <sstream>

#include "exalg/factor.hpp"

namespace exalg {
namespace structure {

namespace {

Scalar scalar_pow(const Field& F, Scalar x, BigInt e) {
  Scalar r = F.one();
  while (e > 0) {
    if ((e & 1) != 0) r = F.mul(r, x);
    x = F.mul(x, x);
    e >>= 1;
  }
  return r;
}

// regular representation used for radical computations: the left action
// on A itself when unital, else on the unital hull K*1 + A
struct RegularRepr {
  bool hull;
  int m;  // dimension of the representation
};

Matrix repr_matrix(const FDAlgebra& a, const RegularRepr& rr, const std::vector<Scalar>& x) {
  const Field& F = a.field();
  if (!rr.hull) return a.left_mult_matrix(x);
  int n = a.dim();
  Matrix m(a.field_ref().get(), n + 1, n + 1);
  // basis of A^1: (1, b_1..b_n); L_x(1) = x, L_x(b_j) = x*b_j
  for (int i = 0; i < n; ++i) m.at(i + 1, 0) = x[static_cast<size_t>(i)];
  Matrix lx = a.left_mult_matrix(x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i + 1, j + 1) = lx.at(i, j);
  return m;
}

}  // namespace

Poly charpoly(const Matrix& m0) {
  const Field& F = m0.field();
  int n = m0.rows();
  require(n == m0.cols(), Err::DimensionMismatch, "charpoly of non-square");
  if (n == 0) return poly::one(F);
  Matrix h = m0;
  // similarity reduction to upper Hessenberg form with pivoting
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (!F.is_zero(h.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      // swap rows and columns piv <-> j+1 (similarity)
      for (int c = 0; c < n; ++c) std::swap(h.at(piv, c), h.at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(h.at(r, piv), h.at(r, j + 1));
    }
    Scalar d = h.at(j + 1, j);
    for (int i = j + 2; i < n; ++i) {
      if (F.is_zero(h.at(i, j))) continue;
      Scalar f = F.div(h.at(i, j), d);
      for (int c = 0; c < n; ++c) h.at(i, c) = F.sub(h.at(i, c), F.mul(f, h.at(j + 1, c)));
      for (int r = 0; r < n; ++r) h.at(r, j + 1) = F.add(h.at(r, j + 1), F.mul(f, h.at(r, i)));
    }
  }
  // p_k(X) = det(X I_k - H_k) by expansion along the last column
  std::vector<Poly> p(static_cast<size_t>(n) + 1);
  p[0] = poly::one(F);
  for (int k = 1; k <= n; ++k) {
    Poly xm = poly::make(F, {F.neg(h.at(k - 1, k - 1)), F.one()});
    Poly acc = poly::mul(F, xm, p[static_cast<size_t>(k - 1)]);
    Scalar sub_prod = F.one();
    for (int i = k - 1; i >= 1; --i) {
      // product of subdiagonal entries h[j+1][j] for j = i-1 .. k-2
      sub_prod = F.mul(sub_prod, h.at(i, i - 1));
      if (F.is_zero(sub_prod)) break;
      Scalar coef = F.mul(h.at(i - 1, k - 1), sub_prod);
      if (F.is_zero(coef)) continue;
      acc = poly::sub(F, acc, poly::scale(F, p[static_cast<size_t>(i - 1)], coef));
    }
    p[static_cast<size_t>(k)] = std::move(acc);
  }
  return p[static_cast<size_t>(n)];
}

namespace {

// coefficient c_j of charpoly: coefficient of X^(m-j) in det(XI - M)
Scalar charpoly_coeff(const Field& F, const Poly& cp, int m, int j) {
  int idx = m - j;
  if (idx < 0 || idx > cp.deg()) return F.zero();
  return cp.c[static_cast<size_t>(idx)];
}

// Solve the p^k-semilinear system sum_j C[r][j] * xi_j^(p^k) = 0 exactly;
// returns basis rows of the solution space.
Matrix solve_semilinear(const Field& F, const Matrix& c, int pk_log, uint64_t p) {
  if (pk_log == 0) return linalg::right_kernel(c);
  switch (F.kind()) {
    case FieldDesc::Kind::Prime:
      // Frobenius is the identity on F_p
      return linalg::right_kernel(c);
    case FieldDesc::Kind::Extension: {
      require(F.is_finite(), Err::UnsupportedField, "semilinear solve needs a finite extension");
      Matrix ker = linalg::right_kernel(c);
      // eta = xi^(p^k) => xi = eta^(p^(md - k mod md))
      uint64_t q = F.size();
      // degree over F_p
      int md = 0;
      uint64_t t = q;
      while (t > 1) {
        t /= p;
        ++md;
      }
      int k = pk_log % md;
      if (k == 0) return ker;
      BigInt e = 1;
      for (int i = 0; i < md - k; ++i) e *= p;
      Matrix out = ker;
      for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = scalar_pow(F, out.at(i, j), e);
      return out;
    }
    case FieldDesc::Kind::RationalFunctions: {
      // With q = p^k: C entries cleared to F_p[t] and split by exponent
      // residue mod q; since F_p coefficients are Frobenius-fixed the
      // semilinear system is equivalent to the linear system in xi with
      // coefficients E_i(t) (residue-i parts of C).
      uint64_t q = 1;
      for (int i = 0; i < pk_log; ++i) q *= p;
      std::vector<std::vector<Scalar>> rows;
      for (int r = 0; r < c.rows(); ++r) {
        // clear denominators in this row
        FpPoly den = fp::one();
        for (int j = 0; j < c.cols(); ++j) {
          const FpPoly& d = ratfunc_den(c.at(r, j));
          FpPoly g = fp::gcd(den, d, p);
          den = fp::mul(den, fp::divmod(d, g, p).first, p);
        }
        std::vector<FpPoly> entry(static_cast<size_t>(c.cols()));
        for (int j = 0; j < c.cols(); ++j) {
          FpPoly s = fp::divmod(den, ratfunc_den(c.at(r, j)), p).first;
          entry[static_cast<size_t>(j)] = fp::mul(ratfunc_num(c.at(r, j)), s, p);
        }
        for (uint64_t res = 0; res < q; ++res) {
          std::vector<Scalar> row(static_cast<size_t>(c.cols()), F.zero());
          bool nonzero = false;
          for (int j = 0; j < c.cols(); ++j) {
            const FpPoly& e = entry[static_cast<size_t>(j)];
            FpPoly part;
            for (size_t deg = res; deg < e.c.size(); deg += q)
              part.c.push_back(e.c[deg]);
            while (!part.c.empty() && part.c.back() == 0) part.c.pop_back();
            if (!part.is_zero()) {
              row[static_cast<size_t>(j)] = make_ratfunc(&F, part, fp::one());
              nonzero = true;
            }
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      if (rows.empty()) return Matrix::identity(F, c.cols());
      return linalg::right_kernel(Matrix::from_rows(F, rows));
    }
    default:
      fail(Err::UnsupportedField, "semilinear systems over this field are out of scope");
  }
}

bool subspace_is_nilpotent(const FDAlgebra& a, const linalg::SubspaceBasis& s) {
  linalg::SubspaceBasis cur = s;
  for (int step = 0; step <= a.dim() + 1; ++step) {
    if (cur.dim() == 0) return true;
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < cur.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        rows.push_back(a.mul(cur.basis.row(i), s.basis.row(j)));
    cur = linalg::subspace_from_rows(Matrix::from_rows(a.field(), rows));
  }
  return false;
}

}  // namespace

linalg::SubspaceBasis radical(const FDAlgebra& a) {
  const Field& F = a.field();
  int n = a.dim();
  if (n == 0) return linalg::subspace_zero(F, 0);
  switch (F.kind()) {
    case FieldDesc::Kind::Rationals:
    case FieldDesc::Kind::Prime:
    case FieldDesc::Kind::RationalFunctions:
      break;
    case FieldDesc::Kind::Extension:
      require(F.is_finite() || F.characteristic() == 0, Err::UnsupportedField,
              "radical over extensions of F_p(t) is out of scope");
      break;
  }
  RegularRepr rr{!a.is_unital(), a.is_unital() ? n : n + 1};
  // step 0: kernel of the trace form tr(L_x L_y)
  std::vector<Matrix> lmats;
  lmats.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) lmats.push_back(repr_matrix(a, rr, a.basis_element(i)));
  Matrix gram(a.field_ref().get(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar tr = F.zero();
      for (int r = 0; r < rr.m; ++r)
        for (int c = 0; c < rr.m; ++c) tr = F.add(tr, F.mul(lmats[static_cast<size_t>(i)].at(r, c),
                                                            lmats[static_cast<size_t>(j)].at(c, r)));
      gram.at(i, j) = tr;
    }
  Matrix ker = linalg::right_kernel(gram);
  linalg::SubspaceBasis r0 = linalg::subspace_from_rows(ker);
  uint64_t p = F.characteristic();
  linalg::SubspaceBasis rad = r0;
  if (p != 0 && static_cast<uint64_t>(rr.m) >= p) {
    // iterated chain: R_i = { x in R_{i-1} : c_{p^i}( rho(xy) ) = 0 for all
    // y in R_{i-1} }, the conditions being p^i-semilinear on R_{i-1}
    int l = 0;
    {
      uint64_t pk = 1;
      while (pk * p <= static_cast<uint64_t>(rr.m)) {
        pk *= p;
        ++l;
      }
    }
    for (int i = 1; i <= l; ++i) {
      if (rad.dim() == 0) break;
      int d = rad.dim();
      uint64_t pk = 1;
      for (int t = 0; t < i; ++t) pk *= p;
      Matrix cmat(a.field_ref().get(), d, d);
      for (int r = 0; r < d; ++r) {
        for (int j = 0; j < d; ++j) {
          auto prod = a.mul(rad.basis.row(j), rad.basis.row(r));
          Poly cp = charpoly(repr_matrix(a, rr, prod));
          cmat.at(r, j) = charpoly_coeff(F, cp, rr.m, static_cast<int>(pk));
        }
      }
      Matrix sol = solve_semilinear(F, cmat, i, p);
      // new basis: rows of sol combined with the current basis
      if (sol.rows() == 0) {
        rad = linalg::subspace_zero(F, n);
        break;
      }
      Matrix vecs = linalg::mul(sol, rad.basis);
      rad = linalg::subspace_from_rows(vecs);
    }
  }
  rad.is_ideal = true;
  // the construction is certified on the spot: ideal and nilpotent
  require(algcore::is_ideal(a, rad), Err::Internal, "radical candidate is not an ideal");
  require(subspace_is_nilpotent(a, rad), Err::Internal, "radical candidate is not nilpotent");
  return rad;
}

Poly min_poly(const FDAlgebra& a, const std::vector<Scalar>& identity,
              const std::vector<Scalar>& x) {
  const Field& F = a.field();
  int n = a.dim();
  // Krylov with incremental reduction: keep reduced rows together with
  // the combination expressing them in terms of the powers of x
  struct Reduced {
    std::vector<Scalar> row;
    std::vector<Scalar> combo;
    int pivot;
  };
  std::vector<Reduced> reduced;
  std::vector<Scalar> cur = identity;
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<Scalar> row = cur;
    std::vector<Scalar> combo(static_cast<size_t>(k) + 1, F.zero());
    combo[static_cast<size_t>(k)] = F.one();
    for (const Reduced& rd : reduced) {
      const Scalar& c = row[static_cast<size_t>(rd.pivot)];
      if (F.is_zero(c)) continue;
      Scalar fac = c;
      for (int j = 0; j < n; ++j)
        row[static_cast<size_t>(j)] =
            F.sub(row[static_cast<size_t>(j)], F.mul(fac, rd.row[static_cast<size_t>(j)]));
      for (size_t j = 0; j < rd.combo.size() && j < combo.size(); ++j)
        combo[j] = F.sub(combo[j], F.mul(fac, rd.combo[j]));
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (!F.is_zero(row[static_cast<size_t>(j)])) {
        piv = j;
        break;
      }
    if (piv < 0) {
      // dependence found: combo gives the monic minimal polynomial
      Poly pm = poly::make(F, combo);
      return poly::monic(F, pm);
    }
    Scalar iv = F.inv(row[static_cast<size_t>(piv)]);
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = F.mul(row[static_cast<size_t>(j)], iv);
    for (auto& c : combo) c = F.mul(c, iv);
    reduced.push_back({std::move(row), std::move(combo), piv});
    cur = a.mul(cur, x);
  }
  fail(Err::Internal, "min_poly did not terminate");
}

namespace {

// evaluate a polynomial at x inside (a, identity e)
std::vector<Scalar> eval_poly_at(const FDAlgebra& a, const std::vector<Scalar>& e, const Poly& f,
                                 const std::vector<Scalar>& x) {
  const Field& F = a.field();
  auto r = a.zero_element();
  std::vector<Scalar> pw = e;
  for (int i = 0; i <= f.deg(); ++i) {
    if (!F.is_zero(f.c[static_cast<size_t>(i)]))
      r = a.add(r, a.scale(pw, f.c[static_cast<size_t>(i)]));
    if (i < f.deg()) pw = a.mul(pw, x);
  }
  return r;
}

// idempotent from a coprime factor split of the minimal polynomial:
// m = f*g, u = (bg)(x) with af + bg = 1; u^2 = u, u != 0, u != e
std::optional<std::vector<Scalar>> crt_idempotent(const FDAlgebra& a,
                                                  const std::vector<Scalar>& e,
                                                  const std::vector<Scalar>& x, const Poly& m,
                                                  const Poly& f) {
  const Field& F = a.field();
  Poly g = poly::divmod(F, m, f).first;
  auto [d, u, v] = poly::xgcd(F, f, g);
  if (d.deg() != 0) return std::nullopt;  // not coprime
  // u*f + v*g = 1 (after monic normalization d = 1)
  Poly h = poly::mul(F, v, g);  // h = 1 mod f, 0 mod g
  auto idem = eval_poly_at(a, e, h, x);
  if (a.is_zero_element(idem) || a.eq(idem, e)) return std::nullopt;
  if (!a.is_idempotent(idem)) return std::nullopt;
  return idem;
}

// --- p-adic idempotent lifting over Q ---------------------------------------

struct ZModTable {
  int n = 0;
  std::vector<std::vector<std::pair<int, BigInt>>> tab;  // i*n+j -> (k, int coeff)
  BigInt den;                                            // basis rescale factor
};

std::optional<ZModTable> integer_table(const FDAlgebra& a) {
  if (a.field().kind() != FieldDesc::Kind::Rationals) return std::nullopt;
  ZModTable t;
  t.n = a.dim();
  BigInt den(1);
  for (const auto& cell : a.table())
    for (const auto& term : cell) {
      BigInt d = boost::multiprecision::denominator(rational_value(term.coeff));
      den = den / boost::multiprecision::gcd(den, d) * d;
    }
  t.den = den;
  t.tab.resize(static_cast<size_t>(t.n) * t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (const auto& term : a.table()[static_cast<size_t>(i) * t.n + j]) {
        const BigRational& q = rational_value(term.coeff);
        BigInt v = boost::multiprecision::numerator(q) *
                   (den / boost::multiprecision::denominator(q));
        t.tab[static_cast<size_t>(i) * t.n + j].push_back({term.k, v});
      }
  return t;
}

std::vector<BigInt> zmul(const ZModTable& t, const std::vector<BigInt>& x,
                         const std::vector<BigInt>& y, const BigInt& mod) {
  std::vector<BigInt> r(static_cast<size_t>(t.n), BigInt(0));
  for (int i = 0; i < t.n; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < t.n; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      BigInt xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] % mod;
      for (const auto& [k, c] : t.tab[static_cast<size_t>(i) * t.n + j])
        r[static_cast<size_t>(k)] = (r[static_cast<size_t>(k)] + xy * c) % mod;
    }
  }
  return r;
}

// balanced rational reconstruction: x = a/b mod m with |a|, b <= sqrt(m/2)
std::optional<BigRational> rational_reconstruct(const BigInt& x, const BigInt& m) {
  BigInt half = m / 2;
  BigInt bound = boost::multiprecision::sqrt(half);
  BigInt r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  BigInt t0(0), t1(1);
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return std::nullopt;
  if (boost::multiprecision::gcd(boost::multiprecision::abs(r1), t1) != 1) return std::nullopt;
  return BigRational(r1, t1);
}

std::optional<std::vector<Scalar>> padic_idempotent(const FDAlgebra& a) {
  auto zt = integer_table(a);
  if (!zt) return std::nullopt;
  const Field& F = a.field();
  int n = a.dim();
  static const uint64_t kPrimes[] = {251, 257, 263, 269, 271};
  for (uint64_t pv : kPrimes) {
    if (zt->den % pv == 0) continue;
    FieldRef fp_field;
    try {
      fp_field = make_field(FieldDesc::prime(pv));
    } catch (const Error&) {
      continue;
    }
    // reduction of the rescaled-basis table mod p
    FDAlgebra::Table tab(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : zt->tab[static_cast<size_t>(i) * n + j]) {
          BigInt cv = c % pv;
          if (cv < 0) cv += pv;
          if (cv != 0)
            tab[static_cast<size_t>(i) * n + j].push_back(
                {k, fp_field->from_int(static_cast<int64_t>(cv))});
        }
    FDAlgebra ap;
    try {
      ap = FDAlgebra::make_unchecked(fp_field, n, std::move(tab));
      if (!ap.is_unital()) continue;
      if (radical(ap).dim() != 0) continue;  // bad prime
    } catch (const Error&) {
      continue;
    }
    std::optional<std::vector<Scalar>> ebar;
    try {
      ebar = find_proper_idempotent(ap);
    } catch (const Error&) {
      continue;
    }
    if (!ebar) continue;
    // Newton lifting e -> 3e^2 - 2e^3 doubles the precision each step
    std::vector<BigInt> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = BigInt(prime_value((*ebar)[static_cast<size_t>(i)]));
    BigInt mod(pv);
    for (int step = 0; step < 7; ++step) {
      mod = mod * mod;
      std::vector<BigInt> e2 = zmul(*zt, e, e, mod);
      std::vector<BigInt> e3 = zmul(*zt, e2, e, mod);
      for (int i = 0; i < n; ++i) {
        BigInt v = (3 * e2[static_cast<size_t>(i)] - 2 * e3[static_cast<size_t>(i)]) % mod;
        if (v < 0) v += mod;
        e[static_cast<size_t>(i)] = v;
      }
      if (step < 2) continue;  // too little precision to bother reconstructing
      // attempt rational reconstruction (coords are w.r.t. the rescaled
      // basis b' = den * b, so divide by den back in A coordinates)
      std::vector<Scalar> cand(static_cast<size_t>(n), F.zero());
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        auto q = rational_reconstruct(e[static_cast<size_t>(i)], mod);
        if (!q) {
          ok = false;
          break;
        }
        cand[static_cast<size_t>(i)] = Scalar(&F, *q * BigRational(zt->den));
      }
      if (!ok) continue;
      if (!a.is_idempotent(cand)) continue;
      if (a.is_zero_element(cand)) continue;
      if (a.is_unital() && a.eq(cand, a.identity())) continue;
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Scalar>> find_proper_idempotent(const FDAlgebra& a) {
  const Field& F = a.field();
  require(a.is_unital(), Err::PreconditionFailed, "find_proper_idempotent needs a unital algebra");
  int n = a.dim();
  if (n <= 1) return std::nullopt;
  const auto& e = a.identity();
  // deterministic candidate stream: basis, pairwise sums/products, then
  // seeded random small combinations
  auto try_candidate = [&](const std::vector<Scalar>& z) -> std::optional<std::vector<Scalar>> {
    if (a.is_zero_element(z)) return std::nullopt;
    Poly m;
    try {
      m = min_poly(a, e, z);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (m.deg() <= 1) return std::nullopt;
    factor::Factorization fac;
    try {
      fac = factor::factor(F, m);
    } catch (const Error&) {
      return std::nullopt;  // out of factorization scope: try another candidate
    }
    if (fac.factors.size() >= 2 || (fac.factors.size() == 1 && fac.factors[0].second >= 2)) {
      // several coprime parts give a CRT idempotent; a repeated factor
      // gives a nilpotent whose left ideal splits off an idempotent
      if (fac.factors.size() >= 2) {
        // use f = product of all powers of the first irreducible factor
        Poly f = fac.factors[0].first;
        for (int i = 1; i < fac.factors[0].second; ++i)
          f = poly::mul(F, f, fac.factors[0].first);
        if (auto u = crt_idempotent(a, e, z, m, f)) return u;
      }
      if (fac.factors[0].second >= 2 || fac.factors.size() >= 2) {
        // nilpotent part: s(z) with s the squarefree part, when nonzero
        Poly s = poly::one(F);
        for (auto& [g, mult] : fac.factors) s = poly::mul(F, s, g);
        auto w = eval_poly_at(a, e, s, z);
        if (!a.is_zero_element(w)) {
          // idempotent generator of the proper left ideal A*w
          std::vector<std::vector<Scalar>> rows;
          for (int i = 0; i < n; ++i) rows.push_back(a.mul(a.basis_element(i), w));
          rows.push_back(w);
          auto W = linalg::subspace_from_rows(Matrix::from_rows(F, rows));
          if (W.dim() > 0 && W.dim() < n) {
            // f in W with w' * f = w' for all basis w' of W
            int d = W.dim();
            std::vector<std::vector<Scalar>> sys;
            std::vector<Scalar> rhs;
            for (int r = 0; r < d; ++r) {
              auto wr = W.basis.row(r);
              // unknown coords c_1..c_d of f = sum c_t W_t
              for (int k = 0; k < n; ++k) {
                std::vector<Scalar> row(static_cast<size_t>(d), F.zero());
                for (int t = 0; t < d; ++t) {
                  auto prod = a.mul(wr, W.basis.row(t));
                  row[static_cast<size_t>(t)] = prod[static_cast<size_t>(k)];
                }
                sys.push_back(std::move(row));
                rhs.push_back(wr[static_cast<size_t>(k)]);
              }
            }
            auto sol = linalg::solve_linear(Matrix::from_rows(F, sys), rhs);
            if (sol.solution) {
              auto f = a.zero_element();
              for (int t = 0; t < d; ++t)
                f = a.add(f, a.scale(W.basis.row(t), (*sol.solution)[static_cast<size_t>(t)]));
              if (a.is_idempotent(f) && !a.is_zero_element(f) && !a.eq(f, e)) return f;
            }
          }
        }
      }
    }
    return std::nullopt;
  };

  for (int i = 0; i < n; ++i)
    if (auto u = try_candidate(a.basis_element(i))) return u;
  for (int i = 0; i < n && i < 12; ++i)
    for (int j = i + 1; j < n && j < 12; ++j) {
      if (auto u = try_candidate(a.add(a.basis_element(i), a.basis_element(j)))) return u;
      if (auto u = try_candidate(a.mul(a.basis_element(i), a.basis_element(j)))) return u;
    }
  SplitMix64 rng(0x5eedc0de5eedc0deULL);
  int attempts = F.is_finite() ? 160 : 48;
  for (int t = 0; t < attempts; ++t) {
    std::vector<Scalar> z(static_cast<size_t>(n), F.zero());
    for (int i = 0; i < n; ++i)
      if (rng.below(3) != 0) z[static_cast<size_t>(i)] = F.random_small(rng);
    if (auto u = try_candidate(z)) return u;
  }
  // p-adic lifting over Q as the workhorse for scrambled split algebras
  if (auto u = padic_idempotent(a)) return u;
  return std::nullopt;
}

std::vector<Scalar> primitive_idempotent(const FDAlgebra& a) {
  require(a.is_unital(), Err::PreconditionFailed, "primitive_idempotent needs a unital algebra");
  std::vector<Scalar> e = a.identity();
  FDAlgebra cur = a;
  // walk down corners until no proper idempotent can be found
  for (int guard = 0; guard <= a.dim(); ++guard) {
    CornerAlgebra c = algcore::corner(a, e);
    if (c.alg.dim() <= 1) return e;
    auto u = find_proper_idempotent(c.alg);
    if (!u) return e;
    // keep the smaller corner side for determinism: u vs e - u
    auto u_in_a = c.embed_element(*u);
    auto v_in_a = a.sub(e, u_in_a);
    CornerAlgebra cu = algcore::corner(a, u_in_a);
    CornerAlgebra cv = algcore::corner(a, v_in_a);
    e = (cu.alg.dim() <= cv.alg.dim()) ? u_in_a : v_in_a;
  }
  return e;
}

namespace {

// central idempotent refinement: split the identity into the primitive
// central idempotents of a semisimple unital algebra
std::vector<std::vector<Scalar>> central_primitive_idempotents(const FDAlgebra& a) {
  const Field& F = a.field();
  int n = a.dim();
  // center: [x, b_i] = 0 for all i
  std::vector<std::vector<Scalar>> rows;
  Matrix big(a.field_ref().get(), n * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix d = linalg::sub(a.left_mult_matrix(a.basis_element(i)),
                           a.right_mult_matrix(a.basis_element(i)));
    // we need [b_j, b_i] as constraints on x: columns act on x
    // (L_{b_i} - R_{b_i}) x = 0 constrains x directly
    for (int r = 0; r < n; ++r)
      for (int ccol = 0; ccol < n; ++ccol) big.at(i * n + r, ccol) = d.at(r, ccol);
  }
  Matrix zk = linalg::right_kernel(big);
  linalg::SubspaceBasis center = linalg::subspace_from_rows(zk);
  std::vector<std::vector<Scalar>> idems{a.identity()};
  bool changed = true;
  int guard = 0;
  while (changed && guard++ <= 2 * n) {
    changed = false;
    for (int zi = 0; zi < center.dim() && !changed; ++zi) {
      auto z = center.basis.row(zi);
      for (size_t ei = 0; ei < idems.size() && !changed; ++ei) {
        auto& e = idems[ei];
        auto w = a.mul(e, z);
        Poly m = min_poly(a, e, w);
        if (m.deg() <= 1) continue;
        factor::Factorization fac = factor::factor(F, m);
        require(!fac.factors.empty(), Err::Internal, "empty factorization");
        for (auto& [g, mult] : fac.factors)
          require(mult == 1, Err::Internal,
                  "central element with non-squarefree minimal polynomial in a semisimple algebra");
        if (fac.factors.size() < 2) continue;
        // replace e by the CRT idempotents of all factors
        std::vector<std::vector<Scalar>> pieces;
        for (auto& [g, mult] : fac.factors) {
          auto u = crt_idempotent(a, e, w, m, g);
          require(u.has_value(), Err::Internal, "central CRT idempotent failed");
          pieces.push_back(*u);
        }
        idems.erase(idems.begin() + static_cast<long>(ei));
        for (auto& u : pieces) idems.push_back(std::move(u));
        changed = true;
      }
    }
  }
  // deterministic order
  std::sort(idems.begin(), idems.end(), [&](const auto& x, const auto& y) {
    for (int i = 0; i < n; ++i) {
      if (!(x[static_cast<size_t>(i)] == y[static_cast<size_t>(i)]))
        return F.less(x[static_cast<size_t>(i)], y[static_cast<size_t>(i)]);
    }
    return false;
  });
  return idems;
}

}  // namespace

WedderburnReport wedderburn(const FDAlgebra& a) {
  require(a.is_unital(), Err::PreconditionFailed, "wedderburn needs a unital algebra");
  const Field& F = a.field();
  WedderburnReport rep;
  rep.radical = radical(a);
  rep.semisimple = rep.radical.dim() == 0;
  rep.fdss = rep.semisimple;
  const FDAlgebra* s = &a;
  FDAlgebra qalg;
  if (!rep.semisimple) {
    rep.quotient = algcore::quotient(a, rep.radical);
    qalg = rep.quotient->quotient;
    s = &qalg;
  }
  if (s->dim() == 0) {
    rep.matricial = rep.semisimple;
    return rep;
  }
  auto idems = central_primitive_idempotents(*s);
  // verify: orthogonal, central, sum to identity
  auto total = s->zero_element();
  for (auto& c : idems) total = s->add(total, c);
  require(s->eq(total, s->identity()), Err::Internal, "central idempotents do not sum to 1");
  int dimsum = 0;
  for (auto& c : idems) {
    WedderburnComponent comp;
    comp.central_idempotent = c;
    CornerAlgebra blk = algcore::corner(*s, c);
    comp.dim = blk.alg.dim();
    auto u = primitive_idempotent(blk.alg);
    CornerAlgebra dcorner = algcore::corner(blk.alg, u);
    comp.division_dim = dcorner.alg.dim();
    require(comp.division_dim > 0 && comp.dim % comp.division_dim == 0, Err::Internal,
            "component dimension not divisible by division degree");
    int nsq = comp.dim / comp.division_dim;
    int ns = 0;
    while (ns * ns < nsq) ++ns;
    require(ns * ns == nsq, Err::Internal, "component dimension is not n^2 * d");
    comp.matrix_size = ns;
    comp.split = comp.division_dim == 1;
    dimsum += comp.dim;
    rep.components.push_back(std::move(comp));
  }
  require(dimsum + rep.radical.dim() == a.dim(), Err::Internal,
          "Wedderburn dimension count mismatch");
  rep.matricial = rep.semisimple;
  for (const auto& c : rep.components)
    if (!c.split) rep.matricial = false;
  return rep;
}

MatrixUnitsSystem matrix_units(const FDAlgebra& a, const WedderburnReport& report,
                               int component) {
  require(report.semisimple, Err::NotSemisimple, "matrix units need a semisimple algebra");
  require(component >= 0 && component < static_cast<int>(report.components.size()),
          Err::DimensionMismatch, "component index");
  const WedderburnComponent& comp = report.components[static_cast<size_t>(component)];
  require(comp.split, Err::NotSplit, "component has a nontrivial division algebra");
  const Field& F = a.field();
  CornerAlgebra blk = algcore::corner(a, comp.central_idempotent);
  const FDAlgebra& b = blk.alg;
  int n = comp.matrix_size;
  // primitive idempotent and the left module V = B u
  auto u = primitive_idempotent(b);
  {
    CornerAlgebra uc = algcore::corner(b, u);
    require(uc.alg.dim() == 1, Err::NotSplit, "primitive corner is not one dimensional");
  }
  std::vector<std::vector<Scalar>> vrows;
  for (int i = 0; i < b.dim(); ++i) vrows.push_back(b.mul(b.basis_element(i), u));
  linalg::SubspaceBasis V = linalg::subspace_from_rows(Matrix::from_rows(F, vrows));
  require(V.dim() == n, Err::Internal, "module dimension mismatch in matrix unit extraction");
  // Phi: B -> End(V) = M_n; columns indexed by B basis, rows by matrix entry
  Matrix phi(a.field_ref().get(), n * n, b.dim());
  for (int bi = 0; bi < b.dim(); ++bi) {
    auto bb = b.basis_element(bi);
    for (int j = 0; j < n; ++j) {
      auto img = b.mul(bb, V.basis.row(j));
      auto coords = linalg::coordinates_in(V, img);
      require(coords.has_value(), Err::Internal, "module not invariant");
      for (int i = 0; i < n; ++i) phi.at(i * n + j, bi) = (*coords)[static_cast<size_t>(i)];
    }
  }
  MatrixUnitsSystem sys;
  sys.sizes = {n};
  sys.units.resize(1);
  sys.units[0].assign(static_cast<size_t>(n),
                      std::vector<std::vector<Scalar>>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> rhs(static_cast<size_t>(n * n), F.zero());
      rhs[static_cast<size_t>(i * n + j)] = F.one();
      auto sol = linalg::solve_linear(phi, rhs);
      require(sol.solution.has_value(), Err::Internal, "matrix unit solve failed");
      // embed from the component corner back into A
      sys.units[0][static_cast<size_t>(i)][static_cast<size_t>(j)] =
          blk.embed_element(*sol.solution);
    }
  }
  auto p = a.zero_element();
  for (int i = 0; i < n; ++i) p = a.add(p, sys.units[0][static_cast<size_t>(i)][static_cast<size_t>(i)]);
  sys.block_identities = {p};
  return sys;
}

MatricialResult is_matricial(const FDAlgebra& a) {
  MatricialResult res;
  if (a.dim() == 0) {
    res.matricial = true;
    res.units = MatrixUnitsSystem{};
    return res;
  }
  if (!a.is_unital()) {
    res.matricial = false;
    res.reason = "no identity";
    return res;
  }
  WedderburnReport rep = wedderburn(a);
  if (!rep.semisimple) {
    res.matricial = false;
    res.reason = "radical != 0";
    return res;
  }
  for (size_t s = 0; s < rep.components.size(); ++s) {
    if (!rep.components[s].split) {
      res.matricial = false;
      res.reason = "non-split component";
      return res;
    }
  }
  MatrixUnitsSystem full;
  for (size_t s = 0; s < rep.components.size(); ++s) {
    MatrixUnitsSystem one = matrix_units(a, rep, static_cast<int>(s));
    full.sizes.push_back(one.sizes[0]);
    full.units.push_back(one.units[0]);
    full.block_identities.push_back(one.block_identities[0]);
  }
  // independent re-verification: relations and span
  const Field& F = a.field();
  std::vector<std::vector<Scalar>> span_rows;
  for (size_t s = 0; s < full.units.size(); ++s) {
    int ns = full.sizes[s];
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j) {
        span_rows.push_back(full.units[s][static_cast<size_t>(i)][static_cast<size_t>(j)]);
        for (size_t r = 0; r < full.units.size(); ++r) {
          int nr = full.sizes[r];
          for (int k = 0; k < nr; ++k)
            for (int l = 0; l < nr; ++l) {
              auto prod = a.mul(full.units[s][static_cast<size_t>(i)][static_cast<size_t>(j)],
                                full.units[r][static_cast<size_t>(k)][static_cast<size_t>(l)]);
              std::vector<Scalar> want = a.zero_element();
              if (r == s && j == k)
                want = full.units[s][static_cast<size_t>(i)][static_cast<size_t>(l)];
              require(a.eq(prod, want), Err::Internal, "matrix unit relation failed");
            }
        }
      }
  }
  auto span = linalg::subspace_from_rows(Matrix::from_rows(F, span_rows));
  require(span.dim() == a.dim(), Err::Internal, "matrix units do not span");
  auto total = a.zero_element();
  for (auto& p : full.block_identities) total = a.add(total, p);
  require(a.eq(total, a.identity()), Err::Internal, "block identities do not sum to 1");
  res.matricial = true;
  res.units = std::move(full);
  return res;
}

int index_of_nilpotence(const FDAlgebra& a) {
  WedderburnReport rep = wedderburn(a);
  require(rep.semisimple, Err::NotSemisimple, "index_of_nilpotence needs a semisimple algebra");
  int idx = 1;
  for (const auto& c : rep.components) idx = std::max(idx, c.matrix_size);
  return idx;
}

bool is_separable(const FDAlgebra& t) {
  FDAlgebra tt = algcore::tensor_product(algcore::opposite(t), t);
  return radical(tt).dim() == 0;
}

}  // namespace structure
}  // namespace exalg
