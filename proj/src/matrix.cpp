#include "exalg/matrix.hpp"

#include <algorithm>

namespace exalg {

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(&f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(&f, r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, Err::DimensionMismatch, "ragged rows");
    for (int j = 0; j < c; ++j) {
      f.check(rows[i][j]);
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::row_vector(const Field& f, const std::vector<Scalar>& v) {
  return from_rows(f, {v});
}

std::vector<Scalar> Matrix::row(int i) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(int i, const std::vector<Scalar>& v) {
  require(static_cast<int>(v.size()) == cols_, Err::DimensionMismatch, "row length");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!f_->is_zero(s)) return false;
  return true;
}

namespace linalg {

static void check_same(const Matrix& a, const Matrix& b) {
  require(a.field_ptr() == b.field_ptr(), Err::FieldMismatch, "matrices over different fields");
}

Matrix add(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), Err::DimensionMismatch, "add");
  const Field& F = a.field();
  Matrix r(a.field_ptr(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return r;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), Err::DimensionMismatch, "sub");
  const Field& F = a.field();
  Matrix r(a.field_ptr(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return r;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  require(a.cols() == b.rows(), Err::DimensionMismatch, "mul");
  const Field& F = a.field();
  Matrix r(a.field_ptr(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (F.is_zero(bkj)) continue;
        r.at(i, j) = F.add(r.at(i, j), F.mul(aik, bkj));
      }
    }
  }
  return r;
}

Matrix scale(const Matrix& a, const Scalar& k) {
  const Field& F = a.field();
  Matrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.mul(a.at(i, j), k);
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.field_ptr(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  require(a.rows() == b.rows(), Err::DimensionMismatch, "hstack");
  Matrix r(a.field_ptr(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  require(a.cols() == b.cols(), Err::DimensionMismatch, "vstack");
  Matrix r(a.field_ptr(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

// does the field benefit from fraction-free (Bareiss) elimination?
static bool wants_fraction_free(const Field& F) {
  switch (F.kind()) {
    case FieldDesc::Kind::Rationals:
    case FieldDesc::Kind::RationalFunctions:
      return true;
    case FieldDesc::Kind::Extension:
      return wants_fraction_free(*ext_base(F));
    default:
      return false;
  }
}

// multiply a row by the least common denominator of its entries so that
// Bareiss updates stay denominator-free (Q and F_p(t) entries only)
static void clear_denominators(const Field& F, std::vector<Scalar>& row) {
  if (F.kind() == FieldDesc::Kind::Rationals) {
    BigInt l(1);
    for (const auto& s : row) {
      BigInt d = boost::multiprecision::denominator(rational_value(s));
      BigInt g = boost::multiprecision::gcd(l, d);
      l = l / g * d;
    }
    if (l == 1) return;
    Scalar k(&F, BigRational(l));
    for (auto& s : row) s = F.mul(s, k);
  } else if (F.kind() == FieldDesc::Kind::RationalFunctions) {
    uint64_t p = F.characteristic();
    FpPoly l = fp::one();
    for (const auto& s : row) {
      const FpPoly& d = ratfunc_den(s);
      FpPoly g = fp::gcd(l, d, p);
      l = fp::mul(l, fp::divmod(d, g, p).first, p);
    }
    if (l.deg() == 0) return;
    Scalar k = make_ratfunc(&F, l, fp::one());
    for (auto& s : row) s = F.mul(s, k);
  }
  // extensions of these are left to plain elimination
}

namespace {

// Incremental elimination: reduce each incoming row against the stored
// normalized pivot rows (pivot entry 1). Rows that become zero cost only
// one sweep; entry growth is governed by the reduced rows themselves,
// which keeps tall structured systems cheap. Input rows over Q / F_p(t)
// are denominator-cleared by the callers.
//
// `c` = number of leading columns eligible for pivots; rows may be wider
// (augmented part). On return the rows are in RREF order: pivot rows
// sorted by pivot column, then the zero rows in encounter order.
void echelon_core(const Field& F, std::vector<std::vector<Scalar>>& w, int c,
                  std::vector<int>& pivots) {
  int width = w.empty() ? 0 : static_cast<int>(w[0].size());
  struct PivotRow {
    std::vector<Scalar> row;
    int col;
  };
  std::vector<PivotRow> stored;
  std::vector<std::vector<Scalar>> zero_rows;
  for (auto& raw : w) {
    std::vector<Scalar> row = std::move(raw);
    for (const PivotRow& pr : stored) {
      const Scalar& fac = row[static_cast<size_t>(pr.col)];
      if (F.is_zero(fac)) continue;
      Scalar f0 = fac;
      for (int j = 0; j < width; ++j)
        row[static_cast<size_t>(j)] =
            F.sub(row[static_cast<size_t>(j)], F.mul(f0, pr.row[static_cast<size_t>(j)]));
    }
    int piv = -1;
    for (int j = 0; j < c; ++j)
      if (!F.is_zero(row[static_cast<size_t>(j)])) {
        piv = j;
        break;
      }
    if (piv < 0) {
      zero_rows.push_back(std::move(row));
      continue;
    }
    Scalar iv = F.inv(row[static_cast<size_t>(piv)]);
    for (int j = 0; j < width; ++j) row[static_cast<size_t>(j)] = F.mul(row[static_cast<size_t>(j)], iv);
    // eliminate the new pivot from the stored rows
    for (PivotRow& pr : stored) {
      const Scalar& fac = pr.row[static_cast<size_t>(piv)];
      if (F.is_zero(fac)) continue;
      Scalar f0 = fac;
      for (int j = 0; j < width; ++j)
        pr.row[static_cast<size_t>(j)] =
            F.sub(pr.row[static_cast<size_t>(j)], F.mul(f0, row[static_cast<size_t>(j)]));
    }
    stored.push_back({std::move(row), piv});
  }
  std::sort(stored.begin(), stored.end(),
            [](const PivotRow& a, const PivotRow& b) { return a.col < b.col; });
  pivots.clear();
  w.clear();
  for (auto& pr : stored) {
    pivots.push_back(pr.col);
    w.push_back(std::move(pr.row));
  }
  for (auto& z : zero_rows) w.push_back(std::move(z));
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const Field& F = m.field();
  int r = m.rows(), c = m.cols();
  bool ff = wants_fraction_free(F) && F.kind() != FieldDesc::Kind::Extension;
  std::vector<std::vector<Scalar>> w(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    w[static_cast<size_t>(i)].reserve(static_cast<size_t>(c + r));
    for (int j = 0; j < c; ++j) w[static_cast<size_t>(i)].push_back(m.at(i, j));
    for (int j = 0; j < r; ++j)
      w[static_cast<size_t>(i)].push_back(i == j ? F.one() : F.zero());
    if (ff) clear_denominators(F, w[static_cast<size_t>(i)]);
  }
  std::vector<int> pivots;
  echelon_core(F, w, c, pivots);
  RrefResult res;
  res.R = Matrix(m.field_ptr(), r, c);
  res.T = Matrix(m.field_ptr(), r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) res.R.at(i, j) = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int j = 0; j < r; ++j)
      res.T.at(i, j) = w[static_cast<size_t>(i)][static_cast<size_t>(c + j)];
  }
  res.pivots = std::move(pivots);
  return res;
}

RrefPlain rref_plain(const Matrix& m) {
  const Field& F = m.field();
  int r = m.rows(), c = m.cols();
  bool ff = wants_fraction_free(F) && F.kind() != FieldDesc::Kind::Extension;
  std::vector<std::vector<Scalar>> w(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    w[static_cast<size_t>(i)] = m.row(i);
    if (ff) clear_denominators(F, w[static_cast<size_t>(i)]);
  }
  RrefPlain res;
  echelon_core(F, w, c, res.pivots);
  res.R = Matrix(m.field_ptr(), r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) res.R.at(i, j) = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return res;
}

int rank(const Matrix& m) { return static_cast<int>(rref_plain(m).pivots.size()); }

Matrix right_kernel(const Matrix& m) {
  const Field& F = m.field();
  RrefPlain rr = rref_plain(m);
  int c = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(c), false);
  for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Scalar>> rows;
  for (int j = 0; j < c; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(c), F.zero());
    v[static_cast<size_t>(j)] = F.one();
    for (size_t i = 0; i < rr.pivots.size(); ++i)
      v[static_cast<size_t>(rr.pivots[i])] = F.neg(rr.R.at(static_cast<int>(i), j));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(m.field_ptr(), 0, c);
  return Matrix::from_rows(F, rows);
}

Matrix left_kernel(const Matrix& m) {
  // rows y with y * M = 0: rows of T aligned with zero rows of R
  RrefResult rr = rref(m);
  int nz = static_cast<int>(rr.pivots.size());
  std::vector<std::vector<Scalar>> rows;
  for (int i = nz; i < m.rows(); ++i) rows.push_back(rr.T.row(i));
  if (rows.empty()) return Matrix(m.field_ptr(), 0, m.rows());
  return Matrix::from_rows(m.field(), rows);
}

SolveOutcome solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  const Field& F = a.field();
  require(static_cast<int>(b.size()) == a.rows(), Err::DimensionMismatch, "solve_linear rhs");
  Matrix rhs(a.field_ptr(), a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs.at(i, 0) = b[i];
  Matrix aug = hstack(a, rhs);
  RrefPlain rr = rref_plain(aug);
  SolveOutcome out;
  bool infeasible = false;
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    if (rr.pivots[i] == a.cols()) infeasible = true;
  if (infeasible) {
    // rerun with the transform to extract the certificate row
    RrefResult full = rref(aug);
    for (size_t i = 0; i < full.pivots.size(); ++i) {
      if (full.pivots[i] == a.cols()) {
        Infeasible inf;
        inf.certificate = full.T.row(static_cast<int>(i));
        out.infeasible = std::move(inf);
        return out;
      }
    }
  }
  std::vector<Scalar> x(static_cast<size_t>(a.cols()), F.zero());
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    x[static_cast<size_t>(rr.pivots[i])] = rr.R.at(static_cast<int>(i), a.cols());
  out.solution = std::move(x);
  return out;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  const Field& F = a.field();
  require(a.rows() == b.rows(), Err::DimensionMismatch, "solve_matrix rhs");
  Matrix aug = hstack(a, b);
  RrefPlain rr = rref_plain(aug);
  for (int p : rr.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.field_ptr(), a.cols(), b.cols());
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(rr.pivots[i], j) = rr.R.at(static_cast<int>(i), a.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  require(a.rows() == a.cols(), Err::DimensionMismatch, "inverse of non-square");
  RrefResult rr = rref(a);
  if (static_cast<int>(rr.pivots.size()) != a.rows()) return std::nullopt;
  return rr.T;
}

SubspaceBasis subspace_from_rows(const Matrix& rows) {
  RrefPlain rr = rref_plain(rows);
  int d = static_cast<int>(rr.pivots.size());
  SubspaceBasis s;
  s.ambient = rows.cols();
  s.basis = Matrix(rows.field_ptr(), d, rows.cols());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rows.cols(); ++j) s.basis.at(i, j) = rr.R.at(i, j);
  s.pivots = rr.pivots;
  return s;
}

SubspaceBasis subspace_zero(const Field& f, int ambient) {
  SubspaceBasis s;
  s.ambient = ambient;
  s.basis = Matrix(&f, 0, ambient);
  return s;
}

SubspaceBasis subspace_full(const Field& f, int ambient) {
  return subspace_from_rows(Matrix::identity(f, ambient));
}

SubspaceBasis sum(const SubspaceBasis& u, const SubspaceBasis& v) {
  require(u.ambient == v.ambient, Err::DimensionMismatch, "subspace sum");
  if (u.dim() == 0) return v;
  if (v.dim() == 0) return u;
  return subspace_from_rows(vstack(u.basis, v.basis));
}

SubspaceBasis intersect(const SubspaceBasis& u, const SubspaceBasis& v) {
  require(u.ambient == v.ambient, Err::DimensionMismatch, "subspace intersect");
  const Field& F = u.basis.field();
  if (u.dim() == 0 || v.dim() == 0) return subspace_zero(F, u.ambient);
  // kernel rows (a | b) of [U; V] give intersection elements a*U
  Matrix stacked = vstack(u.basis, v.basis);
  Matrix ker = left_kernel(stacked);
  if (ker.rows() == 0) return subspace_zero(F, u.ambient);
  Matrix au(u.basis.field_ptr(), ker.rows(), u.dim());
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < u.dim(); ++j) au.at(i, j) = ker.at(i, j);
  return subspace_from_rows(mul(au, u.basis));
}

bool contains(const SubspaceBasis& u, const std::vector<Scalar>& v) {
  const Field& F = u.basis.field();
  require(static_cast<int>(v.size()) == u.ambient, Err::DimensionMismatch, "contains");
  // reduce v against the RREF basis
  std::vector<Scalar> w = v;
  for (int i = 0; i < u.dim(); ++i) {
    int pc = u.pivots[static_cast<size_t>(i)];
    if (F.is_zero(w[static_cast<size_t>(pc)])) continue;
    Scalar fac = w[static_cast<size_t>(pc)];
    for (int j = 0; j < u.ambient; ++j)
      w[static_cast<size_t>(j)] = F.sub(w[static_cast<size_t>(j)], F.mul(fac, u.basis.at(i, j)));
  }
  for (const auto& s : w)
    if (!F.is_zero(s)) return false;
  return true;
}

bool contains(const SubspaceBasis& u, const SubspaceBasis& v) {
  for (int i = 0; i < v.dim(); ++i)
    if (!contains(u, v.basis.row(i))) return false;
  return true;
}

SubspaceBasis complement(const SubspaceBasis& u) {
  const Field& F = u.basis.field();
  std::vector<bool> is_pivot(static_cast<size_t>(u.ambient), false);
  for (int p : u.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Scalar>> rows;
  for (int j = 0; j < u.ambient; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(u.ambient), F.zero());
    v[static_cast<size_t>(j)] = F.one();
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return subspace_zero(F, u.ambient);
  return subspace_from_rows(Matrix::from_rows(F, rows));
}

std::optional<std::vector<Scalar>> coordinates_in(const SubspaceBasis& u,
                                                  const std::vector<Scalar>& v) {
  const Field& F = u.basis.field();
  require(static_cast<int>(v.size()) == u.ambient, Err::DimensionMismatch, "coordinates_in");
  std::vector<Scalar> w = v;
  std::vector<Scalar> coords;
  coords.reserve(static_cast<size_t>(u.dim()));
  for (int i = 0; i < u.dim(); ++i) {
    int pc = u.pivots[static_cast<size_t>(i)];
    Scalar fac = w[static_cast<size_t>(pc)];
    coords.push_back(fac);
    if (F.is_zero(fac)) continue;
    for (int j = 0; j < u.ambient; ++j)
      w[static_cast<size_t>(j)] = F.sub(w[static_cast<size_t>(j)], F.mul(fac, u.basis.at(i, j)));
  }
  for (const auto& s : w)
    if (!F.is_zero(s)) return std::nullopt;
  return coords;
}

}  // namespace linalg
}  // namespace exalg
