#include "exalg/algebra.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace exalg {

std::vector<Scalar> FDAlgebra::basis_element(int i) const {
  require(i >= 0 && i < n_, Err::DimensionMismatch, "basis index");
  auto v = zero_element();
  v[static_cast<size_t>(i)] = field_->one();
  return v;
}

std::vector<Scalar> FDAlgebra::mul(const std::vector<Scalar>& x,
                                   const std::vector<Scalar>& y) const {
  const Field& F = *field_;
  require(static_cast<int>(x.size()) == n_ && static_cast<int>(y.size()) == n_,
          Err::DimensionMismatch, "element length");
  auto r = zero_element();
  for (int i = 0; i < n_; ++i) {
    if (F.is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < n_; ++j) {
      if (F.is_zero(y[static_cast<size_t>(j)])) continue;
      Scalar xy = F.mul(x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
      for (const Term& t : tab_[static_cast<size_t>(i) * n_ + j])
        r[static_cast<size_t>(t.k)] = F.add(r[static_cast<size_t>(t.k)], F.mul(xy, t.coeff));
    }
  }
  return r;
}

std::vector<Scalar> FDAlgebra::add(const std::vector<Scalar>& x,
                                   const std::vector<Scalar>& y) const {
  const Field& F = *field_;
  auto r = x;
  for (int i = 0; i < n_; ++i)
    r[static_cast<size_t>(i)] = F.add(r[static_cast<size_t>(i)], y[static_cast<size_t>(i)]);
  return r;
}

std::vector<Scalar> FDAlgebra::sub(const std::vector<Scalar>& x,
                                   const std::vector<Scalar>& y) const {
  const Field& F = *field_;
  auto r = x;
  for (int i = 0; i < n_; ++i)
    r[static_cast<size_t>(i)] = F.sub(r[static_cast<size_t>(i)], y[static_cast<size_t>(i)]);
  return r;
}

std::vector<Scalar> FDAlgebra::scale(const std::vector<Scalar>& x, const Scalar& k) const {
  const Field& F = *field_;
  auto r = x;
  for (auto& s : r) s = F.mul(s, k);
  return r;
}

bool FDAlgebra::is_zero_element(const std::vector<Scalar>& x) const {
  for (const auto& s : x)
    if (!field_->is_zero(s)) return false;
  return true;
}

bool FDAlgebra::eq(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  return is_zero_element(sub(x, y));
}

std::vector<Scalar> FDAlgebra::pow(const std::vector<Scalar>& x, int e) const {
  require(e >= 1, Err::PreconditionFailed, "pow exponent");
  auto r = x;
  for (int i = 1; i < e; ++i) r = mul(r, x);
  return r;
}

Matrix FDAlgebra::left_mult_matrix(const std::vector<Scalar>& x) const {
  const Field& F = *field_;
  Matrix m(field_.get(), n_, n_);
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      if (F.is_zero(x[static_cast<size_t>(i)])) continue;
      for (const Term& t : tab_[static_cast<size_t>(i) * n_ + j])
        m.at(t.k, j) = F.add(m.at(t.k, j), F.mul(x[static_cast<size_t>(i)], t.coeff));
    }
  }
  return m;
}

Matrix FDAlgebra::right_mult_matrix(const std::vector<Scalar>& x) const {
  const Field& F = *field_;
  Matrix m(field_.get(), n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (F.is_zero(x[static_cast<size_t>(j)])) continue;
      for (const Term& t : tab_[static_cast<size_t>(i) * n_ + j])
        m.at(t.k, i) = F.add(m.at(t.k, i), F.mul(x[static_cast<size_t>(j)], t.coeff));
    }
  }
  return m;
}

std::vector<std::vector<Scalar>> FDAlgebra::multiply_all(
    const std::vector<Scalar>& x, const std::vector<std::vector<Scalar>>& ys,
    bool x_on_left) const {
  const Field& F = *field_;
  Matrix m = x_on_left ? left_mult_matrix(x) : right_mult_matrix(x);
  std::vector<std::vector<Scalar>> out;
  out.reserve(ys.size());
  for (const auto& y : ys) {
    std::vector<Scalar> r(static_cast<size_t>(n_), F.zero());
    for (int j = 0; j < n_; ++j) {
      const Scalar& yj = y[static_cast<size_t>(j)];
      if (F.is_zero(yj)) continue;
      for (int k = 0; k < n_; ++k) {
        const Scalar& mkj = m.at(k, j);
        if (F.is_zero(mkj)) continue;
        r[static_cast<size_t>(k)] = F.add(r[static_cast<size_t>(k)], F.mul(mkj, yj));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool FDAlgebra::is_idempotent(const std::vector<Scalar>& x) const { return eq(mul(x, x), x); }

std::optional<std::vector<Scalar>> FDAlgebra::inverse(const std::vector<Scalar>& x) const {
  require(is_unital(), Err::PreconditionFailed, "inverse needs a unital algebra");
  // solve x * z = 1 and verify z * x = 1
  Matrix lx = left_mult_matrix(x);
  auto out = linalg::solve_linear(lx, identity());
  if (!out.solution) return std::nullopt;
  if (!eq(mul(*out.solution, x), identity())) return std::nullopt;
  return out.solution;
}

std::optional<std::array<int, 3>> FDAlgebra::find_nonassociative_triple() const {
  for (int i = 0; i < n_; ++i) {
    auto bi = basis_element(i);
    for (int j = 0; j < n_; ++j) {
      auto bj = basis_element(j);
      auto bij = mul(bi, bj);
      for (int k = 0; k < n_; ++k) {
        auto bk = basis_element(k);
        if (!eq(mul(bij, bk), mul(bi, mul(bj, bk)))) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

void FDAlgebra::detect_identity() {
  const Field& F = *field_;
  if (n_ == 0) {
    identity_ = std::nullopt;
    return;
  }
  // Solve the left-identity system only: when a two-sided identity
  // exists, every left identity coincides with it, so it suffices to
  // verify the right-identity property on the solution afterwards.
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) {
      std::vector<Scalar> lrow(static_cast<size_t>(n_), F.zero());
      for (int i = 0; i < n_; ++i)
        for (const Term& t : tab_[static_cast<size_t>(i) * n_ + j])
          if (t.k == k) lrow[static_cast<size_t>(i)] = F.add(lrow[static_cast<size_t>(i)], t.coeff);
      rows.push_back(std::move(lrow));
      rhs.push_back(j == k ? F.one() : F.zero());
    }
  }
  Matrix a = Matrix::from_rows(F, rows);
  auto out = linalg::solve_linear(a, rhs);
  identity_ = std::nullopt;
  if (out.solution) {
    bool right = true;
    for (int j = 0; j < n_ && right; ++j) {
      auto bj = basis_element(j);
      right = eq(mul(bj, *out.solution), bj);
    }
    if (right) identity_ = std::move(out.solution);
  }
}

FDAlgebra FDAlgebra::make_unchecked(FieldRef field, int n, Table table,
                                    std::vector<std::string> labels) {
  FDAlgebra a;
  a.field_ = std::move(field);
  a.n_ = n;
  require(static_cast<int>(table.size()) == n * n, Err::DimensionMismatch,
          "structure constant table size");
  for (auto& cell : table)
    for (auto& t : cell) {
      a.field_->check(t.coeff);
      require(t.k >= 0 && t.k < n, Err::DimensionMismatch, "structure constant index");
    }
  a.tab_ = std::move(table);
  // normalize: drop zero coefficients, merge duplicates, sort by k
  for (auto& cell : a.tab_) {
    std::sort(cell.begin(), cell.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    std::vector<Term> merged;
    for (auto& t : cell) {
      if (!merged.empty() && merged.back().k == t.k)
        merged.back().coeff = a.field_->add(merged.back().coeff, t.coeff);
      else
        merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](const Term& t) { return a.field_->is_zero(t.coeff); }),
                 merged.end());
    cell = std::move(merged);
  }
  a.labels_ = std::move(labels);
  a.detect_identity();
  return a;
}

FDAlgebra FDAlgebra::make(FieldRef field, int n, Table table, std::vector<std::string> labels) {
  FDAlgebra a = make_unchecked(std::move(field), n, std::move(table), std::move(labels));
  if (auto bad = a.find_nonassociative_triple()) {
    std::ostringstream os;
    os << "associativity fails at basis triple (" << (*bad)[0] << "," << (*bad)[1] << ","
       << (*bad)[2] << ")";
    fail(Err::NonAssociative, os.str());
  }
  return a;
}

std::vector<Scalar> QuotientPresentation::project(const std::vector<Scalar>& x) const {
  const Field& F = ambient.field();
  std::vector<Scalar> y(static_cast<size_t>(projection.rows()), F.zero());
  for (int i = 0; i < projection.rows(); ++i)
    for (int j = 0; j < projection.cols(); ++j)
      if (!F.is_zero(projection.at(i, j)))
        y[static_cast<size_t>(i)] =
            F.add(y[static_cast<size_t>(i)], F.mul(projection.at(i, j), x[static_cast<size_t>(j)]));
  return y;
}

std::vector<Scalar> QuotientPresentation::lift(const std::vector<Scalar>& y) const {
  const Field& F = ambient.field();
  std::vector<Scalar> x(static_cast<size_t>(section.rows()), F.zero());
  for (int i = 0; i < section.rows(); ++i)
    for (int j = 0; j < section.cols(); ++j)
      if (!F.is_zero(section.at(i, j)))
        x[static_cast<size_t>(i)] =
            F.add(x[static_cast<size_t>(i)], F.mul(section.at(i, j), y[static_cast<size_t>(j)]));
  return x;
}

const char* alg_class_name(AlgClass c) {
  switch (c) {
    case AlgClass::Matricial: return "matricial";
    case AlgClass::Fdss: return "fdss";
    case AlgClass::UnitRegular: return "unit-regular";
    case AlgClass::Regular: return "regular";
    case AlgClass::None: return "none";
  }
  return "none";
}

AlgClass alg_class_from_name(const std::string& s) {
  if (s == "matricial") return AlgClass::Matricial;
  if (s == "fdss") return AlgClass::Fdss;
  if (s == "unit-regular") return AlgClass::UnitRegular;
  if (s == "regular") return AlgClass::Regular;
  if (s == "none") return AlgClass::None;
  fail(Err::ParseError, "unknown class label: " + s);
}

std::vector<Scalar> CornerAlgebra::restrict_element(const FDAlgebra& ambient,
                                                    const std::vector<Scalar>& x) const {
  auto exe = ambient.mul(idem, ambient.mul(x, idem));
  auto coords = linalg::coordinates_in(space, exe);
  require(coords.has_value(), Err::Internal, "corner restriction failed");
  return *coords;
}

std::vector<Scalar> CornerAlgebra::embed_element(const std::vector<Scalar>& xc) const {
  const Field& F = alg.field();
  std::vector<Scalar> x(static_cast<size_t>(embed.cols()), F.zero());
  for (int i = 0; i < embed.rows(); ++i)
    for (int j = 0; j < embed.cols(); ++j)
      if (!F.is_zero(embed.at(i, j)))
        x[static_cast<size_t>(j)] =
            F.add(x[static_cast<size_t>(j)], F.mul(xc[static_cast<size_t>(i)], embed.at(i, j)));
  return x;
}

namespace algcore {

FDAlgebra algebra_from_structure_constants(FieldRef field, int n, FDAlgebra::Table table,
                                           std::vector<std::string> labels) {
  return FDAlgebra::make(std::move(field), n, std::move(table), std::move(labels));
}

FDAlgebra matrix_algebra(FieldRef field, int n) {
  require(n >= 1, Err::UnsupportedParameters, "matrix_algebra needs n >= 1");
  const Field& F = *field;
  int dim = n * n;
  FDAlgebra::Table tab(static_cast<size_t>(dim) * dim);
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k)
            tab[static_cast<size_t>(idx(i, j)) * dim + idx(k, l)].push_back(
                {idx(i, l), F.one()});
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  return FDAlgebra::make_unchecked(std::move(field), dim, std::move(tab), std::move(labels));
}

FDAlgebra direct_sum(const std::vector<FDAlgebra>& parts) {
  require(!parts.empty(), Err::UnsupportedParameters, "direct_sum of nothing");
  FieldRef field = parts[0].field_ref();
  for (const auto& a : parts)
    require(a.field_ref().get() == field.get(), Err::FieldMismatch, "direct_sum fields differ");
  int n = 0;
  for (const auto& a : parts) n += a.dim();
  FDAlgebra::Table tab(static_cast<size_t>(n) * n);
  std::vector<std::string> labels;
  int off = 0;
  int part_index = 0;
  for (const auto& a : parts) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (const auto& t : a.table()[static_cast<size_t>(i) * a.dim() + j])
          tab[static_cast<size_t>(off + i) * n + (off + j)].push_back({off + t.k, t.coeff});
    for (int i = 0; i < a.dim(); ++i) {
      std::string l = (i < static_cast<int>(a.labels().size())) ? a.labels()[static_cast<size_t>(i)]
                                                                : ("b" + std::to_string(i + 1));
      labels.push_back("s" + std::to_string(part_index + 1) + "." + l);
    }
    off += a.dim();
    ++part_index;
  }
  return FDAlgebra::make_unchecked(std::move(field), n, std::move(tab), std::move(labels));
}

FDAlgebra opposite(const FDAlgebra& a) {
  int n = a.dim();
  FDAlgebra::Table tab(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tab[static_cast<size_t>(i) * n + j] = a.table()[static_cast<size_t>(j) * n + i];
  return FDAlgebra::make_unchecked(a.field_ref(), n, std::move(tab), a.labels());
}

FDAlgebra tensor_product(const FDAlgebra& a, const FDAlgebra& b) {
  require(a.field_ref().get() == b.field_ref().get(), Err::FieldMismatch, "tensor fields differ");
  const Field& F = a.field();
  int na = a.dim(), nb = b.dim();
  int n = na * nb;
  FDAlgebra::Table tab(static_cast<size_t>(n) * n);
  // basis (i,j) -> i*nb + j ; (x (x) y)(x' (x) y') = xx' (x) yy'
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          auto& cell = tab[static_cast<size_t>(i * nb + j) * n + (k * nb + l)];
          for (const auto& ta : a.table()[static_cast<size_t>(i) * na + k])
            for (const auto& tb : b.table()[static_cast<size_t>(j) * nb + l])
              cell.push_back({ta.k * nb + tb.k, F.mul(ta.coeff, tb.coeff)});
        }
  return FDAlgebra::make_unchecked(a.field_ref(), n, std::move(tab));
}

FDAlgebra adjoin_identity(const FDAlgebra& a) {
  const Field& F = a.field();
  int n = a.dim();
  int m = n + 1;  // basis: u (adjoined identity), then the old basis
  FDAlgebra::Table tab(static_cast<size_t>(m) * m);
  tab[0].push_back({0, F.one()});  // u*u = u
  for (int i = 0; i < n; ++i) {
    tab[static_cast<size_t>(0) * m + (i + 1)].push_back({i + 1, F.one()});
    tab[static_cast<size_t>(i + 1) * m + 0].push_back({i + 1, F.one()});
    for (int j = 0; j < n; ++j)
      for (const auto& t : a.table()[static_cast<size_t>(i) * n + j])
        tab[static_cast<size_t>(i + 1) * m + (j + 1)].push_back({t.k + 1, t.coeff});
  }
  std::vector<std::string> labels{"1"};
  for (int i = 0; i < n; ++i)
    labels.push_back(i < static_cast<int>(a.labels().size()) ? a.labels()[static_cast<size_t>(i)]
                                                             : ("b" + std::to_string(i + 1)));
  return FDAlgebra::make_unchecked(a.field_ref(), m, std::move(tab), std::move(labels));
}

linalg::SubspaceBasis generated_subalgebra(const FDAlgebra& a,
                                           const std::vector<std::vector<Scalar>>& gens) {
  const Field& F = a.field();
  if (gens.empty()) return linalg::subspace_zero(F, a.dim());
  std::vector<std::vector<Scalar>> rows = gens;
  linalg::SubspaceBasis s = linalg::subspace_from_rows(Matrix::from_rows(F, rows));
  for (int iter = 0; iter <= a.dim(); ++iter) {
    std::vector<std::vector<Scalar>> next;
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        next.push_back(a.mul(s.basis.row(i), s.basis.row(j)));
    if (next.empty()) break;
    linalg::SubspaceBasis s2 = linalg::sum(
        s, linalg::subspace_from_rows(Matrix::from_rows(F, next)));
    if (s2.dim() == s.dim()) break;
    s = std::move(s2);
  }
  return s;
}

linalg::SubspaceBasis generated_ideal(const FDAlgebra& a,
                                      const std::vector<std::vector<Scalar>>& gens) {
  const Field& F = a.field();
  if (gens.empty()) {
    auto z = linalg::subspace_zero(F, a.dim());
    z.is_ideal = true;
    return z;
  }
  linalg::SubspaceBasis s = linalg::subspace_from_rows(Matrix::from_rows(F, gens));
  for (int iter = 0; iter <= 2 * a.dim(); ++iter) {
    std::vector<std::vector<Scalar>> next;
    for (int i = 0; i < s.dim(); ++i) {
      auto v = s.basis.row(i);
      for (int b = 0; b < a.dim(); ++b) {
        auto bb = a.basis_element(b);
        next.push_back(a.mul(bb, v));
        next.push_back(a.mul(v, bb));
      }
    }
    if (next.empty()) break;
    linalg::SubspaceBasis s2 = linalg::sum(
        s, linalg::subspace_from_rows(Matrix::from_rows(F, next)));
    if (s2.dim() == s.dim()) break;
    s = std::move(s2);
  }
  s.is_ideal = true;
  return s;
}

CornerAlgebra corner(const FDAlgebra& a, const std::vector<Scalar>& e) {
  const Field& F = a.field();
  require(a.is_idempotent(e), Err::NotIdempotent, "corner needs e^2 = e");
  // basis of eAe from {e b_i e}
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.mul(e, a.mul(a.basis_element(i), e)));
  CornerAlgebra c;
  c.space = linalg::subspace_from_rows(Matrix::from_rows(F, rows));
  int d = c.space.dim();
  c.embed = c.space.basis;
  c.idem = e;
  FDAlgebra::Table tab(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto prod = a.mul(c.space.basis.row(i), c.space.basis.row(j));
      auto coords = linalg::coordinates_in(c.space, prod);
      require(coords.has_value(), Err::Internal, "corner not closed");
      for (int k = 0; k < d; ++k)
        if (!F.is_zero((*coords)[static_cast<size_t>(k)]))
          tab[static_cast<size_t>(i) * d + j].push_back({k, (*coords)[static_cast<size_t>(k)]});
    }
  }
  c.alg = FDAlgebra::make_unchecked(a.field_ref(), d, std::move(tab));
  return c;
}

QuotientPresentation quotient(const FDAlgebra& a, const linalg::SubspaceBasis& j) {
  const Field& F = a.field();
  require(j.ambient == a.dim(), Err::DimensionMismatch, "ideal ambient");
  // verify two-sided ideal
  for (int i = 0; i < j.dim(); ++i) {
    auto v = j.basis.row(i);
    for (int b = 0; b < a.dim(); ++b) {
      auto bb = a.basis_element(b);
      if (!linalg::contains(j, a.mul(bb, v)) || !linalg::contains(j, a.mul(v, bb)))
        fail(Err::NotIdeal, "subspace is not an ideal (violating product at basis " +
                                std::to_string(b) + ")");
    }
  }
  QuotientPresentation q;
  q.ambient = a;
  q.ideal = j;
  q.ideal.is_ideal = true;
  // section: standard vectors at non-pivot columns of J
  linalg::SubspaceBasis comp = linalg::complement(j);
  int qd = comp.dim();
  // projection: write x = j-part + sum c_i w_i; pi(x) = (c_i)
  // Solve via the combined basis matrix [J; W] (rows) once.
  Matrix basis = j.dim() == 0 ? comp.basis : linalg::vstack(j.basis, comp.basis);
  auto inv = linalg::inverse(linalg::transpose(basis));
  require(inv.has_value(), Err::Internal, "J + complement not full");
  // coordinates of x (column) in the row basis: c = (basis^T)^{-1} x; the
  // last qd entries are the W coordinates
  q.projection = Matrix(a.field_ref().get(), qd, a.dim());
  for (int i = 0; i < qd; ++i)
    for (int col = 0; col < a.dim(); ++col)
      q.projection.at(i, col) = inv->at(j.dim() + i, col);
  q.section = linalg::transpose(comp.basis);
  // quotient structure constants: w_i w_j mod J
  FDAlgebra::Table tab(static_cast<size_t>(qd) * qd);
  for (int i = 0; i < qd; ++i) {
    for (int jj = 0; jj < qd; ++jj) {
      auto prod = a.mul(comp.basis.row(i), comp.basis.row(jj));
      auto coords = q.project(prod);
      for (int k = 0; k < qd; ++k)
        if (!F.is_zero(coords[static_cast<size_t>(k)]))
          tab[static_cast<size_t>(i) * qd + jj].push_back({k, coords[static_cast<size_t>(k)]});
    }
  }
  q.quotient = FDAlgebra::make_unchecked(a.field_ref(), qd, std::move(tab));
  return q;
}

std::vector<Scalar> algcore::Subalgebra::restrict_element(const FDAlgebra& ambient,
                                                          const std::vector<Scalar>& x) const {
  (void)ambient;
  auto coords = linalg::coordinates_in(space, x);
  require(coords.has_value(), Err::PreconditionFailed, "element not in subalgebra");
  return *coords;
}

std::vector<Scalar> algcore::Subalgebra::embed_element(const std::vector<Scalar>& xs) const {
  const Field& F = alg.field();
  std::vector<Scalar> x(static_cast<size_t>(embed.cols()), F.zero());
  for (int i = 0; i < embed.rows(); ++i)
    for (int j = 0; j < embed.cols(); ++j)
      if (!F.is_zero(embed.at(i, j)))
        x[static_cast<size_t>(j)] =
            F.add(x[static_cast<size_t>(j)], F.mul(xs[static_cast<size_t>(i)], embed.at(i, j)));
  return x;
}

Subalgebra subalgebra_on(const FDAlgebra& a, const linalg::SubspaceBasis& s) {
  const Field& F = a.field();
  require(s.ambient == a.dim(), Err::DimensionMismatch, "subalgebra ambient");
  Subalgebra out;
  out.space = s;
  out.embed = s.basis;
  int d = s.dim();
  FDAlgebra::Table tab(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto prod = a.mul(s.basis.row(i), s.basis.row(j));
      auto coords = linalg::coordinates_in(s, prod);
      require(coords.has_value(), Err::NotASubalgebra, "subspace not closed under products");
      for (int k = 0; k < d; ++k)
        if (!F.is_zero((*coords)[static_cast<size_t>(k)]))
          tab[static_cast<size_t>(i) * d + j].push_back({k, (*coords)[static_cast<size_t>(k)]});
    }
  }
  out.alg = FDAlgebra::make_unchecked(a.field_ref(), d, std::move(tab));
  return out;
}

bool is_multiplicatively_closed(const FDAlgebra& a, const linalg::SubspaceBasis& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      if (!linalg::contains(s, a.mul(s.basis.row(i), s.basis.row(j)))) return false;
  return true;
}

bool is_ideal(const FDAlgebra& a, const linalg::SubspaceBasis& s) {
  for (int i = 0; i < s.dim(); ++i) {
    auto v = s.basis.row(i);
    for (int b = 0; b < a.dim(); ++b) {
      auto bb = a.basis_element(b);
      if (!linalg::contains(s, a.mul(bb, v))) return false;
      if (!linalg::contains(s, a.mul(v, bb))) return false;
    }
  }
  return true;
}

}  // namespace algcore
}  // namespace exalg
