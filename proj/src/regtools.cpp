#include "exalg/regtools.hpp"

#include <set>

namespace exalg {
namespace regtools {

std::vector<Scalar> quasi_inverse(const FDAlgebra& a, const std::vector<Scalar>& x) {
  const Field& F = a.field();
  if (a.is_zero_element(x)) return a.zero_element();
  // x z x = x is linear in z: (R_x L_x) z = x
  Matrix m = linalg::mul(a.right_mult_matrix(x), a.left_mult_matrix(x));
  auto out = linalg::solve_linear(m, x);
  require(out.solution.has_value(), Err::NotRegularElement,
          "the linear system xzx = x is infeasible");
  auto z = *out.solution;
  auto y = a.mul(z, a.mul(x, z));  // reflexive normalization
  require(a.eq(a.mul(x, a.mul(y, x)), x), Err::Internal, "quasi-inverse postcondition xyx");
  require(a.eq(a.mul(y, a.mul(x, y)), y), Err::Internal, "quasi-inverse postcondition yxy");
  return y;
}

namespace {

linalg::SubspaceBasis right_ideal_span(const FDAlgebra& a,
                                       const std::vector<std::vector<Scalar>>& gens) {
  const Field& F = a.field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    rows.push_back(g);
    for (int j = 0; j < a.dim(); ++j) rows.push_back(a.mul(g, a.basis_element(j)));
  }
  if (rows.empty()) return linalg::subspace_zero(F, a.dim());
  return linalg::subspace_from_rows(Matrix::from_rows(F, rows));
}

linalg::SubspaceBasis left_ideal_span(const FDAlgebra& a,
                                      const std::vector<std::vector<Scalar>>& gens) {
  const Field& F = a.field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    rows.push_back(g);
    for (int j = 0; j < a.dim(); ++j) rows.push_back(a.mul(a.basis_element(j), g));
  }
  if (rows.empty()) return linalg::subspace_zero(F, a.dim());
  return linalg::subspace_from_rows(Matrix::from_rows(F, rows));
}

// f in W with f * w = w (side = right) or w * f = w (side = left) for all
// basis vectors w of W
std::vector<Scalar> one_sided_identity(const FDAlgebra& a, const linalg::SubspaceBasis& w,
                                       bool left_acting) {
  const Field& F = a.field();
  int d = w.dim();
  if (d == 0) return a.zero_element();
  std::vector<std::vector<Scalar>> sys;
  std::vector<Scalar> rhs;
  for (int r = 0; r < d; ++r) {
    auto wr = w.basis.row(r);
    for (int k = 0; k < a.dim(); ++k) {
      std::vector<Scalar> row(static_cast<size_t>(d), F.zero());
      for (int t = 0; t < d; ++t) {
        auto prod = left_acting ? a.mul(w.basis.row(t), wr) : a.mul(wr, w.basis.row(t));
        row[static_cast<size_t>(t)] = prod[static_cast<size_t>(k)];
      }
      sys.push_back(std::move(row));
      rhs.push_back(wr[static_cast<size_t>(k)]);
    }
  }
  auto out = linalg::solve_linear(Matrix::from_rows(F, sys), rhs);
  require(out.solution.has_value(), Err::InfeasibleSystem,
          "no one-sided identity on the generated ideal (ambient not regular at this scale)");
  auto f = a.zero_element();
  for (int t = 0; t < d; ++t)
    f = a.add(f, a.scale(w.basis.row(t), (*out.solution)[static_cast<size_t>(t)]));
  require(a.is_idempotent(f), Err::Internal, "one-sided generator is not idempotent");
  return f;
}

}  // namespace

std::vector<Scalar> idempotent_right_generator(const FDAlgebra& a,
                                               const std::vector<std::vector<Scalar>>& gens) {
  auto w = right_ideal_span(a, gens);
  auto f = one_sided_identity(a, w, /*left_acting=*/true);
  // f * w = w for all w, f in W, hence W = fA
  for (int r = 0; r < w.dim(); ++r)
    require(a.eq(a.mul(f, w.basis.row(r)), w.basis.row(r)), Err::Internal,
            "right generator postcondition");
  return f;
}

std::vector<Scalar> idempotent_left_generator(const FDAlgebra& a,
                                              const std::vector<std::vector<Scalar>>& gens) {
  auto w = left_ideal_span(a, gens);
  auto g = one_sided_identity(a, w, /*left_acting=*/false);
  for (int r = 0; r < w.dim(); ++r)
    require(a.eq(a.mul(w.basis.row(r), g), w.basis.row(r)), Err::Internal,
            "left generator postcondition");
  return g;
}

std::vector<Scalar> corner_capture(const FDAlgebra& a,
                                   const std::vector<std::vector<Scalar>>& xs) {
  if (xs.empty()) return a.zero_element();
  auto f = idempotent_right_generator(a, xs);
  auto with_f = xs;
  with_f.push_back(f);
  auto g = idempotent_left_generator(a, with_f);
  // e = f + g - gf
  auto gf = a.mul(g, f);
  auto e = a.sub(a.add(f, g), gf);
  require(a.is_idempotent(e), Err::Internal, "corner capture idempotent");
  for (const auto& x : xs) {
    require(a.eq(a.mul(e, x), x), Err::Internal, "corner capture ex = x");
    require(a.eq(a.mul(x, e), x), Err::Internal, "corner capture xe = x");
  }
  return e;
}

namespace {

// f is the left half of a rank factorization: for the RREF R = T*X with
// pivots p_1..p_r, D clears the non-pivot columns and permutes pivots to
// the front, so that R*D = [[I_r,0],[0,0]] and X = T^{-1} [[I_r,0],[0,0]] D^{-1}.
Matrix column_reducer(const Matrix& rrefm, const std::vector<int>& pivots) {
  const Field& F = rrefm.field();
  int n = rrefm.cols();
  int r = static_cast<int>(pivots.size());
  Matrix c = Matrix::identity(F, n);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  // clear non-pivot columns
  for (int j = 0; j < n; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    for (int i = 0; i < r; ++i) {
      Scalar v = rrefm.at(i, j);
      if (F.is_zero(v)) continue;
      c.at(pivots[static_cast<size_t>(i)], j) = F.neg(v);
    }
  }
  // permutation moving pivot column p_i into position i
  Matrix perm(&F, n, n);
  std::vector<int> order;
  for (int p : pivots) order.push_back(p);
  for (int j = 0; j < n; ++j)
    if (!is_pivot[static_cast<size_t>(j)]) order.push_back(j);
  for (int i = 0; i < n; ++i) perm.at(order[static_cast<size_t>(i)], i) = F.one();
  return linalg::mul(c, perm);
}

}  // namespace

RegularityWitness unit_regular_witness(const FDAlgebra& a, const std::vector<Scalar>& x,
                                       const MatrixUnitsSystem* units) {
  const Field& F = a.field();
  MatricialResult local;
  if (units == nullptr) {
    local = structure::is_matricial(a);
    require(local.matricial, Err::NotMatricial, "unit_regular_witness needs a matricial algebra");
    units = &*local.units;
  }
  // coordinates of x in the matrix-unit basis
  std::vector<std::vector<Scalar>> unit_rows;
  for (size_t s = 0; s < units->units.size(); ++s)
    for (const auto& row : units->units[s])
      for (const auto& u : row) unit_rows.push_back(u);
  Matrix ub = Matrix::from_rows(F, unit_rows);
  auto coords = linalg::solve_linear(linalg::transpose(ub), x);
  require(coords.solution.has_value(), Err::Internal, "element not in the unit span");
  RegularityWitness wit;
  wit.x = x;
  auto u_total = a.zero_element();
  auto uinv_total = a.zero_element();
  size_t off = 0;
  for (size_t s = 0; s < units->units.size(); ++s) {
    int n = units->sizes[s];
    Matrix xs(&F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        xs.at(i, j) = (*coords.solution)[off + static_cast<size_t>(i * n + j)];
    linalg::RrefResult rr = linalg::rref(xs);
    Matrix d = column_reducer(rr.R, rr.pivots);
    // u_s = D * T ; u_s^{-1} = T^{-1} D^{-1}
    Matrix us = linalg::mul(d, rr.T);
    auto dinv = linalg::inverse(d);
    auto tinv = linalg::inverse(rr.T);
    Matrix usinv = linalg::mul(*tinv, *dinv);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& eij = units->units[s][static_cast<size_t>(i)][static_cast<size_t>(j)];
        u_total = a.add(u_total, a.scale(eij, us.at(i, j)));
        uinv_total = a.add(uinv_total, a.scale(eij, usinv.at(i, j)));
      }
    off += static_cast<size_t>(n) * static_cast<size_t>(n);
  }
  require(a.is_unital(), Err::NotMatricial, "matricial algebra must be unital");
  require(a.eq(a.mul(u_total, uinv_total), a.identity()), Err::Internal, "u u^{-1} = 1");
  require(a.eq(a.mul(uinv_total, u_total), a.identity()), Err::Internal, "u^{-1} u = 1");
  require(a.eq(a.mul(x, a.mul(u_total, x)), x), Err::Internal, "xux = x");
  wit.unit = u_total;
  wit.unit_inv = uinv_total;
  wit.y = a.mul(u_total, a.mul(x, u_total));  // quasi-inverse uxu
  require(a.eq(a.mul(x, a.mul(wit.y, x)), x), Err::Internal, "xyx = x");
  require(a.eq(a.mul(wit.y, a.mul(x, wit.y)), wit.y), Err::Internal, "yxy = y");
  return wit;
}

EmbeddedWitness embed_unit_regular_witness(const Matrix& x, const Matrix& y) {
  const Field& F = x.field();
  int n = x.rows();
  require(x.cols() == n && y.rows() == n && y.cols() == n, Err::DimensionMismatch,
          "embed_unit_regular_witness needs square matrices of equal size");
  Matrix xyx = linalg::mul(x, linalg::mul(y, x));
  require(xyx == x, Err::PreconditionFailed, "xyx != x");
  EmbeddedWitness w;
  w.e = Matrix::identity(F, 2 * n);
  w.u = Matrix(&F, 2 * n, 2 * n);
  w.u_inv = Matrix(&F, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w.u.at(i, j) = y.at(i, j);
      w.u_inv.at(n + i, n + j) = F.neg(y.at(i, j));
    }
    w.u.at(i, n + i) = F.one();
    w.u.at(n + i, i) = F.one();
    w.u_inv.at(i, n + i) = F.one();
    w.u_inv.at(n + i, i) = F.one();
  }
  require(linalg::mul(w.u, w.u_inv) == w.e, Err::Internal, "u u_inv = I");
  require(linalg::mul(w.u_inv, w.u) == w.e, Err::Internal, "u_inv u = I");
  // xhat u xhat = xhat
  Matrix xhat(&F, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) xhat.at(i, j) = x.at(i, j);
  require(linalg::mul(xhat, linalg::mul(w.u, xhat)) == xhat, Err::Internal, "xhat u xhat");
  return w;
}

std::vector<Scalar> lift_unit_through_splitting(const QuotientPresentation& q,
                                                const linalg::SubspaceBasis& t,
                                                const std::vector<Scalar>& u_bar) {
  const FDAlgebra& r = q.ambient;
  const Field& F = r.field();
  require(r.is_unital(), Err::PreconditionFailed, "ambient must be unital");
  // pi restricted to T must be an isomorphism onto R/J
  require(t.dim() == q.quotient.dim(), Err::NotASplitting, "dim T != dim R/J");
  Matrix pi_t(&F, t.dim(), q.quotient.dim());
  for (int i = 0; i < t.dim(); ++i) {
    auto img = q.project(t.basis.row(i));
    for (int j = 0; j < q.quotient.dim(); ++j) pi_t.at(i, j) = img[static_cast<size_t>(j)];
  }
  auto pinv = linalg::inverse(linalg::transpose(pi_t));
  require(pinv.has_value(), Err::NotASplitting, "pi restricted to T is not bijective");
  // T must be multiplicatively closed with its own identity
  require(algcore::is_multiplicatively_closed(r, t), Err::NotASplitting, "T is not a subalgebra");
  algcore::Subalgebra tsub = algcore::subalgebra_on(r, t);
  require(tsub.alg.is_unital(), Err::NotASplitting, "T has no identity");
  auto one_t = tsub.embed_element(tsub.alg.identity());
  // u_bar invertible in R/J
  auto ubar_inv = q.quotient.inverse(u_bar);
  require(ubar_inv.has_value(), Err::NotAUnit, "u_bar is not a unit of R/J");
  // v in T with pi(v) = u_bar: coefficients (pi_t^T)^{-1} u_bar
  auto lift_through_t = [&](const std::vector<Scalar>& target) {
    std::vector<Scalar> c(static_cast<size_t>(t.dim()), F.zero());
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < q.quotient.dim(); ++j)
        c[static_cast<size_t>(i)] =
            F.add(c[static_cast<size_t>(i)], F.mul(pinv->at(i, j), target[static_cast<size_t>(j)]));
    auto v = r.zero_element();
    for (int i = 0; i < t.dim(); ++i) v = r.add(v, r.scale(t.basis.row(i), c[static_cast<size_t>(i)]));
    return v;
  };
  auto v = lift_through_t(u_bar);
  auto v_inv = lift_through_t(*ubar_inv);
  // w = v + 1_R - 1_T, with explicit inverse v_inv + 1_R - 1_T
  auto corr = r.sub(r.identity(), one_t);
  auto w = r.add(v, corr);
  auto w_inv = r.add(v_inv, corr);
  // v and v_inv are mutually inverse in T up to a J-correction absorbed by
  // the quotient isomorphism; verify the algebra identities exactly
  if (!r.eq(r.mul(w, w_inv), r.identity()) || !r.eq(r.mul(w_inv, w), r.identity())) {
    // v v_inv may differ from 1_T when pi|_T is an isomorphism of algebras
    // only after reduction; recompute v_inv inside T
    algcore::Subalgebra ts = algcore::subalgebra_on(r, t);
    auto v_in_t = ts.restrict_element(r, v);
    auto inv_in_t = ts.alg.inverse(v_in_t);
    require(inv_in_t.has_value(), Err::NotAUnit, "lift of u_bar is not invertible in T");
    w_inv = r.add(ts.embed_element(*inv_in_t), corr);
    require(r.eq(r.mul(w, w_inv), r.identity()), Err::Internal, "w w^{-1} = 1");
    require(r.eq(r.mul(w_inv, w), r.identity()), Err::Internal, "w^{-1} w = 1");
  }
  require(q.quotient.eq(q.project(w), u_bar), Err::Internal, "pi(w) = u_bar");
  return w;
}

UnitLiftReport units_lift_exhaustively(const FDAlgebra& r, const linalg::SubspaceBasis& j,
                                       const std::vector<Scalar>& e) {
  const Field& F = r.field();
  require(F.is_finite(), Err::UnsupportedParameters, "exhaustive lifting needs a finite field");
  require(r.is_idempotent(e), Err::NotIdempotent, "corner element must be idempotent");
  CornerAlgebra c = algcore::corner(r, e);
  uint64_t q = F.size();
  double total = 1;
  for (int i = 0; i < c.alg.dim(); ++i) {
    total *= static_cast<double>(q);
    require(total <= 531441.0, Err::UnsupportedParameters, "corner larger than 3^12 elements");
  }
  // eJe inside the corner
  std::vector<std::vector<Scalar>> jrows;
  for (int i = 0; i < j.dim(); ++i) {
    auto w = r.mul(e, r.mul(j.basis.row(i), e));
    auto coords = linalg::coordinates_in(c.space, w);
    require(coords.has_value(), Err::Internal, "eJe not inside corner");
    jrows.push_back(*coords);
  }
  linalg::SubspaceBasis cj = jrows.empty()
                                 ? linalg::subspace_zero(F, c.alg.dim())
                                 : linalg::subspace_from_rows(Matrix::from_rows(F, jrows));
  QuotientPresentation cq = algcore::quotient(c.alg, cj);
  UnitLiftReport rep;
  rep.all_lift = true;
  uint64_t count = static_cast<uint64_t>(total);
  std::set<std::string> covered;
  auto key = [&](const std::vector<Scalar>& v) {
    std::string s;
    for (const auto& x : v) s += F.to_string(x) + "|";
    return s;
  };
  for (uint64_t idx = 0; idx < count; ++idx) {
    // decode element of the corner
    std::vector<Scalar> w(static_cast<size_t>(c.alg.dim()), F.zero());
    uint64_t v = idx;
    for (int i = 0; i < c.alg.dim(); ++i) {
      w[static_cast<size_t>(i)] = F.element_at(v % q);
      v /= q;
    }
    if (c.alg.inverse(w).has_value()) covered.insert(key(cq.project(w)));
  }
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Scalar> wbar(static_cast<size_t>(cq.quotient.dim()), F.zero());
    uint64_t v = idx;
    bool in_range = true;
    for (int i = 0; i < cq.quotient.dim(); ++i) {
      wbar[static_cast<size_t>(i)] = F.element_at(v % q);
      v /= q;
    }
    if (v != 0) in_range = false;  // enumerated past the quotient size
    if (!in_range) break;
    if (!cq.quotient.inverse(wbar).has_value()) continue;
    ++rep.units_checked;
    if (!covered.count(key(wbar))) {
      rep.all_lift = false;
      rep.failing_unit = wbar;
      break;
    }
  }
  return rep;
}

}  // namespace regtools
}  // namespace exalg
