#include "exalg/extensions.hpp"

#include <algorithm>

namespace exalg {
namespace extensions {

namespace {

// split x along R = T (+) C (subspaces); returns (t_part, c_part)
std::pair<std::vector<Scalar>, std::vector<Scalar>> split_along(
    const FDAlgebra& r, const linalg::SubspaceBasis& t, const linalg::SubspaceBasis& c,
    const std::vector<Scalar>& x) {
  const Field& F = r.field();
  require(t.dim() + c.dim() == r.dim(), Err::NotAComplement, "T (+) C does not fill R");
  Matrix basis = t.dim() == 0 ? c.basis
                              : (c.dim() == 0 ? t.basis : linalg::vstack(t.basis, c.basis));
  auto inv = linalg::inverse(linalg::transpose(basis));
  require(inv.has_value(), Err::NotAComplement, "T + C is not direct");
  // coords = (basis^T)^{-1} x
  std::vector<Scalar> coords(static_cast<size_t>(r.dim()), F.zero());
  for (int i = 0; i < r.dim(); ++i)
    for (int jj = 0; jj < r.dim(); ++jj)
      coords[static_cast<size_t>(i)] =
          F.add(coords[static_cast<size_t>(i)], F.mul(inv->at(i, jj), x[static_cast<size_t>(jj)]));
  auto tp = r.zero_element();
  auto cp = r.zero_element();
  for (int i = 0; i < t.dim(); ++i) tp = r.add(tp, r.scale(t.basis.row(i), coords[static_cast<size_t>(i)]));
  for (int i = 0; i < c.dim(); ++i)
    cp = r.add(cp, r.scale(c.basis.row(i), coords[static_cast<size_t>(t.dim() + i)]));
  return {tp, cp};
}

linalg::SubspaceBasis span_rows(const Field& F, const std::vector<std::vector<Scalar>>& rows,
                                int ambient) {
  if (rows.empty()) return linalg::subspace_zero(F, ambient);
  return linalg::subspace_from_rows(Matrix::from_rows(F, rows));
}

// subspace e * S * e
linalg::SubspaceBasis corner_subspace(const FDAlgebra& r, const std::vector<Scalar>& e,
                                      const linalg::SubspaceBasis& s) {
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(r.mul(e, r.mul(s.basis.row(i), e)));
  return span_rows(r.field(), rows, r.dim());
}

std::vector<Scalar> subspace_identity(const FDAlgebra& r, const linalg::SubspaceBasis& s) {
  algcore::Subalgebra sub = algcore::subalgebra_on(r, s);
  require(sub.alg.is_unital(), Err::PreconditionFailed, "subalgebra has no identity");
  return sub.embed_element(sub.alg.identity());
}

}  // namespace

std::pair<linalg::SubspaceBasis, LiftTrace> lift_subalgebra(
    const ExtensionInstance& ext, const linalg::SubspaceBasis& a_sub,
    const std::vector<std::vector<Scalar>>* lifts) {
  const FDAlgebra& r = ext.q.ambient;
  const FDAlgebra& q = ext.q.quotient;
  const Field& F = r.field();
  require(a_sub.ambient == q.dim(), Err::DimensionMismatch, "A lives in R/J");
  // A must be multiplicatively closed in R/J
  require(algcore::is_multiplicatively_closed(q, a_sub), Err::NotASubalgebra,
          "A is not closed under multiplication");
  if (!r.is_unital()) {
    // corner reduction: capture the starting lifts in a corner eRe and
    // run the construction there (the proof's own reduction)
    std::vector<std::vector<Scalar>> start;
    for (int i = 0; i < a_sub.dim(); ++i) start.push_back(ext.q.lift(a_sub.basis.row(i)));
    if (lifts != nullptr) start = *lifts;
    auto e0 = regtools::corner_capture(r, start);
    CornerAlgebra c = algcore::corner(r, e0);
    // corner extension data
    std::vector<std::vector<Scalar>> jrows;
    for (int i = 0; i < ext.q.ideal.dim(); ++i) {
      auto w = r.mul(e0, r.mul(ext.q.ideal.basis.row(i), e0));
      auto coords = linalg::coordinates_in(c.space, w);
      require(coords.has_value(), Err::Internal, "eJe escapes the corner");
      jrows.push_back(*coords);
    }
    ExtensionInstance sub;
    sub.q = algcore::quotient(c.alg, span_rows(F, jrows, c.alg.dim()));
    sub.ideal_class = ext.ideal_class;
    sub.quotient_class = ext.quotient_class;
    // A maps into the corner quotient via pi(x) for x = e0 sigma(a) e0
    std::vector<std::vector<Scalar>> arows;
    std::vector<std::vector<Scalar>> clifts;
    for (int i = 0; i < a_sub.dim(); ++i) {
      auto xi = r.mul(e0, r.mul(start[static_cast<size_t>(i)], e0));
      auto coords = linalg::coordinates_in(c.space, xi);
      require(coords.has_value(), Err::Internal, "lift escapes the corner");
      clifts.push_back(*coords);
      arows.push_back(sub.q.project(*coords));
    }
    auto [tc, trace_c] = lift_subalgebra(sub, span_rows(F, arows, sub.q.quotient.dim()), &clifts);
    // embed everything back into R
    LiftTrace trace;
    auto embed_vec = [&](const std::vector<Scalar>& v) { return c.embed_element(v); };
    for (auto& v : trace_c.lifts) trace.lifts.push_back(embed_vec(v));
    for (auto& v : trace_c.defects) trace.defects.push_back(embed_vec(v));
    trace.f = embed_vec(trace_c.f);
    for (auto& v : trace_c.scaled_lifts) trace.scaled_lifts.push_back(embed_vec(v));
    std::vector<std::vector<Scalar>> trows;
    for (int i = 0; i < tc.dim(); ++i) trows.push_back(embed_vec(tc.basis.row(i)));
    trace.t = span_rows(F, trows, r.dim());
    std::vector<std::vector<Scalar>> vrows, wrows;
    for (int i = 0; i < trace_c.v_ideal.dim(); ++i)
      vrows.push_back(embed_vec(trace_c.v_ideal.basis.row(i)));
    for (int i = 0; i < trace_c.w_ideal.dim(); ++i)
      wrows.push_back(embed_vec(trace_c.w_ideal.basis.row(i)));
    trace.v_ideal = span_rows(F, vrows, r.dim());
    trace.w_ideal = span_rows(F, wrows, r.dim());
    return {trace.t, trace};
  }

  int m = a_sub.dim();
  LiftTrace trace;
  // structure constants of A in its RREF basis
  std::vector<std::vector<std::vector<Scalar>>> lambda(
      static_cast<size_t>(m), std::vector<std::vector<Scalar>>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int jj = 0; jj < m; ++jj) {
      auto prod = q.mul(a_sub.basis.row(i), a_sub.basis.row(jj));
      auto coords = linalg::coordinates_in(a_sub, prod);
      require(coords.has_value(), Err::NotASubalgebra, "A is not closed under multiplication");
      lambda[static_cast<size_t>(i)][static_cast<size_t>(jj)] = *coords;
    }
  // starting lifts
  for (int i = 0; i < m; ++i) {
    std::vector<Scalar> xi =
        lifts != nullptr ? (*lifts)[static_cast<size_t>(i)] : ext.q.lift(a_sub.basis.row(i));
    require(q.eq(ext.q.project(xi), a_sub.basis.row(i)), Err::PreconditionFailed,
            "supplied lift does not project onto the basis of A");
    trace.lifts.push_back(std::move(xi));
  }
  // defects v_ij
  for (int i = 0; i < m; ++i)
    for (int jj = 0; jj < m; ++jj) {
      auto v = r.mul(trace.lifts[static_cast<size_t>(i)], trace.lifts[static_cast<size_t>(jj)]);
      for (int k = 0; k < m; ++k) {
        const Scalar& lam = lambda[static_cast<size_t>(i)][static_cast<size_t>(jj)][static_cast<size_t>(k)];
        if (!F.is_zero(lam)) v = r.sub(v, r.scale(trace.lifts[static_cast<size_t>(k)], lam));
      }
      require(linalg::contains(ext.q.ideal, v), Err::Internal, "defect not in the ideal");
      trace.defects.push_back(std::move(v));
    }
  // V = sum v_ij R and W = V + sum x_i V
  std::vector<std::vector<Scalar>> vrows;
  for (const auto& v : trace.defects) {
    vrows.push_back(v);
    for (int b = 0; b < r.dim(); ++b) vrows.push_back(r.mul(v, r.basis_element(b)));
  }
  trace.v_ideal = span_rows(F, vrows, r.dim());
  std::vector<std::vector<Scalar>> wrows = vrows;
  for (const auto& xi : trace.lifts)
    for (int i = 0; i < trace.v_ideal.dim(); ++i)
      wrows.push_back(r.mul(xi, trace.v_ideal.basis.row(i)));
  trace.w_ideal = span_rows(F, wrows, r.dim());
  require(linalg::contains(ext.q.ideal, trace.w_ideal), Err::Internal, "W escapes J");
  // W = fR
  {
    std::vector<std::vector<Scalar>> wgens;
    for (int i = 0; i < trace.w_ideal.dim(); ++i) wgens.push_back(trace.w_ideal.basis.row(i));
    if (wgens.empty())
      trace.f = r.zero_element();
    else
      trace.f = regtools::idempotent_right_generator(r, wgens);
  }
  // T = span{ g x_i }, g = 1 - f
  auto g = r.sub(r.identity(), trace.f);
  std::vector<std::vector<Scalar>> trows;
  for (const auto& xi : trace.lifts) {
    auto gx = r.mul(g, xi);
    // trace invariant g x_i g = g x_i
    require(r.eq(r.mul(gx, g), gx), Err::Internal, "g x g = g x fails");
    trace.scaled_lifts.push_back(gx);
    trows.push_back(gx);
  }
  trace.t = span_rows(F, trows, r.dim());
  // postconditions: pi(T) = A, T cap J = 0, closure
  require(trace.t.dim() == m, Err::Internal, "dim T != dim A");
  require(linalg::intersect(trace.t, ext.q.ideal).dim() == 0, Err::Internal, "T cap J != 0");
  for (const auto& gx : trace.scaled_lifts)
    for (const auto& gy : trace.scaled_lifts)
      require(linalg::contains(trace.t, r.mul(gx, gy)), Err::Internal, "T not closed");
  std::vector<std::vector<Scalar>> pirows;
  for (int i = 0; i < trace.t.dim(); ++i) pirows.push_back(ext.q.project(trace.t.basis.row(i)));
  require(span_rows(F, pirows, q.dim()) == a_sub, Err::Internal, "pi(T) != A");
  return {trace.t, trace};
}

std::pair<std::vector<Scalar>, CentralizerTrace> centralizing_idempotent(
    const FDAlgebra& r, const linalg::SubspaceBasis& j, const linalg::SubspaceBasis& t,
    const std::vector<std::vector<Scalar>>& y) {
  const Field& F = r.field();
  require(r.is_unital(), Err::PreconditionFailed, "centralizing_idempotent needs unital R");
  require(t.dim() + j.dim() == r.dim() && linalg::intersect(t, j).dim() == 0,
          Err::NotAComplement, "R != T (+) J");
  for (const auto& yy : y)
    require(linalg::contains(j, yy), Err::PreconditionFailed, "Y must lie in J");
  // T matricial with certificate
  algcore::Subalgebra tsub = algcore::subalgebra_on(r, t);
  CentralizerTrace trace;
  MatrixUnitsSystem units;
  if (t.dim() > 0) {
    MatricialResult mr = structure::is_matricial(tsub.alg);
    require(mr.matricial, Err::NotMatricial, "T is not matricial: " + mr.reason);
    units = *mr.units;
    trace.p = tsub.embed_element(tsub.alg.identity());
  } else {
    trace.p = r.zero_element();
  }
  // J as an algebra in its own right
  algcore::Subalgebra jsub = algcore::subalgebra_on(r, j);
  auto restrict_j = [&](const std::vector<Scalar>& v) {
    auto coords = linalg::coordinates_in(j, v);
    require(coords.has_value(), Err::Internal, "element not in J");
    return *coords;
  };
  // f captures Y cup {1 - p} inside J
  auto one_minus_p = r.sub(r.identity(), trace.p);
  require(linalg::contains(j, one_minus_p), Err::NotAComplement, "1 - 1_T must lie in J");
  {
    std::vector<std::vector<Scalar>> captured;
    for (const auto& yy : y) captured.push_back(restrict_j(yy));
    if (!r.is_zero_element(one_minus_p)) captured.push_back(restrict_j(one_minus_p));
    trace.f = captured.empty() ? r.zero_element()
                               : jsub.embed_element(regtools::corner_capture(jsub.alg, captured));
  }
  // embed the matrix units of T into R
  int blocks = units.block_count();
  std::vector<std::vector<std::vector<std::vector<Scalar>>>> eu(static_cast<size_t>(blocks));
  for (int s = 0; s < blocks; ++s) {
    int ns = units.sizes[static_cast<size_t>(s)];
    eu[static_cast<size_t>(s)].assign(static_cast<size_t>(ns),
                                      std::vector<std::vector<Scalar>>(static_cast<size_t>(ns)));
    for (int i = 0; i < ns; ++i)
      for (int jj = 0; jj < ns; ++jj)
        eu[static_cast<size_t>(s)][static_cast<size_t>(i)][static_cast<size_t>(jj)] =
            tsub.embed_element(units.units[static_cast<size_t>(s)][static_cast<size_t>(i)][static_cast<size_t>(jj)]);
  }
  // blockwise conjugated capture idempotents
  auto q_total = r.zero_element();
  for (int s = 0; s < blocks; ++s) {
    int ns = units.sizes[static_cast<size_t>(s)];
    const auto& e11 = eu[static_cast<size_t>(s)][0][0];
    // quasi-inverses u^(rs)_ij for z = e^(s)_1i f e^(r)_j1, adjusted into
    // e^(r)_11 J e^(s)_11
    std::vector<std::vector<Scalar>> gset;
    for (int rblk = 0; rblk < blocks; ++rblk) {
      int nr = units.sizes[static_cast<size_t>(rblk)];
      for (int i = 0; i < ns; ++i) {
        for (int jj = 0; jj < nr; ++jj) {
          auto z = r.mul(eu[static_cast<size_t>(s)][0][static_cast<size_t>(i)],
                         r.mul(trace.f, eu[static_cast<size_t>(rblk)][static_cast<size_t>(jj)][0]));
          auto u = jsub.embed_element(regtools::quasi_inverse(jsub.alg, restrict_j(z)));
          u = r.mul(eu[static_cast<size_t>(rblk)][0][0], r.mul(u, e11));
          require(r.eq(r.mul(z, r.mul(u, z)), z), Err::Internal, "adjusted quasi-inverse");
          trace.quasi_inverses.push_back(u);
          gset.push_back(r.mul(z, u));
          gset.push_back(r.mul(u, z));
        }
      }
    }
    // g_s captures the products inside e11 J e11
    linalg::SubspaceBasis c11 = corner_subspace(r, e11, j);
    algcore::Subalgebra c11sub = algcore::subalgebra_on(r, c11);
    std::vector<std::vector<Scalar>> gset_c;
    for (auto& z : gset) {
      auto coords = linalg::coordinates_in(c11, z);
      require(coords.has_value(), Err::Internal, "capture set escapes e11 J e11");
      gset_c.push_back(*coords);
    }
    auto gs = gset_c.empty() ? r.zero_element()
                             : c11sub.embed_element(regtools::corner_capture(c11sub.alg, gset_c));
    trace.block_idempotents.push_back(gs);
    // q_s = sum_i e^(s)_i1 g_s e^(s)_1i
    auto qs = r.zero_element();
    for (int i = 0; i < ns; ++i)
      qs = r.add(qs, r.mul(eu[static_cast<size_t>(s)][static_cast<size_t>(i)][0],
                           r.mul(gs, eu[static_cast<size_t>(s)][0][static_cast<size_t>(i)])));
    require(r.is_idempotent(qs), Err::Internal, "q_s idempotent");
    trace.conjugated.push_back(qs);
    q_total = r.add(q_total, qs);
  }
  trace.q = q_total;
  require(r.is_idempotent(trace.q), Err::Internal, "q idempotent");
  // e = q + 1 - p
  trace.e = r.add(trace.q, one_minus_p);
  require(r.is_idempotent(trace.e), Err::NotIdempotent, "e idempotent");
  require(linalg::contains(j, trace.e), Err::Internal, "e in J");
  // p f p in qJq
  {
    auto pfp = r.mul(trace.p, r.mul(trace.f, trace.p));
    linalg::SubspaceBasis qjq = corner_subspace(r, trace.q, j);
    require(linalg::contains(qjq, pfp), Err::Internal, "p f p in qJq");
  }
  // postconditions
  for (int i = 0; i < t.dim(); ++i) {
    auto tb = t.basis.row(i);
    require(r.eq(r.mul(trace.e, tb), r.mul(tb, trace.e)), Err::Internal, "[e, T] = 0");
  }
  for (const auto& yy : y) {
    require(r.eq(r.mul(trace.e, yy), yy), Err::Internal, "e y = y");
    require(r.eq(r.mul(yy, trace.e), yy), Err::Internal, "y e = y");
  }
  return {trace.e, trace};
}

std::pair<std::vector<Scalar>, TensorSplitTrace> t_stable_idempotent(
    const FDAlgebra& r, const linalg::SubspaceBasis& j, const linalg::SubspaceBasis& t,
    const std::vector<std::vector<Scalar>>& y) {
  const Field& F = r.field();
  require(r.is_unital(), Err::PreconditionFailed, "t_stable_idempotent needs unital R");
  algcore::Subalgebra tsub = algcore::subalgebra_on(r, t);
  require(tsub.alg.is_unital(), Err::PreconditionFailed, "T must be unital");
  for (const auto& yy : y)
    require(linalg::contains(j, yy), Err::PreconditionFailed, "Y must lie in J");
  TensorSplitTrace trace;
  // separability certificate: radical(T^op (x) T) = 0
  trace.separability_witness =
      algcore::tensor_product(algcore::opposite(tsub.alg), tsub.alg);
  require(structure::radical(trace.separability_witness).dim() == 0, Err::NotSeparable,
          "T^op (x) T has a nonzero radical (inseparable T)");
  auto p_elem = tsub.embed_element(tsub.alg.identity());
  if (!r.eq(p_elem, r.identity())) {
    // reduce to the corner pRp where 1_T matches the ambient identity:
    // capture Y and 1 - p inside J first, push the capture through the
    // corner, and correct with 1 - p afterwards
    auto one_minus_p = r.sub(r.identity(), p_elem);
    require(linalg::contains(j, one_minus_p), Err::PreconditionFailed,
            "1 - 1_T must lie in J for the corner reduction");
    algcore::Subalgebra jsub = algcore::subalgebra_on(r, j);
    std::vector<std::vector<Scalar>> captured;
    for (const auto& yy : y) {
      auto c = linalg::coordinates_in(j, yy);
      captured.push_back(*c);
    }
    {
      auto c = linalg::coordinates_in(j, one_minus_p);
      captured.push_back(*c);
    }
    auto g = jsub.embed_element(regtools::corner_capture(jsub.alg, captured));
    CornerAlgebra pc = algcore::corner(r, p_elem);
    auto restrict_p = [&](const std::vector<Scalar>& v) {
      auto c = linalg::coordinates_in(pc.space, v);
      require(c.has_value(), Err::Internal, "element escapes pRp");
      return *c;
    };
    std::vector<std::vector<Scalar>> jrows;
    for (int i = 0; i < j.dim(); ++i)
      jrows.push_back(restrict_p(r.mul(p_elem, r.mul(j.basis.row(i), p_elem))));
    linalg::SubspaceBasis jc = span_rows(F, jrows, pc.alg.dim());
    std::vector<std::vector<Scalar>> trows;
    for (int i = 0; i < t.dim(); ++i) trows.push_back(restrict_p(t.basis.row(i)));
    linalg::SubspaceBasis tc = span_rows(F, trows, pc.alg.dim());
    std::vector<std::vector<Scalar>> yc;
    auto pg = r.mul(p_elem, r.mul(g, p_elem));
    if (!r.is_zero_element(pg)) yc.push_back(restrict_p(pg));
    auto [hc, trace_c] = t_stable_idempotent(pc.alg, jc, tc, yc);
    auto e = r.add(pc.embed_element(hc), one_minus_p);
    require(r.is_idempotent(e), Err::NotIdempotent, "corrected idempotent");
    require(linalg::contains(j, e), Err::Internal, "e in J");
    for (int a = 0; a < t.dim(); ++a) {
      auto tb = t.basis.row(a);
      require(r.eq(r.mul(e, tb), r.mul(tb, e)), Err::Internal, "[e, T] = 0");
    }
    for (const auto& yy : y) {
      require(r.eq(r.mul(e, yy), yy), Err::Internal, "e y = y");
      require(r.eq(r.mul(yy, e), yy), Err::Internal, "y e = y");
    }
    // map the corner trace back for reporting
    trace.tensor_dim = trace_c.tensor_dim;
    trace.v = trace_c.v;
    trace.v_left = trace_c.v_left;
    trace.f = pc.embed_element(trace_c.f);
    trace.g = pc.embed_element(trace_c.g);
    trace.e = e;
    return {e, trace};
  }
  trace.tensor_dim = tsub.alg.dim() * r.dim();
  // V = sum_{y} T y R
  std::vector<std::vector<Scalar>> vrows;
  for (const auto& yy : y) {
    for (int a = 0; a < t.dim(); ++a) {
      auto ty = r.mul(t.basis.row(a), yy);
      for (int b = 0; b < r.dim(); ++b) vrows.push_back(r.mul(ty, r.basis_element(b)));
    }
  }
  trace.v = span_rows(F, vrows, r.dim());
  require(linalg::contains(j, trace.v), Err::Internal, "V escapes J");
  // the equivariant projection P: R -> V is right multiplication-free:
  // P = L_f for f = P(1); solve f in V, f v = v on V, [f, T] = 0
  auto solve_side = [&](const linalg::SubspaceBasis& targetV,
                        bool right_side) -> std::vector<Scalar> {
    int d = targetV.dim();
    if (d == 0) return r.zero_element();
    std::vector<std::vector<Scalar>> sys;
    std::vector<Scalar> rhs;
    // unknowns: coords c_k of f in targetV basis
    for (int vb = 0; vb < d; ++vb) {
      auto vv = targetV.basis.row(vb);
      for (int k = 0; k < r.dim(); ++k) {
        std::vector<Scalar> row(static_cast<size_t>(d), F.zero());
        for (int c = 0; c < d; ++c) {
          auto prod = right_side ? r.mul(targetV.basis.row(c), vv)
                                 : r.mul(vv, targetV.basis.row(c));
          row[static_cast<size_t>(c)] = prod[static_cast<size_t>(k)];
        }
        sys.push_back(std::move(row));
        rhs.push_back(vv[static_cast<size_t>(k)]);
      }
    }
    // commutation with T basis
    for (int a = 0; a < t.dim(); ++a) {
      auto tb = t.basis.row(a);
      for (int k = 0; k < r.dim(); ++k) {
        std::vector<Scalar> row(static_cast<size_t>(d), F.zero());
        for (int c = 0; c < d; ++c) {
          auto comm = r.sub(r.mul(targetV.basis.row(c), tb), r.mul(tb, targetV.basis.row(c)));
          row[static_cast<size_t>(c)] = comm[static_cast<size_t>(k)];
        }
        sys.push_back(std::move(row));
        rhs.push_back(F.zero());
      }
    }
    auto out = linalg::solve_linear(Matrix::from_rows(F, sys), rhs);
    require(out.solution.has_value(), Err::InfeasibleSystem,
            "equivariant projection system infeasible");
    auto f = r.zero_element();
    for (int c = 0; c < d; ++c)
      f = r.add(f, r.scale(targetV.basis.row(c), (*out.solution)[static_cast<size_t>(c)]));
    return f;
  };
  trace.f = solve_side(trace.v, /*right_side=*/true);
  require(r.is_idempotent(trace.f), Err::Internal, "f idempotent");
  // left-sided run on Y cup {f}
  std::vector<std::vector<Scalar>> vlrows;
  {
    std::vector<std::vector<Scalar>> zs = y;
    if (!r.is_zero_element(trace.f)) zs.push_back(trace.f);
    for (const auto& zz : zs) {
      for (int b = 0; b < r.dim(); ++b) {
        auto rz = r.mul(r.basis_element(b), zz);
        for (int a = 0; a < t.dim(); ++a) vlrows.push_back(r.mul(rz, t.basis.row(a)));
      }
    }
  }
  trace.v_left = span_rows(F, vlrows, r.dim());
  trace.g = solve_side(trace.v_left, /*right_side=*/false);
  require(r.is_idempotent(trace.g), Err::Internal, "g idempotent");
  // e = f + g - gf
  trace.e = r.sub(r.add(trace.f, trace.g), r.mul(trace.g, trace.f));
  require(r.is_idempotent(trace.e), Err::NotIdempotent, "e idempotent");
  require(linalg::contains(j, trace.e), Err::Internal, "e in J");
  for (int a = 0; a < t.dim(); ++a) {
    auto tb = t.basis.row(a);
    require(r.eq(r.mul(trace.e, tb), r.mul(tb, trace.e)), Err::Internal, "[e, T] = 0");
  }
  for (const auto& yy : y) {
    require(r.eq(r.mul(trace.e, yy), yy), Err::Internal, "e y = y");
    require(r.eq(r.mul(yy, trace.e), yy), Err::Internal, "y e = y");
  }
  return {trace.e, trace};
}

std::variant<std::vector<Scalar>, FailureReport> condition_star_check(
    const FDAlgebra& r, const linalg::SubspaceBasis& j, const linalg::SubspaceBasis& t,
    const std::vector<std::vector<Scalar>>& y) {
  const Field& F = r.field();
  // matricial route first (cheaper), tensor route second
  algcore::Subalgebra tsub = algcore::subalgebra_on(r, t);
  bool t_matricial = false;
  if (t.dim() == 0) {
    t_matricial = true;
  } else {
    try {
      t_matricial = structure::is_matricial(tsub.alg).matricial;
    } catch (const Error&) {
      t_matricial = false;
    }
  }
  if (t_matricial) {
    auto [e, trace] = centralizing_idempotent(r, j, t, y);
    return e;
  }
  bool separable = false;
  try {
    separable = structure::is_separable(tsub.alg);
  } catch (const Error&) {
    separable = false;
  }
  if (separable) {
    auto [e, trace] = t_stable_idempotent(r, j, t, y);
    return e;
  }
  // direct linear search: e y = y = y e, [e, T] = 0, e in J; then test the
  // canonical solutions for idempotency
  FailureReport rep;
  rep.separable = false;
  int d = j.dim();
  if (d == 0) {
    rep.reason = "J = 0 and T inseparable";
    rep.linear_feasible = y.empty();
    return rep;
  }
  std::vector<std::vector<Scalar>> sys;
  std::vector<Scalar> rhs;
  auto push_rows = [&](const std::vector<Scalar>& target,
                       const std::vector<std::vector<Scalar>>& action_rows) {
    for (int k = 0; k < r.dim(); ++k) {
      std::vector<Scalar> row(static_cast<size_t>(d), F.zero());
      for (int c = 0; c < d; ++c) row[static_cast<size_t>(c)] = action_rows[static_cast<size_t>(c)][static_cast<size_t>(k)];
      sys.push_back(std::move(row));
      rhs.push_back(target[static_cast<size_t>(k)]);
    }
  };
  for (const auto& yy : y) {
    std::vector<std::vector<Scalar>> le, re;
    for (int c = 0; c < d; ++c) le.push_back(r.mul(j.basis.row(c), yy));
    push_rows(yy, le);
    for (int c = 0; c < d; ++c) re.push_back(r.mul(yy, j.basis.row(c)));
    push_rows(yy, re);
  }
  for (int a = 0; a < t.dim(); ++a) {
    auto tb = t.basis.row(a);
    std::vector<std::vector<Scalar>> comm;
    for (int c = 0; c < d; ++c)
      comm.push_back(r.sub(r.mul(j.basis.row(c), tb), r.mul(tb, j.basis.row(c))));
    push_rows(r.zero_element(), comm);
  }
  auto out = linalg::solve_linear(Matrix::from_rows(F, sys), rhs);
  if (!out.solution) {
    rep.linear_feasible = false;
    rep.reason = "linear capture system infeasible";
    rep.infeasibility_certificate = out.infeasible->certificate;
    return rep;
  }
  rep.linear_feasible = true;
  auto mk = [&](const std::vector<Scalar>& coords) {
    auto e = r.zero_element();
    for (int c = 0; c < d; ++c) e = r.add(e, r.scale(j.basis.row(c), coords[static_cast<size_t>(c)]));
    return e;
  };
  auto e0 = mk(*out.solution);
  if (r.is_idempotent(e0)) return e0;
  rep.reason = "linear solutions exist but no idempotent was certified";
  return rep;
}

std::pair<linalg::SubspaceBasis, MatrixUnitsSystem> matricial_envelope(
    const ExtensionInstance& ext, const std::vector<std::vector<Scalar>>& x) {
  const FDAlgebra& r = ext.q.ambient;
  const Field& F = r.field();
  require(ext.ideal_class == AlgClass::Matricial && ext.quotient_class == AlgClass::Matricial,
          Err::CertificateMissing, "matricial envelope needs matricial certificates");
  if (x.empty()) return {linalg::subspace_zero(F, r.dim()), MatrixUnitsSystem{}};
  // re-verify certificates
  {
    algcore::Subalgebra jsub = algcore::subalgebra_on(r, ext.q.ideal);
    require(structure::is_matricial(jsub.alg).matricial, Err::CertificateMissing,
            "ideal certificate fails re-verification");
    require(structure::is_matricial(ext.q.quotient).matricial, Err::CertificateMissing,
            "quotient certificate fails re-verification");
  }
  require(r.is_unital(), Err::PreconditionFailed,
          "corner-reduce non-unital ambients before taking envelopes");
  // J = 0: R itself is matricial
  if (ext.q.ideal.dim() == 0) {
    MatricialResult mr = structure::is_matricial(r);
    require(mr.matricial, Err::CertificateMissing, "R is not matricial although J = 0");
    return {linalg::subspace_full(F, r.dim()), *mr.units};
  }
  // T with R = T (+) J
  auto [t, ltrace] = lift_subalgebra(ext, linalg::subspace_full(F, ext.q.quotient.dim()));
  // Y: the J-components of X along the splitting
  std::vector<std::vector<Scalar>> y;
  for (const auto& xx : x) {
    auto [tp, jp] = split_along(r, t, ext.q.ideal, xx);
    if (!r.is_zero_element(jp)) y.push_back(jp);
  }
  auto [e, ctrace] = centralizing_idempotent(r, ext.q.ideal, t, y);
  // S = (1 - e) T + eJe
  auto one_minus_e = r.sub(r.identity(), e);
  std::vector<std::vector<Scalar>> srows;
  for (int i = 0; i < t.dim(); ++i) srows.push_back(r.mul(one_minus_e, t.basis.row(i)));
  linalg::SubspaceBasis u = corner_subspace(r, e, ext.q.ideal);
  for (int i = 0; i < u.dim(); ++i) srows.push_back(u.basis.row(i));
  linalg::SubspaceBasis s = span_rows(F, srows, r.dim());
  // X must land inside S
  for (const auto& xx : x)
    require(linalg::contains(s, xx), Err::Internal, "X not contained in the envelope");
  // independent certificate
  algcore::Subalgebra ssub = algcore::subalgebra_on(r, s);
  MatricialResult mr = structure::is_matricial(ssub.alg);
  require(mr.matricial, Err::Internal, "envelope candidate fails the matricial certificate");
  // embed the units into R coordinates
  MatrixUnitsSystem units = *mr.units;
  for (auto& blk : units.units)
    for (auto& row : blk)
      for (auto& uelem : row) uelem = ssub.embed_element(uelem);
  for (auto& pp : units.block_identities) pp = ssub.embed_element(pp);
  return {s, units};
}

namespace {

// recursive fdss envelope: B unital with bottom ideal J0 certified
// semisimple; peel one simple quotient component per level
linalg::SubspaceBasis fdss_envelope_rec(const FDAlgebra& b, const linalg::SubspaceBasis& j0,
                                        const std::vector<std::vector<Scalar>>& x, int depth) {
  const Field& F = b.field();
  require(depth <= 2 * b.dim() + 4, Err::Internal, "envelope recursion too deep");
  if (j0.dim() == b.dim()) {
    require(structure::radical(b).dim() == 0, Err::CertificateMissing,
            "bottom ideal is not semisimple");
    return linalg::subspace_full(F, b.dim());
  }
  require(b.is_unital(), Err::PreconditionFailed, "envelope recursion needs unital ambients");
  QuotientPresentation qp = algcore::quotient(b, j0);
  WedderburnReport rep = structure::wedderburn(qp.quotient);
  require(rep.semisimple, Err::CertificateMissing, "quotient is not semisimple");
  if (rep.components.empty()) {
    return linalg::subspace_full(F, b.dim());
  }
  // the chain: B' = preimage of all components but the last
  const WedderburnComponent& top = rep.components.back();
  std::vector<std::vector<Scalar>> brows;
  for (int i = 0; i < j0.dim(); ++i) brows.push_back(j0.basis.row(i));
  for (size_t s = 0; s + 1 < rep.components.size(); ++s) {
    CornerAlgebra blk = algcore::corner(qp.quotient, rep.components[s].central_idempotent);
    for (int i = 0; i < blk.space.dim(); ++i) brows.push_back(qp.lift(blk.space.basis.row(i)));
  }
  linalg::SubspaceBasis bprime =
      brows.empty() ? linalg::subspace_zero(F, b.dim())
                    : linalg::subspace_from_rows(Matrix::from_rows(F, brows));
  // lift the top component to T with B = T (+) B'
  ExtensionInstance chain;
  chain.q = algcore::quotient(b, bprime);
  auto [t, ltrace] =
      lift_subalgebra(chain, linalg::subspace_full(F, chain.q.quotient.dim()));
  algcore::Subalgebra tsub = algcore::subalgebra_on(b, t);
  require(tsub.alg.is_unital(), Err::Internal, "lifted component not unital");
  auto p = tsub.embed_element(tsub.alg.identity());
  auto one_minus_p = b.sub(b.identity(), p);
  // Y: B'-parts of X, then capture Y cup {1-p} inside B'
  std::vector<std::vector<Scalar>> y;
  for (const auto& xx : x) {
    auto [tp, jp] = split_along(b, t, bprime, xx);
    if (!b.is_zero_element(jp)) y.push_back(jp);
  }
  algcore::Subalgebra bpsub = algcore::subalgebra_on(b, bprime);
  std::vector<Scalar> gcap;
  {
    std::vector<std::vector<Scalar>> captured;
    for (const auto& yy : y) {
      auto c = linalg::coordinates_in(bprime, yy);
      require(c.has_value(), Err::Internal, "Y escapes B'");
      captured.push_back(*c);
    }
    if (!b.is_zero_element(one_minus_p)) {
      auto c = linalg::coordinates_in(bprime, one_minus_p);
      require(c.has_value(), Err::Internal, "1 - p escapes B'");
      captured.push_back(*c);
    }
    gcap = captured.empty() ? b.zero_element()
                            : bpsub.embed_element(regtools::corner_capture(bpsub.alg, captured));
  }
  // corner at p and the centralizing idempotent for T there
  std::vector<Scalar> e;
  if (b.eq(p, b.identity())) {
    // no corner needed: run the star route on (B, B', T) directly
    std::vector<std::vector<Scalar>> caps;
    if (!b.is_zero_element(gcap)) caps.push_back(gcap);
    for (const auto& yy : y) caps.push_back(yy);
    auto res = condition_star_check(b, bprime, t, caps);
    require(std::holds_alternative<std::vector<Scalar>>(res), Err::NotSeparable,
            "no centralizing idempotent for the top component");
    e = std::get<std::vector<Scalar>>(res);
  } else {
    CornerAlgebra bp = algcore::corner(b, p);
    auto restrict_p = [&](const std::vector<Scalar>& v) {
      auto c = linalg::coordinates_in(bp.space, v);
      require(c.has_value(), Err::Internal, "element escapes pBp");
      return *c;
    };
    // pB'p, T and pg inside the corner
    std::vector<std::vector<Scalar>> jrows;
    for (int i = 0; i < bprime.dim(); ++i) {
      auto w = b.mul(p, b.mul(bprime.basis.row(i), p));
      jrows.push_back(restrict_p(w));
    }
    linalg::SubspaceBasis jc = span_rows(F, jrows, bp.alg.dim());
    std::vector<std::vector<Scalar>> trowsc;
    for (int i = 0; i < t.dim(); ++i) trowsc.push_back(restrict_p(t.basis.row(i)));
    linalg::SubspaceBasis tc = span_rows(F, trowsc, bp.alg.dim());
    std::vector<std::vector<Scalar>> yc;
    auto pg = b.mul(p, b.mul(gcap, p));
    if (!b.is_zero_element(pg)) yc.push_back(restrict_p(pg));
    auto res = condition_star_check(bp.alg, jc, tc, yc);
    require(std::holds_alternative<std::vector<Scalar>>(res), Err::NotSeparable,
            "no centralizing idempotent for the top component");
    auto h = bp.embed_element(std::get<std::vector<Scalar>>(res));
    e = b.add(h, one_minus_p);
    require(b.is_idempotent(e), Err::Internal, "corner-corrected idempotent");
  }
  require(linalg::contains(bprime, e), Err::Internal, "e must lie in B'");
  // capture everything needed inside eB'e and recurse
  auto ebe_rows = std::vector<std::vector<Scalar>>{};
  for (int i = 0; i < bprime.dim(); ++i)
    ebe_rows.push_back(b.mul(e, b.mul(bprime.basis.row(i), e)));
  linalg::SubspaceBasis ebe = span_rows(F, ebe_rows, b.dim());
  algcore::Subalgebra esub = algcore::subalgebra_on(b, ebe);
  auto restrict_e = [&](const std::vector<Scalar>& v) {
    auto c = linalg::coordinates_in(ebe, v);
    require(c.has_value(), Err::Internal, "element escapes eB'e");
    return *c;
  };
  std::vector<std::vector<Scalar>> xprime;
  for (const auto& yy : y) xprime.push_back(restrict_e(b.mul(e, b.mul(yy, e))));
  for (int i = 0; i < t.dim(); ++i) {
    auto et = b.mul(e, t.basis.row(i));
    if (!b.is_zero_element(et)) xprime.push_back(restrict_e(et));
  }
  if (!b.is_zero_element(gcap)) {
    auto ege = b.mul(e, b.mul(gcap, e));
    if (!b.is_zero_element(ege)) xprime.push_back(restrict_e(ege));
  }
  // eJ0e inside eB'e
  std::vector<std::vector<Scalar>> j0rows;
  for (int i = 0; i < j0.dim(); ++i) {
    auto w = b.mul(e, b.mul(j0.basis.row(i), e));
    if (!b.is_zero_element(w)) j0rows.push_back(restrict_e(w));
  }
  linalg::SubspaceBasis j0c = span_rows(F, j0rows, ebe.dim());
  linalg::SubspaceBasis urec = fdss_envelope_rec(esub.alg, j0c, xprime, depth + 1);
  // S = (1 - e) T + U
  auto one_minus_e = b.sub(b.identity(), e);
  std::vector<std::vector<Scalar>> srows;
  for (int i = 0; i < t.dim(); ++i) srows.push_back(b.mul(one_minus_e, t.basis.row(i)));
  for (int i = 0; i < urec.dim(); ++i) srows.push_back(esub.embed_element(urec.basis.row(i)));
  linalg::SubspaceBasis s = span_rows(F, srows, b.dim());
  for (const auto& xx : x)
    require(linalg::contains(s, xx), Err::Internal, "X not contained in the envelope level");
  return s;
}

}  // namespace

std::pair<linalg::SubspaceBasis, WedderburnReport> fdss_envelope(
    const ExtensionInstance& ext, const std::vector<std::vector<Scalar>>& x) {
  const FDAlgebra& r = ext.q.ambient;
  const Field& F = r.field();
  require(ext.ideal_class == AlgClass::Matricial || ext.ideal_class == AlgClass::Fdss,
          Err::CertificateMissing, "ideal certificate missing");
  require(ext.quotient_class == AlgClass::Matricial || ext.quotient_class == AlgClass::Fdss,
          Err::CertificateMissing, "quotient certificate missing");
  require(r.is_unital(), Err::PreconditionFailed,
          "corner-reduce non-unital ambients before taking envelopes");
  // re-verify: J semisimple as an algebra
  if (ext.q.ideal.dim() > 0) {
    algcore::Subalgebra jsub = algcore::subalgebra_on(r, ext.q.ideal);
    require(structure::radical(jsub.alg).dim() == 0, Err::CertificateMissing,
            "ideal certificate fails re-verification");
  }
  // quotient components must be separable (matricial components always are)
  WedderburnReport qrep = structure::wedderburn(ext.q.quotient);
  require(qrep.semisimple, Err::CertificateMissing, "quotient certificate fails re-verification");
  for (const auto& comp : qrep.components) {
    CornerAlgebra blk = algcore::corner(ext.q.quotient, comp.central_idempotent);
    require(structure::is_separable(blk.alg), Err::NotSeparable,
            "quotient component is not separable over the base field");
  }
  if (x.empty()) {
    linalg::SubspaceBasis s = linalg::subspace_zero(F, r.dim());
    WedderburnReport rep;
    rep.semisimple = true;
    rep.fdss = true;
    rep.matricial = true;
    rep.radical = linalg::subspace_zero(F, 0);
    return {s, rep};
  }
  // preimage reduction: the subalgebra generated by pi(X) and 1, when it
  // is already semisimple, bounds the work
  linalg::SubspaceBasis swork;
  {
    std::vector<std::vector<Scalar>> pix;
    for (const auto& xx : x) pix.push_back(ext.q.project(xx));
    pix.push_back(ext.q.quotient.identity());
    linalg::SubspaceBasis agen = algcore::generated_subalgebra(ext.q.quotient, pix);
    bool use_reduction = false;
    if (agen.dim() < ext.q.quotient.dim()) {
      algcore::Subalgebra asub = algcore::subalgebra_on(ext.q.quotient, agen);
      try {
        use_reduction = structure::radical(asub.alg).dim() == 0;
      } catch (const Error&) {
        use_reduction = false;
      }
    }
    if (use_reduction) {
      // R' = pi^{-1}(A): run the recursion inside R'
      std::vector<std::vector<Scalar>> rrows;
      for (int i = 0; i < ext.q.ideal.dim(); ++i) rrows.push_back(ext.q.ideal.basis.row(i));
      for (int i = 0; i < agen.dim(); ++i) rrows.push_back(ext.q.lift(agen.basis.row(i)));
      linalg::SubspaceBasis rprime = linalg::subspace_from_rows(Matrix::from_rows(F, rrows));
      algcore::Subalgebra rs = algcore::subalgebra_on(r, rprime);
      if (rs.alg.is_unital()) {
        std::vector<std::vector<Scalar>> xin;
        for (const auto& xx : x) {
          auto c = linalg::coordinates_in(rprime, xx);
          require(c.has_value(), Err::Internal, "X escapes the preimage reduction");
          xin.push_back(*c);
        }
        std::vector<std::vector<Scalar>> j0rows;
        for (int i = 0; i < ext.q.ideal.dim(); ++i) {
          auto c = linalg::coordinates_in(rprime, ext.q.ideal.basis.row(i));
          j0rows.push_back(*c);
        }
        linalg::SubspaceBasis j0 = span_rows(F, j0rows, rprime.dim());
        linalg::SubspaceBasis sin = fdss_envelope_rec(rs.alg, j0, xin, 0);
        std::vector<std::vector<Scalar>> srows;
        for (int i = 0; i < sin.dim(); ++i) srows.push_back(rs.embed_element(sin.basis.row(i)));
        swork = span_rows(F, srows, r.dim());
      }
    }
    if (swork.ambient == 0) swork = fdss_envelope_rec(r, ext.q.ideal, x, 0);
  }
  for (const auto& xx : x)
    require(linalg::contains(swork, xx), Err::Internal, "X not contained in the envelope");
  algcore::Subalgebra ssub = algcore::subalgebra_on(r, swork);
  WedderburnReport cert = structure::wedderburn(ssub.alg);
  require(cert.semisimple, Err::Internal, "envelope fails the semisimplicity certificate");
  return {swork, cert};
}

}  // namespace extensions
}  // namespace exalg
