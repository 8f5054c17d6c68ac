#include "exalg/counterexample.hpp"

namespace exalg {

Matrix BandedOperator::block_at(int i, int j) const {
  const Field* f = nullptr;
  if (!band.empty())
    f = band.begin()->second.field_ptr();
  else if (!correction.empty())
    f = correction.begin()->second.field_ptr();
  require(f != nullptr, Err::Internal, "empty banded operator");
  Matrix blk = Matrix::zero(*f, block, block);
  if (j >= i) {
    auto it = band.find(j - i);
    if (it != band.end()) blk = it->second;
  }
  auto ct = correction.find({i, j});
  if (ct != correction.end()) blk = linalg::add(blk, ct->second);
  return blk;
}

namespace cx {

namespace {

void prune(BandedOperator& a) {
  for (auto it = a.band.begin(); it != a.band.end();)
    it = it->second.is_zero() ? a.band.erase(it) : std::next(it);
  for (auto it = a.correction.begin(); it != a.correction.end();)
    it = it->second.is_zero() ? a.correction.erase(it) : std::next(it);
}

const Field& field_of(const BandedOperator& a) {
  if (!a.band.empty()) return a.band.begin()->second.field();
  require(!a.correction.empty(), Err::Internal, "empty banded operator");
  return a.correction.begin()->second.field();
}

int correction_extent(const BandedOperator& a) {
  int ext = 0;
  for (const auto& [pos, blk] : a.correction)
    ext = std::max({ext, pos.first + 1, pos.second + 1});
  return ext;
}

}  // namespace

BandedOperator banded_identity(const Field& f, int p) {
  BandedOperator a;
  a.block = p;
  a.band[0] = Matrix::identity(f, p);
  return a;
}

BandedOperator banded_zero(const Field& f, int p) {
  BandedOperator a;
  a.block = p;
  a.band[0] = Matrix::zero(f, p, p);
  prune(a);
  if (a.band.empty()) a.correction[{0, 0}] = Matrix::zero(f, p, p);
  return a;
}

BandedOperator add(const BandedOperator& a, const BandedOperator& b) {
  require(a.block == b.block, Err::DimensionMismatch, "banded add");
  const Field& f = field_of(a);
  BandedOperator r = a;
  for (const auto& [off, blk] : b.band) {
    auto it = r.band.find(off);
    if (it == r.band.end())
      r.band[off] = blk;
    else
      it->second = linalg::add(it->second, blk);
  }
  for (const auto& [pos, blk] : b.correction) {
    auto it = r.correction.find(pos);
    if (it == r.correction.end())
      r.correction[pos] = blk;
    else
      it->second = linalg::add(it->second, blk);
  }
  prune(r);
  if (r.band.empty() && r.correction.empty()) r.correction[{0, 0}] = Matrix::zero(f, a.block, a.block);
  return r;
}

BandedOperator scale(const BandedOperator& a, const Scalar& k) {
  BandedOperator r = a;
  for (auto& [off, blk] : r.band) blk = linalg::scale(blk, k);
  for (auto& [pos, blk] : r.correction) blk = linalg::scale(blk, k);
  prune(r);
  if (r.band.empty() && r.correction.empty())
    r.correction[{0, 0}] = Matrix::zero(field_of(a), a.block, a.block);
  return r;
}

BandedOperator mul(const BandedOperator& a, const BandedOperator& b) {
  require(a.block == b.block, Err::DimensionMismatch, "banded mul");
  const Field& f = field_of(a);
  int p = a.block;
  BandedOperator r;
  r.block = p;
  // band * band: convolution of the repeating diagonals; with offsets
  // >= 0 the one-sided truncation never interferes
  for (const auto& [oa, ba] : a.band)
    for (const auto& [ob, bb] : b.band) {
      int off = oa + ob;
      Matrix prod = linalg::mul(ba, bb);
      auto it = r.band.find(off);
      if (it == r.band.end())
        r.band[off] = prod;
      else
        it->second = linalg::add(it->second, prod);
    }
  // band * correction and correction * band and correction * correction
  auto add_corr = [&](int i, int j, const Matrix& m) {
    if (m.is_zero()) return;
    auto it = r.correction.find({i, j});
    if (it == r.correction.end())
      r.correction[{i, j}] = m;
    else
      it->second = linalg::add(it->second, m);
  };
  for (const auto& [oa, ba] : a.band)
    for (const auto& [pos, cb] : b.correction) {
      // (T C)_{i, j} = band[k - i] * C_{k, j} with k = pos.first, j = pos.second
      int i = pos.first - oa;
      if (i >= 0) add_corr(i, pos.second, linalg::mul(ba, cb));
    }
  for (const auto& [pos, ca] : a.correction)
    for (const auto& [ob, bb] : b.band) {
      // (C T)_{i, j} = C_{i, k} * band[j - k] with k = pos.second
      add_corr(pos.first, pos.second + ob, linalg::mul(ca, bb));
    }
  for (const auto& [pa, ca] : a.correction)
    for (const auto& [pb, cb] : b.correction)
      if (pa.second == pb.first) add_corr(pa.first, pb.second, linalg::mul(ca, cb));
  prune(r);
  if (r.band.empty() && r.correction.empty()) r.correction[{0, 0}] = Matrix::zero(f, p, p);
  return r;
}

bool eq(const BandedOperator& a, const BandedOperator& b) {
  if (a.block != b.block) return false;
  int maxoff = 0;
  for (const auto& [o, m] : a.band) maxoff = std::max(maxoff, o);
  for (const auto& [o, m] : b.band) maxoff = std::max(maxoff, o);
  int ext = std::max(correction_extent(a), correction_extent(b));
  // compare on a window large enough to see every band and correction
  int w = ext + maxoff + 2;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      if (!(a.block_at(i, j) == b.block_at(i, j))) return false;
  return true;
}

BandedOperator power(const BandedOperator& a, int e) {
  require(e >= 1, Err::PreconditionFailed, "power exponent");
  BandedOperator r = a;
  for (int i = 1; i < e; ++i) r = mul(r, a);
  return r;
}

CounterexampleSystem counterexample_build(uint64_t p, int n, bool nu_zero_sanity) {
  require(p == 2 || p == 3 || p == 5, Err::UnsupportedParameters, "p must be one of {2,3,5}");
  require(n >= 2 && n <= 8 && n % 2 == 0, Err::UnsupportedParameters,
          "n must be even with 2 <= n <= 8");
  CounterexampleSystem sys;
  sys.p = p;
  sys.n = n;
  sys.nu_zero_sanity = nu_zero_sanity;
  sys.base = make_field(FieldDesc::rational_functions(p, "t"));
  // L = K[tau]/(tau^p - t)
  std::vector<std::string> mp(static_cast<size_t>(p) + 1, "0");
  mp[0] = "-t";
  mp[static_cast<size_t>(p)] = "1";
  sys.ext = make_field(FieldDesc::extension(sys.base->desc(), mp));
  const Field& L = *sys.ext;
  int pi = static_cast<int>(p);
  // nu: the p x p Jordan nilpotent block (upper shift)
  sys.nu = Matrix::zero(L, pi, pi);
  if (!nu_zero_sanity)
    for (int i = 0; i + 1 < pi; ++i) sys.nu.at(i, i + 1) = L.one();
  // window identities for the honest block
  if (!nu_zero_sanity) {
    Matrix pow = sys.nu;
    for (int e = 2; e <= pi; ++e) {
      if (e == pi) {
        // nu^(p-1) != 0 before the last multiplication
        require(!pow.is_zero(), Err::Internal, "nu^(p-1) vanished");
      }
      pow = linalg::mul(pow, sys.nu);
    }
    require(pow.is_zero(), Err::Internal, "nu^p != 0");
  }
  // N: nu on the diagonal and the first superdiagonal
  sys.n_op.block = pi;
  sys.n_op.band[0] = sys.nu;
  sys.n_op.band[1] = sys.nu;
  if (nu_zero_sanity) {
    sys.n_op.band.clear();
    sys.n_op.correction[{0, 0}] = Matrix::zero(L, pi, pi);
  }
  // t = tau I + N
  Scalar tau = ext_generator(L);
  BandedOperator tauI = banded_identity(L, pi);
  tauI.band[0] = linalg::scale(tauI.band[0], tau);
  sys.t_op = add(tauI, sys.n_op);
  // y: top-left I_p
  sys.y_op.block = pi;
  sys.y_op.correction[{0, 0}] = Matrix::identity(L, pi);
  // window verification: t^p = alpha I with alpha = t (the variable)
  {
    BandedOperator tp = power(sys.t_op, pi);
    Scalar alpha = L.parse("t");
    BandedOperator alphaI = banded_identity(L, pi);
    alphaI.band[0] = linalg::scale(alphaI.band[0], alpha);
    require(eq(tp, alphaI), Err::Internal, "t^p != alpha I on the window");
    require(eq(mul(sys.y_op, sys.y_op), sys.y_op), Err::Internal, "y^2 != y");
  }
  // assemble the commutation system in the unknown blocks b_ij
  // (1 <= i, j <= n); e has I_p at (0,0), zeros on the rest of row/col 0,
  // b_ij inside, zeros beyond
  const Matrix& nu = sys.nu;
  int np = n * pi;
  sys.unknowns = n * n * pi * pi;
  auto varidx = [&](int bi, int bj, int rr, int cc) {
    return ((bi - 1) * n + (bj - 1)) * pi * pi + rr * pi + cc;
  };
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  std::vector<CounterexampleSystem::RowTag> tags;
  // block equation at (I, J): sum over known/unknown parts of
  // e_{I,J} nu + e_{I,J-1} nu - nu e_{I,J} - nu e_{I+1,J} = 0
  auto block_term = [&](std::vector<Scalar>& row, Matrix& constant, int bi, int bj,
                        const Matrix& left, bool nu_on_left, int rr, int cc) {
    // contribution of (left * e_{bi,bj}) or (e_{bi,bj} * left) entry (rr, cc)
    // with sign +1 into the row/constant
    if (bi < 0 || bj < 0 || bi > sys.n + 1 || bj > sys.n + 1) return;
    const Field& F = *sys.ext;
    if (bi == 0 && bj == 0) {
      // e_{0,0} = I_p
      Matrix prod = left;  // I * left = left * I
      constant.at(rr, cc) = F.add(constant.at(rr, cc), prod.at(rr, cc));
      return;
    }
    if (bi == 0 || bj == 0) return;        // zero blocks on row/col 0
    if (bi > sys.n || bj > sys.n) return;  // zero beyond the window
    // unknown block: entry (rr, cc) of left * b or b * left
    for (int k = 0; k < pi; ++k) {
      Scalar coef = nu_on_left ? left.at(rr, k) : left.at(k, cc);
      if (F.is_zero(coef)) continue;
      int vidx = nu_on_left ? varidx(bi, bj, k, cc) : varidx(bi, bj, rr, k);
      row[static_cast<size_t>(vidx)] = F.add(row[static_cast<size_t>(vidx)], coef);
    }
  };
  const Field& F = L;
  for (int bi = 0; bi <= n + 1; ++bi) {
    for (int bj = 0; bj <= n + 1; ++bj) {
      // equation block (bi, bj)
      Matrix constant = Matrix::zero(F, pi, pi);
      std::vector<std::vector<Scalar>> blockrows(
          static_cast<size_t>(pi) * pi,
          std::vector<Scalar>(static_cast<size_t>(sys.unknowns), F.zero()));
      for (int rr = 0; rr < pi; ++rr) {
        for (int cc = 0; cc < pi; ++cc) {
          auto& row = blockrows[static_cast<size_t>(rr) * pi + cc];
          // + e_{bi,bj} nu  (b * nu: coefficient nu on the right)
          block_term(row, constant, bi, bj, nu, /*nu_on_left=*/false, rr, cc);
          // + e_{bi,bj-1} nu
          block_term(row, constant, bi, bj - 1, nu, false, rr, cc);
          // - nu e_{bi,bj} and - nu e_{bi+1,bj}: subtract
        }
      }
      // subtract the nu-on-left terms with a negated nu
      Matrix neg_nu = linalg::scale(nu, F.from_int(-1));
      for (int rr = 0; rr < pi; ++rr)
        for (int cc = 0; cc < pi; ++cc) {
          auto& row = blockrows[static_cast<size_t>(rr) * pi + cc];
          block_term(row, constant, bi, bj, neg_nu, /*nu_on_left=*/true, rr, cc);
          block_term(row, constant, bi + 1, bj, neg_nu, true, rr, cc);
        }
      for (int rr = 0; rr < pi; ++rr)
        for (int cc = 0; cc < pi; ++cc) {
          auto& row = blockrows[static_cast<size_t>(rr) * pi + cc];
          bool nz = false;
          for (const auto& s : row)
            if (!F.is_zero(s)) {
              nz = true;
              break;
            }
          Scalar rhsval = F.neg(constant.at(rr, cc));
          if (!nz && F.is_zero(rhsval)) continue;
          rows.push_back(row);
          rhs.push_back(rhsval);
          tags.push_back({bi, bj, rr, cc});
        }
    }
  }
  if (rows.empty()) {
    sys.system = Matrix(sys.ext.get(), 0, sys.unknowns);
  } else {
    sys.system = Matrix::from_rows(F, rows);
  }
  sys.rhs = std::move(rhs);
  sys.row_tags = std::move(tags);
  return sys;
}

FeasibilityVerdict verify_system(const CounterexampleSystem& sys) {
  FeasibilityVerdict v;
  if (sys.system.rows() == 0) {
    v.feasible = true;
    return v;
  }
  auto out = linalg::solve_linear(sys.system, sys.rhs);
  if (out.solution) {
    v.feasible = true;
    return v;
  }
  v.feasible = false;
  v.certificate = out.infeasible->certificate;
  // check the certificate really refutes: y A = 0, y rhs != 0
  const Field& F = sys.system.field();
  const auto& y = *v.certificate;
  for (int j = 0; j < sys.system.cols(); ++j) {
    Scalar acc = F.zero();
    for (int i = 0; i < sys.system.rows(); ++i)
      acc = F.add(acc, F.mul(y[static_cast<size_t>(i)], sys.system.at(i, j)));
    require(F.is_zero(acc), Err::Internal, "certificate does not annihilate the system");
  }
  Scalar yb = F.zero();
  for (int i = 0; i < sys.system.rows(); ++i)
    yb = F.add(yb, F.mul(y[static_cast<size_t>(i)], sys.rhs[static_cast<size_t>(i)]));
  require(!F.is_zero(yb), Err::Internal, "certificate rhs vanishes");
  return v;
}

FeasibilityVerdict counterexample_verify(uint64_t p, int n, bool nu_zero_sanity) {
  return verify_system(counterexample_build(p, n, nu_zero_sanity));
}

Matrix alternating_certificate(const CounterexampleSystem& sys) {
  // the paper combination: alternating block-row sums telescope the
  // commutation equations so that every unknown cancels and the constant
  // side reproduces nu
  const Field& F = *sys.ext;
  int pi = static_cast<int>(sys.p);
  int n = sys.n;
  std::vector<Scalar> combo(static_cast<size_t>(sys.unknowns), F.zero());
  Matrix rhs_sum = Matrix::zero(F, pi, pi);
  auto add_block_equation = [&](int bi, int bj, int sign) {
    // accumulate sign * (equation block (bi,bj))
    Scalar s = F.from_int(sign);
    for (size_t r = 0; r < sys.row_tags.size(); ++r) {
      const auto& tag = sys.row_tags[r];
      if (tag.bi != bi || tag.bj != bj) continue;
      for (int c = 0; c < sys.system.cols(); ++c)
        combo[static_cast<size_t>(c)] =
            F.add(combo[static_cast<size_t>(c)],
                  F.mul(s, sys.system.at(static_cast<int>(r), c)));
      rhs_sum.at(tag.r, tag.c) =
          F.add(rhs_sum.at(tag.r, tag.c), F.mul(s, sys.rhs[static_cast<size_t>(r)]));
    }
  };
  // rows i = 1..n with alternating signs (-1)^i, columns j = 1..n+1 with
  // alternating signs (-1)^j; plus the first block row (i = 0) likewise
  for (int bi = 0; bi <= n; ++bi) {
    int si = (bi % 2 == 0) ? 1 : -1;
    for (int bj = 1; bj <= n + 1; ++bj) {
      int sj = (bj % 2 == 0) ? 1 : -1;
      add_block_equation(bi, bj, si * sj);
    }
  }
  for (const auto& s : combo)
    require(F.is_zero(s), Err::Internal, "alternating combination does not cancel the unknowns");
  require(!rhs_sum.is_zero(), Err::Internal, "alternating combination has zero right side");
  return rhs_sum;
}

}  // namespace cx
}  // namespace exalg
