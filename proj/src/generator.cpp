#include "exalg/generator.hpp"

#include <algorithm>

#include "exalg/factor.hpp"
#include "exalg/poly.hpp"

namespace exalg {
namespace gen {

FDAlgebra extension_component(FieldRef field, const std::vector<std::string>& minpoly) {
  const Field& F = *field;
  std::vector<Scalar> m;
  m.reserve(minpoly.size());
  for (const auto& s : minpoly) m.push_back(F.parse(s));
  Poly mp = poly::make(F, m);
  require(mp.deg() >= 1, Err::UnsupportedParameters, "component minpoly degenerate");
  require(F.is_one(mp.lead()), Err::UnsupportedParameters, "component minpoly must be monic");
  require(factor::is_irreducible(F, mp), Err::ReduciblePolynomial,
          "component minpoly reducible");
  int d = mp.deg();
  FDAlgebra::Table tab(static_cast<size_t>(d) * d);
  // basis 1, theta, ..., theta^(d-1); products reduced mod m
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      // theta^(i+j) mod m
      Poly prod;
      prod.c.assign(static_cast<size_t>(i + j) + 1, F.zero());
      prod.c[static_cast<size_t>(i + j)] = F.one();
      Poly red = poly::divmod(F, prod, mp).second;
      for (int k = 0; k <= red.deg(); ++k)
        if (!F.is_zero(red.c[static_cast<size_t>(k)]))
          tab[static_cast<size_t>(i) * d + j].push_back({k, red.c[static_cast<size_t>(k)]});
    }
  }
  return FDAlgebra::make_unchecked(std::move(field), d, std::move(tab));
}

FDAlgebra standard_semisimple(FieldRef field, const std::vector<BlockSpec>& blocks) {
  require(!blocks.empty(), Err::UnsupportedParameters, "empty block profile");
  std::vector<FDAlgebra> parts;
  for (const auto& b : blocks) {
    require(b.n >= 1, Err::UnsupportedParameters, "block size must be >= 1");
    FDAlgebra mat = algcore::matrix_algebra(field, b.n);
    if (b.division_minpoly.empty()) {
      parts.push_back(std::move(mat));
    } else {
      FDAlgebra div = extension_component(field, b.division_minpoly);
      parts.push_back(algcore::tensor_product(mat, div));
    }
  }
  if (parts.size() == 1) return parts[0];
  return algcore::direct_sum(parts);
}

Matrix random_invertible(const Field& f, int n, SplitMix64& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    Matrix p(&f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          p.at(i, j) = f.one();
        else if (rng.below(3) == 0)
          p.at(i, j) = f.random_small(rng);
      }
    // extra mixing: a few random transvections
    for (int k = 0; k < n; ++k) {
      int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      if (i == j) continue;
      Scalar c = f.random_small(rng);
      for (int col = 0; col < n; ++col)
        p.at(i, col) = f.add(p.at(i, col), f.mul(c, p.at(j, col)));
    }
    if (linalg::inverse(p).has_value()) return p;
  }
  return Matrix::identity(f, n);
}

FDAlgebra change_basis(const FDAlgebra& a, const Matrix& p) {
  const Field& F = a.field();
  int n = a.dim();
  require(p.rows() == n && p.cols() == n, Err::DimensionMismatch, "basis change size");
  auto pinv = linalg::inverse(p);
  require(pinv.has_value(), Err::PreconditionFailed, "basis change not invertible");
  FDAlgebra::Table tab(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // b'_i b'_j in old coordinates, then converted to the new basis
      auto prod = a.mul(p.row(i), p.row(j));
      auto newc = transform_row(*pinv, prod);
      for (int k = 0; k < n; ++k)
        if (!F.is_zero(newc[static_cast<size_t>(k)]))
          tab[static_cast<size_t>(i) * n + j].push_back({k, newc[static_cast<size_t>(k)]});
    }
  }
  return FDAlgebra::make_unchecked(a.field_ref(), n, std::move(tab));
}

std::vector<Scalar> transform_row(const Matrix& p_inv, const std::vector<Scalar>& v) {
  const Field& F = p_inv.field();
  int n = p_inv.rows();
  std::vector<Scalar> r(static_cast<size_t>(n), F.zero());
  for (int c = 0; c < n; ++c) {
    if (F.is_zero(v[static_cast<size_t>(c)])) continue;
    for (int k = 0; k < n; ++k)
      r[static_cast<size_t>(k)] =
          F.add(r[static_cast<size_t>(k)], F.mul(v[static_cast<size_t>(c)], p_inv.at(c, k)));
  }
  return r;
}

GeneratedExtension generate_random_extension(uint64_t seed, FieldRef field,
                                             const ExtensionProfile& profile) {
  const Field& F = *field;
  FDAlgebra jstd = standard_semisimple(field, profile.ideal_blocks);
  FDAlgebra qstd = standard_semisimple(field, profile.quotient_blocks);
  int total = jstd.dim() + qstd.dim();
  require(total <= 64, Err::UnsupportedParameters, "profile dimension exceeds 64");
  FDAlgebra rstd = algcore::direct_sum({jstd, qstd});
  SplitMix64 rng(seed);
  Matrix p = random_invertible(F, total, rng);
  FDAlgebra r = change_basis(rstd, p);
  auto pinv = linalg::inverse(p);
  // the ideal subspace: images of the first dim(J) standard vectors
  std::vector<std::vector<Scalar>> jrows;
  for (int i = 0; i < jstd.dim(); ++i) {
    std::vector<Scalar> e(static_cast<size_t>(total), F.zero());
    e[static_cast<size_t>(i)] = F.one();
    jrows.push_back(transform_row(*pinv, e));
  }
  linalg::SubspaceBasis j = linalg::subspace_from_rows(Matrix::from_rows(F, jrows));
  GeneratedExtension out;
  out.inst.q = algcore::quotient(r, j);
  auto is_matricial_profile = [](const std::vector<BlockSpec>& blocks) {
    for (const auto& b : blocks)
      if (!b.division_minpoly.empty()) return false;
    return true;
  };
  out.inst.ideal_class =
      is_matricial_profile(profile.ideal_blocks) ? AlgClass::Matricial : AlgClass::Fdss;
  out.inst.quotient_class =
      is_matricial_profile(profile.quotient_blocks) ? AlgClass::Matricial : AlgClass::Fdss;
  for (const auto& b : profile.ideal_blocks) out.ideal_sizes.push_back(b.n);
  for (const auto& b : profile.quotient_blocks) out.quotient_sizes.push_back(b.n);
  out.basis_change = p;
  return out;
}

GeneratedNonSemisimple generate_nonsemisimple(uint64_t seed, FieldRef field, int max_dim) {
  const Field& F = *field;
  SplitMix64 rng(seed);
  require(max_dim >= 3, Err::UnsupportedParameters, "max_dim too small");
  // assemble blocks until the budget runs out
  std::vector<FDAlgebra> parts;
  std::vector<std::pair<int, int>> rad_ranges;  // (offset, count) of radical basis indices
  int dim = 0;
  int guard = 0;
  while (dim < max_dim - 2 && guard++ < 8) {
    uint64_t pick = rng.below(3);
    if (pick == 0) {
      // upper triangular T_k, radical = strict upper part
      int k = static_cast<int>(rng.range(2, 3));
      int d = k * (k + 1) / 2;
      if (dim + d > max_dim) break;
      // basis: e_ij for i <= j, lexicographic
      std::vector<std::pair<int, int>> basis;
      for (int i = 0; i < k; ++i)
        for (int jj = i; jj < k; ++jj) basis.emplace_back(i, jj);
      FDAlgebra::Table tab(static_cast<size_t>(d) * d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          auto [i, j] = basis[static_cast<size_t>(a)];
          auto [l, m] = basis[static_cast<size_t>(b)];
          if (j == l) {
            int k2 = 0;
            for (int t = 0; t < d; ++t)
              if (basis[static_cast<size_t>(t)] == std::make_pair(i, m)) k2 = t;
            tab[static_cast<size_t>(a) * d + b].push_back({k2, F.one()});
          }
        }
      parts.push_back(FDAlgebra::make_unchecked(field, d, std::move(tab)));
      // radical indices: the strict uppers (i < j)
      int off = dim;
      std::vector<int> radidx;
      for (int t = 0; t < d; ++t)
        if (basis[static_cast<size_t>(t)].first != basis[static_cast<size_t>(t)].second)
          radidx.push_back(off + t);
      for (int idx : radidx) rad_ranges.emplace_back(idx, 1);
      dim += d;
    } else if (pick == 1) {
      // M_n(K[x]/(x^2)): radical = M_n (x) x
      int n = static_cast<int>(rng.range(1, 2));
      int d = 2 * n * n;
      if (dim + d > max_dim) break;
      FDAlgebra mat = algcore::matrix_algebra(field, n);
      // K[x]/(x^2)
      FDAlgebra::Table dual(4);
      dual[0].push_back({0, F.one()});   // 1*1 = 1
      dual[1].push_back({1, F.one()});   // 1*x = x
      dual[2].push_back({1, F.one()});   // x*1 = x
      FDAlgebra dualalg = FDAlgebra::make_unchecked(field, 2, std::move(dual));
      FDAlgebra blk = algcore::tensor_product(mat, dualalg);
      // basis order: (e_ij, 1), (e_ij, x): odd tensor indices are radical
      for (int t = 0; t < n * n; ++t) rad_ranges.emplace_back(dim + 2 * t + 1, 1);
      parts.push_back(std::move(blk));
      dim += d;
    } else {
      int n = static_cast<int>(rng.range(1, 2));
      int d = n * n;
      if (dim + d > max_dim) break;
      parts.push_back(algcore::matrix_algebra(field, n));
      dim += d;
    }
  }
  if (parts.empty() || rad_ranges.empty()) {
    // guarantee a nontrivial radical: K[x]/(x^2)
    FDAlgebra::Table dual(4);
    dual[0].push_back({0, F.one()});
    dual[1].push_back({1, F.one()});
    dual[2].push_back({1, F.one()});
    parts.push_back(FDAlgebra::make_unchecked(field, 2, std::move(dual)));
    rad_ranges.emplace_back(dim + 1, 1);
    dim += 2;
  }
  FDAlgebra std_alg = parts.size() == 1 ? parts[0] : algcore::direct_sum(parts);
  Matrix p = random_invertible(F, dim, rng);
  GeneratedNonSemisimple out;
  out.alg = change_basis(std_alg, p);
  auto pinv = linalg::inverse(p);
  std::vector<std::vector<Scalar>> rad_rows;
  for (auto& [idx, cnt] : rad_ranges) {
    std::vector<Scalar> e(static_cast<size_t>(dim), F.zero());
    e[static_cast<size_t>(idx)] = F.one();
    rad_rows.push_back(transform_row(*pinv, e));
  }
  out.known_radical = linalg::subspace_from_rows(Matrix::from_rows(F, rad_rows));
  out.known_radical.is_ideal = true;
  return out;
}

GeneratedMatricial generate_scrambled_matricial(uint64_t seed, FieldRef field,
                                                const std::vector<int>& sizes) {
  std::vector<BlockSpec> blocks;
  for (int n : sizes) blocks.push_back({n, {}});
  FDAlgebra std_alg = standard_semisimple(field, blocks);
  SplitMix64 rng(seed);
  Matrix p = random_invertible(*field, std_alg.dim(), rng);
  GeneratedMatricial out;
  out.alg = change_basis(std_alg, p);
  out.sizes = sizes;
  return out;
}

}  // namespace gen
}  // namespace exalg
