#pragma once

#include <map>
#include <optional>
#include <vector>

#include "exalg/matrix.hpp"

namespace exalg {

// An omega x omega operator over M_p(L), stored as a block-Toeplitz band
// (offset -> repeating block on that diagonal, offsets >= 0 only) plus a
// finite block-indexed correction. Products of such operators are exact:
// upper-banded Toeplitz parts multiply by band convolution with no
// boundary effects, and corrections stay finitely supported.
struct BandedOperator {
  int block = 0;  // p
  std::map<int, Matrix> band;                        // offset >= 0 -> p x p block
  std::map<std::pair<int, int>, Matrix> correction;  // (i, j) -> p x p block added

  Matrix block_at(int i, int j) const;  // the (i,j) block of the full operator
};

namespace cx {

BandedOperator banded_identity(const Field& f, int p);
BandedOperator banded_zero(const Field& f, int p);
BandedOperator add(const BandedOperator& a, const BandedOperator& b);
BandedOperator mul(const BandedOperator& a, const BandedOperator& b);
BandedOperator scale(const BandedOperator& a, const Scalar& k);
bool eq(const BandedOperator& a, const BandedOperator& b);
BandedOperator power(const BandedOperator& a, int e);

}  // namespace cx

struct FeasibilityVerdict {
  bool feasible = false;
  // certificate for the infeasible case: a left-null row combination of
  // the assembled system with nonzero right-hand side
  std::optional<std::vector<Scalar>> certificate;
};

// The non-perfect-field counterexample data at truncation size n: base
// K = F_p(t), L = K(tau) with tau^p = t, the block-banded operators
// N, t = tau I + N, the corner projection y, and the commutation system
// in the unknown blocks b_ij.
struct CounterexampleSystem {
  uint64_t p = 0;
  int n = 0;
  FieldRef base;   // F_p(t)
  FieldRef ext;    // L = K[tau]/(tau^p - t)
  Matrix nu;       // p x p nilpotent block over L
  BandedOperator n_op;
  BandedOperator t_op;
  BandedOperator y_op;
  bool nu_zero_sanity = false;
  // assembled linear system A b = rhs over L, plus the equation index map
  Matrix system;
  std::vector<Scalar> rhs;
  // equation bookkeeping: block position and scalar entry of each row
  struct RowTag {
    int bi, bj;  // block position of the commutator equation
    int r, c;    // entry inside the p x p block
  };
  std::vector<RowTag> row_tags;
  int unknowns = 0;  // n^2 p^2 entries of the b_ij
};

namespace cx {

// build and window-verify the system (t^p = alpha I exact on the band,
// y idempotent, nu^p = 0 and nu^{p-1} != 0); p in {2,3,5}, n even in [2,8]
CounterexampleSystem counterexample_build(uint64_t p, int n, bool nu_zero_sanity = false);

// assemble the commutation equations and decide feasibility; Infeasible
// comes with a verified certificate row
FeasibilityVerdict counterexample_verify(uint64_t p, int n, bool nu_zero_sanity = false);
FeasibilityVerdict verify_system(const CounterexampleSystem& sys);

// the paper-shaped certificate: the alternating row combination whose
// coefficient part vanishes while the right side reproduces nu != 0;
// returns the combined rhs block (must equal +- nu)
Matrix alternating_certificate(const CounterexampleSystem& sys);

}  // namespace cx
}  // namespace exalg
