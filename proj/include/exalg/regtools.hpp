#pragma once

#include <optional>
#include <vector>

#include "exalg/algebra.hpp"
#include "exalg/structure.hpp"

namespace exalg {

struct RegularityWitness {
  std::vector<Scalar> x;
  std::vector<Scalar> y;  // quasi-inverse: xyx = x, yxy = y
  std::optional<std::vector<Scalar>> unit;      // u with xux = x
  std::optional<std::vector<Scalar>> unit_inv;  // u^{-1}
};

namespace regtools {

// y with xyx = x and yxy = y; deterministic (lexicographically least
// solution of the linear system xzx = x, then reflexive normalization
// y = zxz). Errors: NotRegularElement.
std::vector<Scalar> quasi_inverse(const FDAlgebra& a, const std::vector<Scalar>& x);

// idempotent f with fW = W pointwise for W = sum gens*A (gens adjoined,
// which changes nothing over a regular algebra); f*w = w for every basis
// w of W, f in W. Errors: InfeasibleSystem.
std::vector<Scalar> idempotent_right_generator(const FDAlgebra& a,
                                               const std::vector<std::vector<Scalar>>& gens);
// left-sided twin: w*g = w for every w in W = sum A*gens
std::vector<Scalar> idempotent_left_generator(const FDAlgebra& a,
                                              const std::vector<std::vector<Scalar>>& gens);

// idempotent e with exe = ex = xe = x for all x in X, built as
// e = f + g - gf from one-sided generators; X = {} gives e = 0.
std::vector<Scalar> corner_capture(const FDAlgebra& a,
                                   const std::vector<std::vector<Scalar>>& xs);

// unit u of the matricial algebra with xux = x, via blockwise rank
// factorization through the matrix-unit coordinates. The certificate is
// computed when not supplied. Errors: NotMatricial.
RegularityWitness unit_regular_witness(const FDAlgebra& a, const std::vector<Scalar>& x,
                                       const MatrixUnitsSystem* units = nullptr);

// the 2n x 2n embedding trick: e = I_2n, u = [[y, I],[I, 0]],
// u^{-1} = [[0, I],[I, -y]]; pre xyx = x
struct EmbeddedWitness {
  Matrix e;
  Matrix u;
  Matrix u_inv;
};
EmbeddedWitness embed_unit_regular_witness(const Matrix& x, const Matrix& y);

// w = v + 1_R - 1_T with v in T, pi(v) = u_bar; w is a unit of R.
// Errors: NotAUnit (u_bar not invertible), NotASplitting (pi|_T not an
// isomorphism onto R/J).
std::vector<Scalar> lift_unit_through_splitting(const QuotientPresentation& q,
                                                const linalg::SubspaceBasis& t,
                                                const std::vector<Scalar>& u_bar);

// exhaustive lifting check for units of eRe/eJe over a small finite
// field (the only decision procedure available for the corner condition);
// enumeration capped at 3^12 corner elements
struct UnitLiftReport {
  bool all_lift = false;
  uint64_t units_checked = 0;
  std::optional<std::vector<Scalar>> failing_unit;  // coords in the corner quotient
};
UnitLiftReport units_lift_exhaustively(const FDAlgebra& r, const linalg::SubspaceBasis& j,
                                       const std::vector<Scalar>& e);

}  // namespace regtools
}  // namespace exalg
