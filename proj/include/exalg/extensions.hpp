#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "exalg/algebra.hpp"
#include "exalg/regtools.hpp"
#include "exalg/structure.hpp"

namespace exalg {

// every intermediate object of the subalgebra-lifting construction
struct LiftTrace {
  std::vector<std::vector<Scalar>> lifts;        // x_i with pi(x_i) = a_i
  std::vector<std::vector<Scalar>> defects;      // v_ij = x_i x_j - sum lambda x_k
  linalg::SubspaceBasis v_ideal;                 // V = sum v_ij R
  linalg::SubspaceBasis w_ideal;                 // W = V + sum x_i V
  std::vector<Scalar> f;                         // W = fR, f idempotent in J
  std::vector<std::vector<Scalar>> scaled_lifts; // g x_i with g = 1 - f
  linalg::SubspaceBasis t;                       // T = span{g x_i}
};

struct CentralizerTrace {
  std::vector<Scalar> p;                          // 1_T
  std::vector<Scalar> f;                          // capture idempotent
  std::vector<std::vector<Scalar>> quasi_inverses;  // u^(rs)_ij, flattened
  std::vector<std::vector<Scalar>> block_idempotents;  // g_s
  std::vector<std::vector<Scalar>> conjugated;          // q_s
  std::vector<Scalar> q;                          // sum q_s
  std::vector<Scalar> e;                          // q + 1 - p
};

struct TensorSplitTrace {
  int tensor_dim = 0;                    // dim of T^op (x) R acting on R
  FDAlgebra separability_witness;        // T^op (x) T with zero radical
  linalg::SubspaceBasis v;               // V = sum T y R
  std::vector<Scalar> f;                 // right-side idempotent, P = L_f
  linalg::SubspaceBasis v_left;          // V' = sum R z T
  std::vector<Scalar> g;                 // left-side idempotent
  std::vector<Scalar> e;                 // f + g - gf
};

struct FailureReport {
  bool separable = false;
  bool linear_feasible = false;
  std::string reason;
  std::optional<std::vector<Scalar>> infeasibility_certificate;
};

namespace extensions {

// Lemma-style subalgebra lifting: T with pi(T) = A, T cap J = 0, T closed.
// `lifts` optionally overrides the starting preimages sigma(a_i).
std::pair<linalg::SubspaceBasis, LiftTrace> lift_subalgebra(
    const ExtensionInstance& ext, const linalg::SubspaceBasis& a_sub,
    const std::vector<std::vector<Scalar>>* lifts = nullptr);

// idempotent e in J with Y in eJe and [e, T] = 0, for matricial T with
// R = T (+) J; follows the matrix-unit/quasi-inverse construction
std::pair<std::vector<Scalar>, CentralizerTrace> centralizing_idempotent(
    const FDAlgebra& r, const linalg::SubspaceBasis& j, const linalg::SubspaceBasis& t,
    const std::vector<std::vector<Scalar>>& y);

// matricial envelope: S containing X with an independently verified
// matrix-unit certificate
std::pair<linalg::SubspaceBasis, MatrixUnitsSystem> matricial_envelope(
    const ExtensionInstance& ext, const std::vector<std::vector<Scalar>>& x);

// T-stable idempotent via the equivariant splitting (separable T with
// 1_T = 1_R); errors NotSeparable / InfeasibleSystem
std::pair<std::vector<Scalar>, TensorSplitTrace> t_stable_idempotent(
    const FDAlgebra& r, const linalg::SubspaceBasis& j, const linalg::SubspaceBasis& t,
    const std::vector<std::vector<Scalar>>& y);

// dispatch: matricial route first, tensor route second, and a structured
// failure report when neither applies
std::variant<std::vector<Scalar>, FailureReport> condition_star_check(
    const FDAlgebra& r, const linalg::SubspaceBasis& j, const linalg::SubspaceBasis& t,
    const std::vector<std::vector<Scalar>>& y);

// finite-dimensional semisimple envelope following the case ladder
std::pair<linalg::SubspaceBasis, WedderburnReport> fdss_envelope(
    const ExtensionInstance& ext, const std::vector<std::vector<Scalar>>& x);

}  // namespace extensions
}  // namespace exalg
