#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exalg/algebra.hpp"

namespace exalg {

// one semisimple block M_n(K[X]/m); an empty minpoly means M_n(K)
struct BlockSpec {
  int n = 1;
  std::vector<std::string> division_minpoly;  // base-field scalar strings, monic
};

struct ExtensionProfile {
  std::vector<BlockSpec> ideal_blocks;
  std::vector<BlockSpec> quotient_blocks;
};

struct GeneratedExtension {
  ExtensionInstance inst;
  // pre-scramble oracle data
  std::vector<int> ideal_sizes;
  std::vector<int> quotient_sizes;
  Matrix basis_change;  // rows = new basis in standard coordinates
};

struct GeneratedNonSemisimple {
  FDAlgebra alg;
  linalg::SubspaceBasis known_radical;  // oracle
};

namespace gen {

// K[X]/(m) as a K-algebra (m irreducible; this is a field component)
FDAlgebra extension_component(FieldRef field, const std::vector<std::string>& minpoly);

FDAlgebra standard_semisimple(FieldRef field, const std::vector<BlockSpec>& blocks);

Matrix random_invertible(const Field& f, int n, SplitMix64& rng);

// new basis b'_i = sum_j P_ij b_j; elements transform by v' = v P^{-1}
FDAlgebra change_basis(const FDAlgebra& a, const Matrix& p);
std::vector<Scalar> transform_row(const Matrix& p_inv, const std::vector<Scalar>& v);

// deterministic seeded extension instance: R = scramble(J_std (+) Q_std)
// with the ideal J and its quotient presentation; total dim <= 64
GeneratedExtension generate_random_extension(uint64_t seed, FieldRef field,
                                             const ExtensionProfile& profile);

// seeded non-semisimple algebra with a known radical (scrambled sums of
// triangular and M_n(K[x]/(x^2)) blocks)
GeneratedNonSemisimple generate_nonsemisimple(uint64_t seed, FieldRef field, int max_dim);

// scramble of a direct sum of full matrix algebras; returns the algebra
// and the oracle multiset of sizes
struct GeneratedMatricial {
  FDAlgebra alg;
  std::vector<int> sizes;
};
GeneratedMatricial generate_scrambled_matricial(uint64_t seed, FieldRef field,
                                                const std::vector<int>& sizes);

}  // namespace gen
}  // namespace exalg
