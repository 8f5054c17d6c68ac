#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exalg/algebra.hpp"
#include "exalg/poly.hpp"

namespace exalg {

// one simple component of the semisimple quotient
struct WedderburnComponent {
  std::vector<Scalar> central_idempotent;  // coordinates in the analyzed algebra
  int dim = 0;                             // dim_K of the component
  int matrix_size = 0;                     // n_s
  int division_dim = 0;                    // d_s = dim_K of the division corner
  bool split = false;                      // d_s == 1
};

// semisimplicity certificate. When the algebra has a radical, the
// component data describes A/rad and `quotient` carries the presentation.
struct WedderburnReport {
  linalg::SubspaceBasis radical;
  bool semisimple = false;
  std::vector<WedderburnComponent> components;
  bool matricial = false;
  bool fdss = false;
  std::optional<QuotientPresentation> quotient;  // present when radical != 0
};

// full set of matrix units e^(s)_ij spanning a matricial subalgebra
struct MatrixUnitsSystem {
  std::vector<int> sizes;                                         // n_1..n_t
  std::vector<std::vector<std::vector<std::vector<Scalar>>>> units;  // [s][i][j] -> coords
  std::vector<std::vector<Scalar>> block_identities;              // p_s

  int block_count() const { return static_cast<int>(sizes.size()); }
};

struct MatricialResult {
  bool matricial = false;
  std::optional<MatrixUnitsSystem> units;
  std::string reason;  // "radical != 0" | "non-split component" | "no identity"
};

namespace structure {

// Jacobson radical. Characteristic 0: kernel of the trace form of the
// regular representation. Characteristic p: trace-form kernel followed by
// the iterated charpoly-coefficient chain, with the p^i-semilinear systems
// solved exactly over F_p, finite fields, and F_p(t).
linalg::SubspaceBasis radical(const FDAlgebra& a);

// pre: a unital
WedderburnReport wedderburn(const FDAlgebra& a);

MatricialResult is_matricial(const FDAlgebra& a);

// matrix units for a split simple component of a semisimple unital
// algebra; errors NotSplit / NotSimple
MatrixUnitsSystem matrix_units(const FDAlgebra& a, const WedderburnReport& report,
                               int component);

// least n with x^n = 0 for every nilpotent x = max matrix size;
// errors NotSemisimple
int index_of_nilpotence(const FDAlgebra& a);

// --- helpers shared with the extension pipelines ---

// minimal polynomial of x in the unital algebra (e plays the identity);
// monic over the coefficient field
Poly min_poly(const FDAlgebra& a, const std::vector<Scalar>& identity,
              const std::vector<Scalar>& x);

// a proper idempotent of the unital algebra when one can be found
// (min-poly splitting candidates, then p-adic lifting over Q);
// nullopt when the algebra behaves like a division algebra
std::optional<std::vector<Scalar>> find_proper_idempotent(const FDAlgebra& a);

// a primitive idempotent of a unital semisimple algebra
std::vector<Scalar> primitive_idempotent(const FDAlgebra& a);

// is T separable over its base field, i.e. radical(T^op (x) T) = 0
bool is_separable(const FDAlgebra& t);

// characteristic polynomial (monic, deg = n) of a square matrix
Poly charpoly(const Matrix& m);

}  // namespace structure
}  // namespace exalg
