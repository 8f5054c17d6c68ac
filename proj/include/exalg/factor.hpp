#pragma once

#include <vector>

#include "exalg/field.hpp"
#include "exalg/poly.hpp"

namespace exalg {
namespace factor {

struct Factorization {
  Scalar unit;                                // leading unit
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization into irreducibles over the supported scope:
//   F_p and finite extensions  - any degree (Berlekamp)
//   Q                          - rational roots at any degree, full logic
//                                through degree 4 on the root-free part
//   F_p(t)                     - linear factors, inseparable reduction and
//                                binomials; separable root-free parts of
//                                degree >= 4 are out of scope
// Throws UnsupportedField when the polynomial falls outside the scope.
Factorization factor(const Field& F, const Poly& f);

// Decides irreducibility within the same scope.
bool is_irreducible(const Field& F, const Poly& f);

// Squarefree part (product of the distinct irreducible factors); exact
// over every supported field, no irreducibility machinery needed.
Poly squarefree_part(const Field& F, const Poly& f);

// All roots of f lying in F (with multiplicity stripped); complete over
// the supported scope for the linear-factor search.
std::vector<Scalar> roots(const Field& F, const Poly& f);

}  // namespace factor
}  // namespace exalg
