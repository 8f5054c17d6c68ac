#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exalg/matrix.hpp"

namespace exalg {

// Finite dimensional associative algebra given by structure constants
// b_i b_j = sum_k lambda^k_ij b_k. Not necessarily unital; an identity is
// detected at construction when one exists, never adjoined implicitly.
class FDAlgebra {
public:
  struct Term {
    int k;
    Scalar coeff;
  };
  using Table = std::vector<std::vector<Term>>;  // indexed i*n + j

  FDAlgebra() = default;

  // validates associativity on all basis triples; throws NonAssociative
  static FDAlgebra make(FieldRef field, int n, Table table,
                        std::vector<std::string> labels = {});
  // trusted constructor for internally derived tables (still checked in
  // debug paths via verify_associativity in tests)
  static FDAlgebra make_unchecked(FieldRef field, int n, Table table,
                                  std::vector<std::string> labels = {});

  const Field& field() const { return *field_; }
  FieldRef field_ref() const { return field_; }
  int dim() const { return n_; }
  const Table& table() const { return tab_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_unital() const { return identity_.has_value(); }
  const std::vector<Scalar>& identity() const {
    require(identity_.has_value(), Err::PreconditionFailed, "algebra has no identity");
    return *identity_;
  }

  std::vector<Scalar> zero_element() const {
    return std::vector<Scalar>(static_cast<size_t>(n_), field_->zero());
  }
  std::vector<Scalar> basis_element(int i) const;

  // coordinate product
  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> add(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> sub(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> scale(const std::vector<Scalar>& x, const Scalar& k) const;
  bool is_zero_element(const std::vector<Scalar>& x) const;
  bool eq(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  // power x^e (e >= 1)
  std::vector<Scalar> pow(const std::vector<Scalar>& x, int e) const;

  // column-convention matrices of left/right multiplication:
  // (x*y) = L(x) * y and (y*x) = R(x) * y on column coordinates
  Matrix left_mult_matrix(const std::vector<Scalar>& x) const;
  Matrix right_mult_matrix(const std::vector<Scalar>& x) const;

  // products of one fixed element against many others; builds the
  // multiplication matrix once (the dense tables make repeated mul calls
  // an order of magnitude slower)
  std::vector<std::vector<Scalar>> multiply_all(const std::vector<Scalar>& x,
                                                const std::vector<std::vector<Scalar>>& ys,
                                                bool x_on_left) const;

  bool is_idempotent(const std::vector<Scalar>& x) const;
  // x invertible in a unital algebra? returns the inverse if so
  std::optional<std::vector<Scalar>> inverse(const std::vector<Scalar>& x) const;

  // brute-force associativity scan; returns a violating triple if any
  std::optional<std::array<int, 3>> find_nonassociative_triple() const;

private:
  void detect_identity();

  FieldRef field_;
  int n_ = 0;
  Table tab_;
  std::vector<std::string> labels_;
  std::optional<std::vector<Scalar>> identity_;
};

// quotient data: pi : A -> Q with kernel J, and the deterministic linear
// section sigma given by the non-pivot coordinates of J
struct QuotientPresentation {
  FDAlgebra ambient;
  linalg::SubspaceBasis ideal;
  FDAlgebra quotient;
  Matrix projection;  // q x n, pi(x) = P * x  (column convention)
  Matrix section;     // n x q, sigma(y) = S * y

  std::vector<Scalar> project(const std::vector<Scalar>& x) const;
  std::vector<Scalar> lift(const std::vector<Scalar>& y) const;
};

// class labels carried by extension instances; certificates re-verify
// through the structure module
enum class AlgClass { Matricial, Fdss, UnitRegular, Regular, None };
const char* alg_class_name(AlgClass c);
AlgClass alg_class_from_name(const std::string& s);

struct ExtensionInstance {
  QuotientPresentation q;
  AlgClass ideal_class = AlgClass::None;
  AlgClass quotient_class = AlgClass::None;
};

// corner algebra eAe together with the embedding back into A
struct CornerAlgebra {
  FDAlgebra alg;
  Matrix embed;                  // dim_corner x n: rows are corner basis in A coords
  linalg::SubspaceBasis space;   // the subspace eAe of A
  std::vector<Scalar> idem;      // e itself

  // coordinates in the corner of an element of A lying in eAe
  std::vector<Scalar> restrict_element(const FDAlgebra& ambient,
                                       const std::vector<Scalar>& x) const;
  std::vector<Scalar> embed_element(const std::vector<Scalar>& xc) const;
};

namespace algcore {

FDAlgebra algebra_from_structure_constants(FieldRef field, int n, FDAlgebra::Table table,
                                           std::vector<std::string> labels = {});

// M_n(K) with basis e_ij (row-major labels), identity sum e_ii
FDAlgebra matrix_algebra(FieldRef field, int n);

FDAlgebra direct_sum(const std::vector<FDAlgebra>& parts);

FDAlgebra opposite(const FDAlgebra& a);

FDAlgebra tensor_product(const FDAlgebra& a, const FDAlgebra& b);

// K*1 + A for non-unital A (explicit helper; never applied implicitly)
FDAlgebra adjoin_identity(const FDAlgebra& a);

// smallest multiplicatively closed subspace containing gens (no identity
// adjoined); fixed point of span-then-multiply iteration
linalg::SubspaceBasis generated_subalgebra(const FDAlgebra& a,
                                           const std::vector<std::vector<Scalar>>& gens);

// smallest two-sided ideal containing gens
linalg::SubspaceBasis generated_ideal(const FDAlgebra& a,
                                      const std::vector<std::vector<Scalar>>& gens);

CornerAlgebra corner(const FDAlgebra& a, const std::vector<Scalar>& e);

QuotientPresentation quotient(const FDAlgebra& a, const linalg::SubspaceBasis& j);

// the subalgebra on an explicitly closed subspace, with its own table;
// throws NotASubalgebra when the subspace is not closed under products
struct Subalgebra {
  FDAlgebra alg;
  Matrix embed;  // dim_s x n
  linalg::SubspaceBasis space;

  std::vector<Scalar> restrict_element(const FDAlgebra& ambient,
                                       const std::vector<Scalar>& x) const;
  std::vector<Scalar> embed_element(const std::vector<Scalar>& xs) const;
};
Subalgebra subalgebra_on(const FDAlgebra& a, const linalg::SubspaceBasis& s);

// is the subspace closed under multiplication?
bool is_multiplicatively_closed(const FDAlgebra& a, const linalg::SubspaceBasis& s);
bool is_ideal(const FDAlgebra& a, const linalg::SubspaceBasis& s);

}  // namespace algcore
}  // namespace exalg
