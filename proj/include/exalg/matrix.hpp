#pragma once

#include <optional>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

// Dense matrix over a supported field, row major. Vectors are rows;
// subspaces are row spans with RREF as the canonical basis.
class Matrix {
public:
  Matrix() : f_(nullptr), rows_(0), cols_(0) {}
  Matrix(const Field* f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), f->zero()) {}

  static Matrix zero(const Field& f, int rows, int cols) { return Matrix(&f, rows, cols); }
  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix row_vector(const Field& f, const std::vector<Scalar>& v);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Scalar> row(int i) const;
  void set_row(int i, const std::vector<Scalar>& v);

  bool operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const;

private:
  const Field* f_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

namespace linalg {

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& k);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix R;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  Matrix T;                 // invertible, T * M = R
};

// Fraction-free forward elimination over Q / F_p(t) (rows cleared to a
// common denominator, Bareiss updates); plain elimination elsewhere.
RrefResult rref(const Matrix& m);

// RREF without the transform (cheaper on tall systems)
struct RrefPlain {
  Matrix R;
  std::vector<int> pivots;
};
RrefPlain rref_plain(const Matrix& m);

int rank(const Matrix& m);

// rows spanning { x : x * M = 0 } -- the left kernel; and the right
// kernel { x : M * x^T = 0 } returned likewise as row vectors.
Matrix left_kernel(const Matrix& m);
Matrix right_kernel(const Matrix& m);

struct Infeasible {
  std::vector<Scalar> certificate;  // y with y*A = 0 and y*b != 0
};

// Solve A x = b (column convention). On success returns the
// lexicographically least solution in RREF order (free variables zero);
// otherwise the infeasibility certificate row.
struct SolveOutcome {
  std::optional<std::vector<Scalar>> solution;
  std::optional<Infeasible> infeasible;
};
SolveOutcome solve_linear(const Matrix& a, const std::vector<Scalar>& b);

// Solve A X = B for a matrix right-hand side; nullopt if infeasible.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

// Canonical subspace of a row space: RREF basis with zero rows dropped.
struct SubspaceBasis {
  int ambient = 0;
  Matrix basis;             // RREF, full row rank
  std::vector<int> pivots;
  bool is_ideal = false;    // set by algebra-level constructions

  int dim() const { return basis.rows(); }
  bool operator==(const SubspaceBasis& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

SubspaceBasis subspace_from_rows(const Matrix& rows);
SubspaceBasis subspace_zero(const Field& f, int ambient);
SubspaceBasis subspace_full(const Field& f, int ambient);

SubspaceBasis sum(const SubspaceBasis& u, const SubspaceBasis& v);
SubspaceBasis intersect(const SubspaceBasis& u, const SubspaceBasis& v);
bool contains(const SubspaceBasis& u, const std::vector<Scalar>& v);
bool contains(const SubspaceBasis& u, const SubspaceBasis& v);
// any direct complement W with U + W = ambient, U cap W = 0
// (standard basis vectors at the non-pivot columns)
SubspaceBasis complement(const SubspaceBasis& u);

// coordinates of v in the RREF basis of u; nullopt if v not in u
std::optional<std::vector<Scalar>> coordinates_in(const SubspaceBasis& u,
                                                  const std::vector<Scalar>& v);

}  // namespace linalg
}  // namespace exalg
