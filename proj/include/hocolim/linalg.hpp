#pragma once

#include <optional>
#include <vector>

#include "hocolim/matrix.hpp"

namespace hocolim {

/// left * A * right = D where D carries `diagonal` in positions (i, i).
struct SmithDecomposition {
  /// Nonzero diagonal entries d_1 | d_2 | ... (all 1 over a field).
  std::vector<Scalar> diagonal;
  Matrix left;
  Matrix right;

  std::size_t rank() const { return diagonal.size(); }
  Matrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithDecomposition smith_normal_form(const Matrix& a);

/// Some x with a * x = b (b may have several columns), or nullopt if none
/// exists over the ring of `a`.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Columns span ker(a); over Z they generate it as a Z-module.
Matrix kernel_basis(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Gaussian column reduction over a field, keeping the column transform so
/// that reduced = a * transform. Reusable for many right-hand sides.
class ColumnReducer {
 public:
  explicit ColumnReducer(const Matrix& a, bool track_transform = true);

  std::size_t rank() const { return pivot_columns_.size(); }
  /// Indices of columns of `a` forming a basis of its column space.
  const std::vector<std::size_t>& pivot_columns() const { return pivot_columns_; }
  Matrix kernel() const;
  /// x with a * x = b, or nullopt.
  std::optional<SparseColumn> solve(const SparseColumn& b) const;
  bool in_span(const SparseColumn& b) const;

 private:
  SparseColumn reduce(SparseColumn b, SparseColumn* combination) const;

  RingSpec ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool track_;
  std::vector<SparseColumn> reduced_;
  std::vector<SparseColumn> transform_;
  std::vector<long> pivot_of_row_;
  std::vector<std::size_t> pivot_columns_;
};

/// Dimension of the span of the given columns (field only).
std::size_t span_dimension(const Matrix& columns);

}  // namespace hocolim

namespace hocolim {

/// The quotient Z / B of column spans B ⊆ Z ⊆ F^n over a field, with a
/// chosen basis of representatives.
class Subquotient {
 public:
  Subquotient(const Matrix& z_span, const Matrix& b_span);

  std::size_t dimension() const { return representatives_.cols(); }
  /// n x dimension; columns are representatives of a basis.
  const Matrix& representatives() const { return representatives_; }
  /// Coordinates of the class of v, or nullopt if v is not in Z.
  std::optional<std::vector<Scalar>> coordinates(const SparseColumn& v) const;
  /// True iff v lies in B.
  bool is_trivial(const SparseColumn& v) const;

 private:
  std::size_t b_cols_ = 0;
  Matrix representatives_;
  ColumnReducer b_reducer_;
  ColumnReducer full_reducer_;
};

}  // namespace hocolim
