#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hocolim/ring.hpp"

namespace hocolim {

struct Entry {
  std::size_t row;
  Scalar value;
};

/// Sparse column: entries sorted by row, no stored zeros.
using SparseColumn = std::vector<Entry>;

/// Sparse matrix over an exact ring, stored column by column.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols);

  static Matrix identity(RingSpec ring, std::size_t n);
  /// Row-major dense literal, e.g. {{2, 4}, {6, 8}}.
  static Matrix from_rows(RingSpec ring, const std::vector<std::vector<long>>& rows);
  static Matrix from_dense(RingSpec ring, std::size_t rows, std::size_t cols,
                           const std::vector<std::vector<Scalar>>& dense_rows);
  static Matrix column_vector(RingSpec ring, const std::vector<Scalar>& values);

  const RingSpec& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  bool empty() const { return rows_ == 0 || columns_.empty(); }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  const SparseColumn& column(std::size_t c) const { return columns_.at(c); }
  void set_column(std::size_t c, SparseColumn col);

  std::size_t nonzeros() const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix negated() const;
  Matrix scaled(const Scalar& s) const;
  /// Columns [first, first + count).
  Matrix column_range(std::size_t first, std::size_t count) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::vector<SparseColumn> columns_;
};

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);

/// y += s * x, both sparse columns over `ring`.
void axpy(const RingSpec& ring, const Scalar& s, const SparseColumn& x, SparseColumn& y);

/// Dense vector view of a sparse column of length n.
std::vector<Scalar> to_dense(const SparseColumn& col, std::size_t n);
SparseColumn to_sparse(const RingSpec& ring, const std::vector<Scalar>& dense);

}  // namespace hocolim
