#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zinbiel/scalar.hpp"
#include "zinbiel/sparse.hpp"

namespace zinbiel {

/// (row, column, value) input record for `Matrix::from_triplets`.
struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Sparse exact matrix, stored column by column. Immutable once built: no
/// stored entry is zero and every index lies inside the shape.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  /// Duplicated positions are summed; zero sums are dropped.
  static Matrix from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries);
  /// Each column must be a canonical SparseVector with indices below `rows`.
  static Matrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const;

  Scalar at(std::size_t row, std::size_t col) const;
  const SparseVector& column(std::size_t col) const { return columns_.at(col); }

  Matrix transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Scalar> operator*(const Matrix& m, std::span<const Scalar> v);

/// Side-by-side concatenation [a | b]; row counts must agree.
Matrix hconcat(const Matrix& a, const Matrix& b);
/// Stacks a above b; column counts must agree.
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Exact rank over the rationals.
std::size_t rank(const Matrix& m);

/// A basis of ker(m) as dense column vectors; its length is cols - rank.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Reduced row echelon form of the row space of `m`.
struct RowEchelon {
  /// Nonzero rows only, each with leading coefficient 1 at `pivots[i]`.
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const Matrix& m);

}  // namespace zinbiel

namespace zinbiel {

/// Inverse of a square dense matrix; throws DimensionError when singular.
std::vector<std::vector<Scalar>> dense_inverse(std::vector<std::vector<Scalar>> m);

}  // namespace zinbiel
