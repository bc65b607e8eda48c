#include "zinbiel/matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

void check_index_width(std::size_t rows) {
  if (rows > std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("Matrix: row count " + std::to_string(rows) + " exceeds 32-bit indexing");
  }
}

// Column-by-column elimination. Pivots are keyed by the first nonzero row of
// each reduced column and normalized so that entry is 1; columns are taken in
// order, which fixes the pivot choice.
class ColumnReducer {
 public:
  explicit ColumnReducer(std::size_t rows, bool track) : pivot_of_row_(rows, kNoPivot), track_(track) {}

  // Returns true when `column` is independent of the columns seen so far.
  // With tracking on, `combo` receives the combination of original columns
  // that reduced it (meaningful when the result is false).
  bool reduce(SparseVector work, SparseVector combo) {
    while (!work.empty()) {
      const auto lead = work.front().index;
      const auto p = pivot_of_row_[lead];
      if (p == kNoPivot) {
        const Scalar inv = Scalar(1) / work.front().value;
        pivot_of_row_[lead] = pivots_.size();
        pivots_.push_back(scaled(work, inv));
        if (track_) combos_.push_back(scaled(combo, inv));
        return true;
      }
      const Scalar factor = -work.front().value;
      work = axpy(work, factor, pivots_[p]);
      if (track_) combo = axpy(combo, factor, combos_[p]);
    }
    last_kernel_ = std::move(combo);
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }
  const SparseVector& last_kernel() const { return last_kernel_; }

 private:
  std::vector<std::size_t> pivot_of_row_;
  std::vector<SparseVector> pivots_;
  std::vector<SparseVector> combos_;
  SparseVector last_kernel_;
  bool track_;
};

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) { check_index_width(rows); }

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries) {
  Matrix m(rows, cols);
  std::vector<std::vector<const Triplet*>> by_col(cols);
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw DimensionError("Matrix: triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                           ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    by_col[t.col].push_back(&t);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    auto& list = by_col[c];
    std::stable_sort(list.begin(), list.end(), [](const Triplet* a, const Triplet* b) { return a->row < b->row; });
    SparseVector col;
    for (const Triplet* t : list) {
      const auto r = static_cast<std::uint32_t>(t->row);
      if (!col.empty() && col.back().index == r) {
        col.back().value += t->value;
      } else {
        if (!col.empty() && col.back().value.is_zero()) col.pop_back();
        col.push_back({r, t->value});
      }
    }
    if (!col.empty() && col.back().value.is_zero()) col.pop_back();
    m.columns_[c] = std::move(col);
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  check_index_width(rows);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& col = columns[c];
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].index >= rows || col[k].value.is_zero() || (k > 0 && col[k - 1].index >= col[k].index)) {
        throw DimensionError("Matrix: column " + std::to_string(c) + " is not a canonical sparse vector");
      }
    }
  }
  Matrix m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("Matrix: ragged dense input");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows[r][c].is_zero()) entries.push_back({r, c, rows[r][c]});
    }
  }
  return from_triplets(rows.size(), cols, entries);
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<SparseVector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i].push_back({static_cast<std::uint32_t>(i), Scalar(1)});
  return from_columns(n, std::move(cols));
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

Scalar Matrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols()) throw DimensionError("Matrix::at: index out of range");
  const auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const SparseEntry& e, std::size_t r) { return e.index < r; });
  if (it != c.end() && it->index == row) return it->value;
  return Scalar();
}

Matrix Matrix::transpose() const {
  std::vector<SparseVector> out(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out[e.index].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return from_columns(cols(), std::move(out));
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols()));
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out[e.index][c] = e.value;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("Matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  DenseAccumulator acc(a.rows());
  std::vector<SparseVector> cols(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& e : b.column(j)) acc.add_scaled(a.column(e.index), e.value);
    cols[j] = acc.take();
  }
  return Matrix::from_columns(a.rows(), std::move(cols));
}

std::vector<Scalar> operator*(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw DimensionError("Matrix-vector product: length mismatch");
  std::vector<Scalar> out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& e : m.column(c)) out[e.index].add_product(e.value, v[c]);
  }
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
  std::vector<SparseVector> cols;
  cols.reserve(a.cols() + b.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
  return Matrix::from_columns(a.rows(), std::move(cols));
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vconcat: column counts differ");
  std::vector<SparseVector> cols(a.cols());
  const auto shift = static_cast<std::uint32_t>(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    cols[c] = a.column(c);
    for (const auto& e : b.column(c)) cols[c].push_back({e.index + shift, e.value});
  }
  return Matrix::from_columns(a.rows() + b.rows(), std::move(cols));
}

std::size_t rank(const Matrix& m) {
  // rank(m) == rank(m^T); eliminate along the shorter side.
  if (m.cols() > m.rows()) return rank(m.transpose());
  ColumnReducer reducer(m.rows(), false);
  for (std::size_t c = 0; c < m.cols(); ++c) reducer.reduce(m.column(c), {});
  return reducer.rank();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  ColumnReducer reducer(m.rows(), true);
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVector unit{{static_cast<std::uint32_t>(c), Scalar(1)}};
    if (!reducer.reduce(m.column(c), std::move(unit))) basis.push_back(to_dense(reducer.last_kernel(), m.cols()));
  }
  return basis;
}

RowEchelon row_echelon(const Matrix& m) {
  const Matrix t = m.transpose();  // columns of t are the rows of m
  std::vector<std::size_t> pivot_row(m.cols(), kNoPivot);
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < t.cols(); ++r) {
    SparseVector work = t.column(r);
    while (!work.empty()) {
      const auto lead = work.front().index;
      if (pivot_row[lead] == kNoPivot) {
        pivot_row[lead] = rows.size();
        rows.push_back(scaled(work, Scalar(1) / work.front().value));
        break;
      }
      work = axpy(work, -work.front().value, rows[pivot_row[lead]]);
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      const auto col = rows[k].front().index;
      auto it = std::lower_bound(rows[i].begin(), rows[i].end(), col,
                                 [](const SparseEntry& e, std::uint32_t c) { return e.index < c; });
      if (it != rows[i].end() && it->index == col) {
        const Scalar factor = -it->value;
        rows[i] = axpy(rows[i], factor, rows[k]);
      }
    }
  }
  RowEchelon out;
  for (auto& r : rows) out.pivots.push_back(r.front().index);
  out.rows = std::move(rows);
  return out;
}

}  // namespace zinbiel

namespace zinbiel {

std::vector<std::vector<Scalar>> dense_inverse(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("dense_inverse: matrix is not square");
    inv[i][i] = Scalar(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) throw DimensionError("dense_inverse: matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Scalar scale = Scalar(1) / m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= scale;
      inv[c][k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Scalar f = -m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k].add_product(f, m[c][k]);
        inv[r][k].add_product(f, inv[c][k]);
      }
    }
  }
  return inv;
}

}  // namespace zinbiel
