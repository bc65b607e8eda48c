#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zinbiel/scalar.hpp"

namespace zinbiel {

/// One stored coordinate of a sparse vector.
struct SparseEntry {
  std::uint32_t index;
  Scalar value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector: entries strictly increasing by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

/// Returns `a + factor * b`.
SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b);

/// Scales every entry; a zero factor yields the empty vector.
SparseVector scaled(const SparseVector& v, const Scalar& factor);

/// Builds a canonical sparse vector from a dense coefficient list.
SparseVector to_sparse(std::span<const Scalar> dense);

/// Expands into `dim` dense coefficients.
std::vector<Scalar> to_dense(const SparseVector& v, std::size_t dim);

/// Accumulates unordered contributions into a dense buffer, then emits the
/// canonical sparse form. Reusable across many sums of the same dimension.
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::size_t dim) : values_(dim), touched_flag_(dim, 0) {}

  void add(std::uint32_t index, const Scalar& value);
  void add_product(std::uint32_t index, const Scalar& a, const Scalar& b);
  void add_scaled(const SparseVector& v, const Scalar& factor);

  /// Emits the accumulated vector and resets the accumulator.
  SparseVector take();

  std::size_t dim() const { return values_.size(); }

 private:
  void touch(std::uint32_t index);

  std::vector<Scalar> values_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace zinbiel
