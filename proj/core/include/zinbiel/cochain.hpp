#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/scalar.hpp"
#include "zinbiel/sparse.hpp"

namespace zinbiel {

/// dl: dual Leibniz cochains, arbitrary n-tuples.
/// ce: Chevalley-Eilenberg cochains, alternating, stored on increasing tuples.
enum class Theory { dl, ce };

std::string_view to_string(Theory t);
Theory parse_theory(std::string_view text);

/// Enumerates the index tuples carrying a cochain's coefficients.
/// dl: all of {0..dim-1}^degree, ranked lexicographically (last slot fastest).
/// ce: strictly increasing tuples, ranked lexicographically.
class TupleSpace {
 public:
  TupleSpace(Theory theory, std::size_t dim, unsigned degree);

  Theory theory() const { return theory_; }
  std::size_t dim() const { return dim_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return size_; }

  /// Rank of a tuple that lies in this space (increasing for ce).
  std::uint64_t rank(std::span<const std::uint32_t> tuple) const;
  void unrank(std::uint64_t r, std::span<std::uint32_t> out) const;

 private:
  // Number of increasing tuples of length `len` drawn from {from..dim-1}.
  std::uint64_t tail_count(std::size_t from, std::size_t len) const;

  Theory theory_;
  std::size_t dim_;
  unsigned degree_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Sorts a tuple in place and returns the sign of the sorting permutation,
/// or 0 when two entries coincide.
int sort_with_sign(std::span<std::uint32_t> tuple);

/// A degree-n multilinear map from an algebra into a module, stored sparsely
/// as tuple -> module vector. Coordinates in the canonical basis of C^n are
/// module_index * tuples().size() + tuple_rank.
class Cochain {
 public:
  Cochain(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim);

  Theory theory() const { return tuples_.theory(); }
  unsigned degree() const { return tuples_.degree(); }
  std::size_t algebra_dim() const { return tuples_.dim(); }
  std::size_t module_dim() const { return module_dim_; }
  const TupleSpace& tuples() const { return tuples_; }
  /// Dimension of the cochain space C^n.
  std::size_t space_dimension() const { return tuples_.size() * module_dim_; }

  /// Stored (nonzero) values keyed by tuple rank.
  const std::map<std::uint64_t, SparseVector>& table() const { return table_; }
  const SparseVector* find(std::uint64_t tuple_rank) const;

  /// Value on basis arguments. ce cochains extend alternatingly: arguments
  /// are sorted with the permutation sign and repeated arguments give 0.
  SparseVector value(std::span<const std::uint32_t> tuple) const;
  Element value_dense(std::span<const std::uint32_t> tuple) const;

  /// Adds factor * v at the given arguments (normalized alternatingly for ce).
  void add(std::span<const std::uint32_t> tuple, const SparseVector& v, const Scalar& factor = Scalar(1));
  void add_at_rank(std::uint64_t tuple_rank, const SparseVector& v, const Scalar& factor = Scalar(1));
  void set_at_rank(std::uint64_t tuple_rank, SparseVector v);

  bool is_zero() const { return table_.empty(); }

  SparseVector coordinates() const;
  static Cochain from_coordinates(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim,
                                  const SparseVector& coords);
  static Cochain basis(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim,
                       std::size_t coordinate);

  Cochain& operator+=(const Cochain& other);
  Cochain& operator*=(const Scalar& factor);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator*(Cochain a, const Scalar& s) { return a *= s; }

  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void check_shape(const Cochain& other) const;

  TupleSpace tuples_;
  std::size_t module_dim_;
  std::map<std::uint64_t, SparseVector> table_;
};

}  // namespace zinbiel
