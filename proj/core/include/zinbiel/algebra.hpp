#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/scalar.hpp"
#include "zinbiel/sparse.hpp"

namespace zinbiel {

enum class AlgebraKind { leibniz, zinbiel, lie };

std::string_view to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(std::string_view text);

/// Dense coordinate vector of an element in a fixed basis.
using Element = std::vector<Scalar>;

/// Bilinear map  U x V -> W  on basis vectors: (i, j) -> sum_k c[i][j][k] w_k.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);

  std::size_t left_dim() const { return left_dim_; }
  std::size_t right_dim() const { return right_dim_; }
  std::size_t out_dim() const { return out_dim_; }

  /// Adds `value` to c[i][j][k].
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  /// Replaces the whole image of (i, j).
  void set(std::size_t i, std::size_t j, SparseVector image);

  const SparseVector& operator()(std::size_t i, std::size_t j) const { return entries_[i * right_dim_ + j]; }
  Scalar coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  /// Bilinear extension to sparse arguments.
  SparseVector apply(const SparseVector& u, const SparseVector& v) const;
  Element apply(const Element& u, const Element& v) const;

  bool is_zero() const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  void check(std::size_t i, std::size_t j) const;

  std::size_t left_dim_ = 0;
  std::size_t right_dim_ = 0;
  std::size_t out_dim_ = 0;
  std::vector<SparseVector> entries_;
};

/// Finite-dimensional algebra given by structure constants, tagged with the
/// identity it is meant to satisfy. The tag is not verified on construction.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(AlgebraKind kind, std::vector<std::string> basis, StructureTensor product);

  AlgebraKind kind() const { return kind_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const StructureTensor& product() const { return product_; }

  /// e_i * e_j as a sparse vector.
  const SparseVector& basis_product(std::size_t i, std::size_t j) const { return product_(i, j); }
  SparseVector multiply(const SparseVector& u, const SparseVector& v) const { return product_.apply(u, v); }
  Element multiply(const Element& u, const Element& v) const;

  Element basis_element(std::size_t i) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  AlgebraKind kind_ = AlgebraKind::zinbiel;
  std::vector<std::string> basis_;
  StructureTensor product_;
};

/// Left action  e_i . f_k  and right action  f_k . e_i  of an algebra on a module.
struct BimoduleData {
  std::size_t algebra_dim = 0;
  std::vector<std::string> basis;  // module basis names
  StructureTensor left;            // algebra_dim x module_dim -> module_dim
  StructureTensor right;           // module_dim x algebra_dim -> module_dim

  std::size_t module_dim() const { return basis.size(); }
  /// Throws DimensionError if the tensors do not match the declared sizes.
  void validate() const;

  friend bool operator==(const BimoduleData&, const BimoduleData&) = default;
};

/// The algebra acting on itself by its own product on both sides.
BimoduleData regular_bimodule(const FiniteAlgebra& a);
/// All actions zero on a module of the given dimension.
BimoduleData zero_bimodule(std::size_t algebra_dim, std::size_t module_dim);

enum class Identity {
  leibniz,
  zinbiel,
  lie,
  zinbiel_bimodule,
  lie_module,
  leibniz_representation,
};

std::string_view to_string(Identity id);
/// Throws ParseError on unknown names.
Identity parse_identity(std::string_view text);

/// Outcome of an exhaustive identity scan. On failure `witness` holds the
/// first violating basis tuple in lexicographic order (module basis indices
/// appear in the slot the module element occupies) and `lhs`/`rhs` are the
/// two sides evaluated there.
struct AxiomReport {
  Identity identity = Identity::leibniz;
  bool passed = true;
  std::string law;  // which equation failed, e.g. "antisymmetry"
  std::vector<std::size_t> witness;
  Element lhs;
  Element rhs;

  std::string describe(const std::vector<std::string>& names = {}) const;
};

/// Algebra identities: leibniz, zinbiel, lie.
AxiomReport check_axioms(const FiniteAlgebra& a, Identity which);
/// Module identities: zinbiel_bimodule, lie_module, leibniz_representation.
AxiomReport check_axioms(const FiniteAlgebra& a, const BimoduleData& m, Identity which);

/// Checks that x*y = x.y + y.x is commutative and associative on basis triples.
AxiomReport check_total_product(const FiniteAlgebra& a);

/// Structure constants conjugated by an invertible change of basis:
/// new e'_i = sum_j p[j][i] e_j (columns of p are the new basis vectors).
FiniteAlgebra change_basis(const FiniteAlgebra& a, const std::vector<std::vector<Scalar>>& p);

}  // namespace zinbiel
