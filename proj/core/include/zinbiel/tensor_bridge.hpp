#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cochain.hpp"
#include "zinbiel/complexes.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/matrix.hpp"

namespace zinbiel {

/// An input algebra or module failed the identity it is required to satisfy.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, AxiomReport report) : Error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// The cochain map is not injective in some degree, so the quotient complex
/// does not give a long exact sequence.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Basis element a_g (x) b_b of a tensor product, 0-based.
struct TensorBasisIndex {
  std::size_t g_index = 0;
  std::size_t b_index = 0;

  std::size_t flat(std::size_t b_dim) const { return g_index * b_dim + b_index; }
  static TensorBasisIndex from_flat(std::size_t flat, std::size_t b_dim) { return {flat / b_dim, flat % b_dim}; }
  friend bool operator==(const TensorBasisIndex&, const TensorBasisIndex&) = default;
};

enum class InputCheck { verify, trust };

/// g (x) B with (a (x) b) * (c (x) d) = [a,c] (x) b.d - [c,a] (x) d.b, tagged lie.
/// With InputCheck::verify, g must pass the Leibniz identity and B the Zinbiel
/// identity (AxiomError otherwise); the product is built either way.
FiniteAlgebra tensor_lie(const FiniteAlgebra& g, const FiniteAlgebra& b, InputCheck check = InputCheck::verify);

/// g (x) M as a module over g (x) B:
/// (a (x) b) . (c (x) m) = [a,c] (x) b.m - [c,a] (x) m.b, right action the negative.
BimoduleData tensor_module(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m,
                           InputCheck check = InputCheck::verify);

/// Left-normed bracket [[x_1, x_2], ..., x_k] of basis elements of g.
SparseVector left_normed(const FiniteAlgebra& g, const std::vector<std::uint32_t>& letters);

/// Psi(f)(x_1 (x) b_1, ..., x_n (x) b_n)
///   = sum over sigma in S_n of sgn(sigma) [x_s(1), ..., x_s(n)] (x) f(b_s(1), ..., b_s(n)).
Cochain psi_apply(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m, const Cochain& f);

/// Matrix of Psi from canonical dl coordinates of C^n(B, M) to canonical ce
/// coordinates of C^n(g (x) B, g (x) M).
Matrix psi_matrix(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m, unsigned degree);

struct ChainMapFailure {
  std::size_t trial = 0;  // 0-based
  std::string property;   // "commutation" or "dl differential squares to zero"
  Cochain cochain;        // the random dl cochain f
  std::vector<std::uint32_t> tuple;  // arguments (ce indices into g (x) B, or dl indices into B)
  SparseVector lhs;
  SparseVector rhs;
};

struct ChainMapReport {
  unsigned degree = 0;
  std::size_t trials = 0;
  std::size_t exact = 0;          // trials where both properties held
  std::size_t commuting = 0;      // trials where delta_Lie(Psi f) = Psi(delta_DL f)
  std::size_t squares_to_zero = 0;  // trials where delta_DL(delta_DL f) = 0
  std::optional<ChainMapFailure> failure;  // first failure seen

  bool passed() const { return exact == trials; }
};

/// Draws `trials` random dl cochains of degree n (see CoefficientSource) and
/// checks delta_Lie(Psi f) = Psi(delta_DL f) and delta_DL(delta_DL f) = 0
/// exactly on full coefficient tables. The inputs are not axiom-checked.
ChainMapReport verify_chain_map(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m,
                                unsigned degree, std::size_t trials, std::uint64_t seed);

struct LESRow {
  unsigned degree = 0;
  std::size_t h_dl = 0;
  std::size_t h_lie = 0;
  std::size_t h_q = 0;
  std::size_t induced_rank = 0;  // rank of H^n_DL -> H^n_Lie
  /// (h_lie - induced_rank) + (h_dl(n+1) - induced_rank(n+1))
  std::size_t h_q_predicted = 0;

  bool exact() const { return h_q == h_q_predicted; }
};

enum class Injectivity { require, skip };

/// Cohomology of 0 -> C_DL(B, M) -> C_Lie(g (x) B, g (x) M) -> Q -> 0 in
/// degrees 0..max_degree, with C^0_DL = 0.
///
/// The row for degree n reads H^{n+1}_DL through the connecting map, which is
/// well defined only when Psi is injective up to degree n+2. With
/// Injectivity::require a HypothesisError is thrown unless psi_matrix has full
/// column rank in degrees 1..max_degree+2; Injectivity::skip computes the
/// table regardless, and rows past the injective range need not be exact.
std::vector<LESRow> les_report(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m,
                               unsigned max_degree, Injectivity injectivity = Injectivity::require,
                               const DegreeLimits& limits = {});

}  // namespace zinbiel
