#pragma once

// Independent reference implementations used only by the tests. None of them
// calls the library routine it is compared against.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cochain.hpp"
#include "zinbiel/free_leibniz.hpp"
#include "zinbiel/matrix.hpp"

namespace oracle {

using zinbiel::Scalar;
using DenseMatrix = std::vector<std::vector<Scalar>>;

/// Plain Gaussian elimination on a dense row-major copy.
std::size_t dense_rank(DenseMatrix rows);

/// Linear combination of words, keyed by the word.
using WordSum = std::map<zinbiel::Word, Scalar>;

/// [X, [y_1, ..., y_q]] by repeated use of [x,[y,z]] = [[x,y],z] - [[x,z],y],
/// dropping words longer than `max_len`.
WordSum rewrite_bracket(const WordSum& x, const std::vector<std::uint32_t>& ys, std::size_t max_len);

/// t^a . t^b in k[t] with f.g = f * integral_0^t g, as a coefficient list
/// indexed by the power of t.
std::vector<Scalar> integrate_product(std::size_t a, std::size_t b);

/// Chevalley-Eilenberg differential evaluated argument tuple by argument tuple
/// from the textbook formula, with f extended alternatingly.
zinbiel::Cochain naive_ce_delta(const zinbiel::FiniteAlgebra& g, const zinbiel::BimoduleData& m,
                                const zinbiel::Cochain& f);

/// Random invertible matrix with small integer entries (unit triangular factors).
DenseMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

/// Random permutation matrix applied to rows and columns.
zinbiel::Matrix permute(const zinbiel::Matrix& m, const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm);

}  // namespace oracle
