#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/scalar.hpp"

namespace zinbiel {

/// A left-normed monomial [x_{w1}, ..., x_{wk}], letters 0-based.
using Word = std::vector<std::uint32_t>;

struct SignedWord {
  Scalar coeff;
  Word letters;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

inline constexpr std::size_t kDefaultDimCap = 512;

/// Bracket of two left-normed monomials in the free Leibniz algebra, modulo
/// words longer than `max_length`. Equal words are merged, zero terms dropped;
/// terms keep the order in which they are first produced.
std::vector<SignedWord> word_bracket(const Word& u, const Word& v, std::size_t max_length);

/// Name of a word over the alphabet a, b, c, ... (x1, x2, ... beyond 26 letters).
std::string word_name(const Word& w, std::size_t generators);

/// All words of length 1..max_length over `generators` letters, ordered by
/// length and then lexicographically. This is the basis order of
/// build_truncated.
std::vector<Word> truncated_words(std::size_t generators, std::size_t max_length);

/// The free Leibniz algebra on `generators` letters modulo brackets longer
/// than `max_length`, with the left-normed words as basis.
FiniteAlgebra build_truncated(std::size_t generators, std::size_t max_length, std::size_t dim_cap = kDefaultDimCap);

}  // namespace zinbiel
