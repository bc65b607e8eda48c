#pragma once

#include <cstddef>
#include <vector>

namespace zinbiel {

/// Permutation of {1, ..., n} in one-line notation: word()[k-1] is the image of k.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `word` is a bijection of {1, ..., word.size()}.
  static Permutation from_word(std::vector<unsigned> word);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return word_.size(); }
  const std::vector<unsigned>& word() const { return word_; }
  /// Image of k, 1-based.
  unsigned operator()(unsigned k) const { return word_.at(k - 1); }

  Permutation inverse() const;
  /// Composition (this o other): k -> this(other(k)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<unsigned> word) : word_(std::move(word)) {}
  std::vector<unsigned> word_;
};

/// +1 or -1.
int permutation_sign(const Permutation& p);

/// Convenience overload: validates `word` first.
int permutation_sign(const std::vector<unsigned>& word);

struct SignedPermutation {
  int sign = 1;
  Permutation perm;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// A pair of complementary increasing sequences partitioning {1, ..., s+t}.
struct Shuffle {
  std::vector<unsigned> alpha;  // length s, alpha[0] == 1
  std::vector<unsigned> beta;   // length t

  friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

/// (s,t)-shuffles with 1 pinned as the first ascending letter; s >= 1.
/// Ordered lexicographically by alpha. There are C(s+t-1, t) of them.
std::vector<Shuffle> shuffles1(std::size_t s, std::size_t t);

/// Signed words expressing [x, [y1, ..., ym]] as a sum of left-normed
/// brackets [x, y_w(1), ..., y_w(m)].
/// For i = 0..m-1 and (alpha, beta) in shuffles1(m-i, i) the word is
/// (beta_i, ..., beta_1, alpha_1, ..., alpha_{m-i}) with sign (-1)^i.
std::vector<SignedPermutation> leibniz_expansion(std::size_t m);

/// The signed shuffle set of the dual Leibniz differential, one entry per
/// (i, (alpha, beta)): sigma is the inverse of the word above and the sign is
/// (-1)^i sgn(sigma). Entries are emitted raw, without merging equal sigmas.
std::vector<SignedPermutation> signed_shuffle_terms(std::size_t n);

/// signed_shuffle_terms(n) with equal permutations merged and cancelled
/// terms removed; first-appearance order is kept.
std::vector<SignedPermutation> net_signed_shuffles(std::size_t n);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Binomial coefficient C(n, k); 0 when k > n.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace zinbiel
