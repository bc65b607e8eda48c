#include "zinbiel/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zinbiel/errors.hpp"

namespace zinbiel {

Permutation Permutation::from_word(std::vector<unsigned> word) {
  std::vector<bool> seen(word.size() + 1, false);
  for (unsigned v : word) {
    if (v == 0 || v > word.size() || seen[v]) {
      throw DimensionError("Permutation: entry " + std::to_string(v) + " repeated or outside 1.." +
                           std::to_string(word.size()));
    }
    seen[v] = true;
  }
  return Permutation(std::move(word));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<unsigned> w(n);
  std::iota(w.begin(), w.end(), 1u);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(word_.size());
  for (std::size_t k = 0; k < word_.size(); ++k) inv[word_[k] - 1] = static_cast<unsigned>(k + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("Permutation::compose: size mismatch");
  std::vector<unsigned> w(size());
  for (std::size_t k = 0; k < size(); ++k) w[k] = word_[other.word_[k] - 1];
  return Permutation(std::move(w));
}

int permutation_sign(const Permutation& p) {
  // Parity from the cycle decomposition: each cycle of length L contributes L-1 transpositions.
  const auto& w = p.word();
  std::vector<bool> visited(w.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !visited[k]; k = w[k] - 1) {
      visited[k] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

int permutation_sign(const std::vector<unsigned>& word) { return permutation_sign(Permutation::from_word(word)); }

std::vector<Shuffle> shuffles1(std::size_t s, std::size_t t) {
  if (s == 0) throw DimensionError("shuffles1: the ascending block must be nonempty (s >= 1)");
  const std::size_t n = s + t;
  std::vector<Shuffle> out;
  // Choose the s-1 letters of alpha after the pinned 1 from {2..n}, lexicographically.
  std::vector<bool> pick(n - 1, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s - 1), true);
  do {
    Shuffle sh;
    sh.alpha.push_back(1);
    for (std::size_t k = 0; k < n - 1; ++k) {
      (pick[k] ? sh.alpha : sh.beta).push_back(static_cast<unsigned>(k + 2));
    }
    out.push_back(std::move(sh));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

namespace {

// Walks every (i, shuffle) pair and hands over (i, word).
template <typename Fn>
void for_each_expansion_word(std::size_t m, Fn&& fn) {
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& sh : shuffles1(m - i, i)) {
      std::vector<unsigned> word(sh.beta.rbegin(), sh.beta.rend());
      word.insert(word.end(), sh.alpha.begin(), sh.alpha.end());
      fn(i, std::move(word));
    }
  }
}

}  // namespace

std::vector<SignedPermutation> leibniz_expansion(std::size_t m) {
  if (m == 0) throw DimensionError("leibniz_expansion: m must be >= 1");
  std::vector<SignedPermutation> out;
  for_each_expansion_word(m, [&](std::size_t i, std::vector<unsigned> word) {
    out.push_back({i % 2 == 0 ? 1 : -1, Permutation::from_word(std::move(word))});
  });
  return out;
}

std::vector<SignedPermutation> signed_shuffle_terms(std::size_t n) {
  if (n == 0) throw DimensionError("signed_shuffle_terms: n must be >= 1");
  std::vector<SignedPermutation> out;
  for_each_expansion_word(n, [&](std::size_t i, std::vector<unsigned> word) {
    Permutation sigma = Permutation::from_word(std::move(word)).inverse();
    const int sign = (i % 2 == 0 ? 1 : -1) * permutation_sign(sigma);
    out.push_back({sign, std::move(sigma)});
  });
  return out;
}

std::vector<SignedPermutation> net_signed_shuffles(std::size_t n) {
  std::vector<SignedPermutation> merged;
  for (auto& term : signed_shuffle_terms(n)) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const SignedPermutation& m) { return m.perm == term.perm; });
    if (it == merged.end()) {
      merged.push_back(std::move(term));
    } else {
      it->sign += term.sign;
    }
  }
  std::erase_if(merged, [](const SignedPermutation& m) { return m.sign == 0; });
  for (const auto& m : merged) {
    if (m.sign != 1 && m.sign != -1) throw DimensionError("net_signed_shuffles: coefficient outside {+1,-1}");
  }
  return merged;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<unsigned> w(n);
  std::iota(w.begin(), w.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_word(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace zinbiel
