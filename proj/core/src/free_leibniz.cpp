#include "zinbiel/free_leibniz.hpp"

#include <algorithm>
#include <map>

#include "zinbiel/combinatorics.hpp"
#include "zinbiel/errors.hpp"

namespace zinbiel {

std::vector<SignedWord> word_bracket(const Word& u, const Word& v, std::size_t max_length) {
  if (u.empty() || v.empty()) throw DimensionError("word_bracket: words must be nonempty");
  std::vector<SignedWord> out;
  if (u.size() + v.size() > max_length) return out;
  for (const auto& term : leibniz_expansion(v.size())) {
    Word w = u;
    for (unsigned k : term.perm.word()) w.push_back(v[k - 1]);
    auto it = std::find_if(out.begin(), out.end(), [&](const SignedWord& s) { return s.letters == w; });
    if (it == out.end()) {
      out.push_back({Scalar(term.sign), std::move(w)});
    } else {
      it->coeff += Scalar(term.sign);
    }
  }
  std::erase_if(out, [](const SignedWord& s) { return s.coeff.is_zero(); });
  return out;
}

std::string word_name(const Word& w, std::size_t generators) {
  std::string s;
  for (auto letter : w) {
    if (generators <= 26) {
      s.push_back(static_cast<char>('a' + letter));
    } else {
      s += "x" + std::to_string(letter + 1);
    }
  }
  return s;
}

std::vector<Word> truncated_words(std::size_t generators, std::size_t max_length) {
  std::vector<Word> words;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::uint32_t g = 0; g < generators; ++g) {
        Word x = w;
        x.push_back(g);
        next.push_back(std::move(x));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return words;
}

FiniteAlgebra build_truncated(std::size_t generators, std::size_t max_length, std::size_t dim_cap) {
  if (generators == 0 || max_length == 0) throw DimensionError("build_truncated: need m >= 1 and N >= 1");
  std::size_t dim = 0;
  std::size_t layer = 1;
  for (std::size_t len = 1; len <= max_length; ++len) {
    layer *= generators;
    dim += layer;
    if (dim > dim_cap) {
      throw CapacityError("freeleibniz(" + std::to_string(generators) + "," + std::to_string(max_length) +
                          ") would have dimension above the cap " + std::to_string(dim_cap) +
                          "; choose a smaller (m, N)");
    }
  }
  const auto words = truncated_words(generators, max_length);
  std::map<Word, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < words.size(); ++i) {
    index.emplace(words[i], i);
    names.push_back(word_name(words[i], generators));
  }
  StructureTensor product(dim, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& term : word_bracket(words[i], words[j], max_length)) {
        product.add(i, j, index.at(term.letters), term.coeff);
      }
    }
  }
  return FiniteAlgebra(AlgebraKind::leibniz, std::move(names), std::move(product));
}

}  // namespace zinbiel
