#include "zinbiel/cochain.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zinbiel/errors.hpp"

namespace zinbiel {

std::string_view to_string(Theory t) { return t == Theory::dl ? "dl" : "ce"; }

Theory parse_theory(std::string_view text) {
  if (text == "dl") return Theory::dl;
  if (text == "ce") return Theory::ce;
  throw ParseError("unknown complex '" + std::string(text) + "' (expected dl or ce)");
}

// ---------------------------------------------------------------------------
// TupleSpace

namespace {

constexpr std::uint64_t kMaxTuples = std::uint64_t{1} << 32;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxTuples / a) throw CapacityError("cochain space too large");
  return a * b;
}

}  // namespace

TupleSpace::TupleSpace(Theory theory, std::size_t dim, unsigned degree)
    : theory_(theory), dim_(dim), degree_(degree) {
  if (theory == Theory::dl) {
    std::uint64_t n = 1;
    for (unsigned k = 0; k < degree; ++k) n = checked_mul(n, dim);
    size_ = n;
    return;
  }
  // binom_[n][k] = C(n, k) for n <= dim, k <= degree
  binom_.assign(dim + 1, std::vector<std::uint64_t>(degree + 1, 0));
  for (std::size_t n = 0; n <= dim; ++n) {
    binom_[n][0] = 1;
    for (std::size_t k = 1; k <= degree && k <= n; ++k) {
      binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
      if (binom_[n][k] > kMaxTuples) throw CapacityError("cochain space too large");
    }
  }
  size_ = degree <= dim ? binom_[dim][degree] : 0;
}

std::uint64_t TupleSpace::tail_count(std::size_t from, std::size_t len) const {
  if (from > dim_) return len == 0 ? 1 : 0;
  const std::size_t avail = dim_ - from;
  return len <= avail ? binom_[avail][len] : 0;
}

std::uint64_t TupleSpace::rank(std::span<const std::uint32_t> tuple) const {
  if (tuple.size() != degree_) throw DimensionError("TupleSpace::rank: tuple length does not match degree");
  std::uint64_t r = 0;
  if (theory_ == Theory::dl) {
    for (auto v : tuple) {
      if (v >= dim_) throw DimensionError("TupleSpace::rank: index out of range");
      r = r * dim_ + v;
    }
    return r;
  }
  // Lexicographic rank among increasing tuples: count the tuples that agree on
  // a prefix and take a smaller value at the next slot.
  std::size_t lo = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const auto v = tuple[k];
    if (v >= dim_ || v < lo) throw DimensionError("TupleSpace::rank: ce tuple must be strictly increasing");
    const std::size_t remaining = degree_ - k - 1;
    for (std::size_t w = lo; w < v; ++w) r += tail_count(w + 1, remaining);
    lo = v + 1;
  }
  return r;
}

void TupleSpace::unrank(std::uint64_t r, std::span<std::uint32_t> out) const {
  if (out.size() != degree_ || r >= size_) throw DimensionError("TupleSpace::unrank: rank or length out of range");
  if (theory_ == Theory::dl) {
    for (std::size_t k = degree_; k-- > 0;) {
      out[k] = static_cast<std::uint32_t>(r % dim_);
      r /= dim_;
    }
    return;
  }
  std::size_t w = 0;
  for (std::size_t k = 0; k < degree_; ++k) {
    const std::size_t remaining = degree_ - k - 1;
    while (true) {
      const auto c = tail_count(w + 1, remaining);
      if (r < c) break;
      r -= c;
      ++w;
    }
    out[k] = static_cast<std::uint32_t>(w);
    ++w;
  }
}

int sort_with_sign(std::span<std::uint32_t> tuple) {
  int sign = 1;
  // Insertion sort; tuples are short.
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  return sign;
}

// ---------------------------------------------------------------------------
// Cochain

Cochain::Cochain(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim)
    : tuples_(theory, algebra_dim, degree), module_dim_(module_dim) {
  if (theory == Theory::dl && degree == 0) throw DimensionError("dl cochains start in degree 1");
}

const SparseVector* Cochain::find(std::uint64_t tuple_rank) const {
  auto it = table_.find(tuple_rank);
  return it == table_.end() ? nullptr : &it->second;
}

SparseVector Cochain::value(std::span<const std::uint32_t> tuple) const {
  if (theory() == Theory::dl) {
    const auto* v = find(tuples_.rank(tuple));
    return v ? *v : SparseVector{};
  }
  std::vector<std::uint32_t> sorted(tuple.begin(), tuple.end());
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return {};
  const auto* v = find(tuples_.rank(sorted));
  if (!v) return {};
  return sign > 0 ? *v : scaled(*v, Scalar(-1));
}

Element Cochain::value_dense(std::span<const std::uint32_t> tuple) const { return to_dense(value(tuple), module_dim_); }

void Cochain::add(std::span<const std::uint32_t> tuple, const SparseVector& v, const Scalar& factor) {
  if (theory() == Theory::dl) {
    add_at_rank(tuples_.rank(tuple), v, factor);
    return;
  }
  std::vector<std::uint32_t> sorted(tuple.begin(), tuple.end());
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return;
  add_at_rank(tuples_.rank(sorted), v, sign > 0 ? factor : -factor);
}

void Cochain::add_at_rank(std::uint64_t tuple_rank, const SparseVector& v, const Scalar& factor) {
  if (v.empty() || factor.is_zero()) return;
  if (!v.empty() && v.back().index >= module_dim_) throw DimensionError("Cochain: module index out of range");
  auto [it, inserted] = table_.try_emplace(tuple_rank);
  it->second = axpy(it->second, factor, v);
  if (it->second.empty()) table_.erase(it);
}

void Cochain::set_at_rank(std::uint64_t tuple_rank, SparseVector v) {
  if (tuple_rank >= tuples_.size()) throw DimensionError("Cochain: tuple rank out of range");
  if (v.empty()) {
    table_.erase(tuple_rank);
  } else {
    table_[tuple_rank] = std::move(v);
  }
}

SparseVector Cochain::coordinates() const {
  const std::uint64_t n = tuples_.size();
  std::vector<SparseEntry> out;
  for (const auto& [r, v] : table_) {
    for (const auto& e : v) out.push_back({static_cast<std::uint32_t>(e.index * n + r), e.value});
  }
  std::sort(out.begin(), out.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  return out;
}

Cochain Cochain::from_coordinates(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim,
                                  const SparseVector& coords) {
  Cochain c(theory, degree, algebra_dim, module_dim);
  const std::uint64_t n = c.tuples_.size();
  for (const auto& e : coords) {
    if (e.index >= n * module_dim) throw DimensionError("Cochain::from_coordinates: coordinate out of range");
    c.add_at_rank(e.index % n, {{static_cast<std::uint32_t>(e.index / n), e.value}});
  }
  return c;
}

Cochain Cochain::basis(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim,
                       std::size_t coordinate) {
  return from_coordinates(theory, degree, algebra_dim, module_dim,
                          {{static_cast<std::uint32_t>(coordinate), Scalar(1)}});
}

void Cochain::check_shape(const Cochain& other) const {
  if (theory() != other.theory() || degree() != other.degree() || algebra_dim() != other.algebra_dim() ||
      module_dim() != other.module_dim()) {
    throw DimensionError("Cochain: shapes differ");
  }
}

Cochain& Cochain::operator+=(const Cochain& other) {
  check_shape(other);
  for (const auto& [r, v] : other.table_) add_at_rank(r, v);
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& factor) {
  if (factor.is_zero()) {
    table_.clear();
    return *this;
  }
  for (auto& [r, v] : table_) v = scaled(v, factor);
  return *this;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.theory() == b.theory() && a.degree() == b.degree() && a.algebra_dim() == b.algebra_dim() &&
         a.module_dim() == b.module_dim() && a.table_ == b.table_;
}

}  // namespace zinbiel
