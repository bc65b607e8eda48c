#include "zinbiel/sparse.hpp"

#include <algorithm>

namespace zinbiel {

SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b) {
  if (factor.is_zero() || b.empty()) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->index < ia->index) {
      out.push_back({ib->index, factor * ib->value});
      ++ib;
    } else {
      Scalar v = ia->value;
      v.add_product(factor, ib->value);
      if (!v.is_zero()) out.push_back({ia->index, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Scalar& factor) {
  if (factor.is_zero()) return {};
  SparseVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, e.value * factor});
  return out;
}

SparseVector to_sparse(std::span<const Scalar> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return out;
}

std::vector<Scalar> to_dense(const SparseVector& v, std::size_t dim) {
  std::vector<Scalar> out(dim);
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

void DenseAccumulator::touch(std::uint32_t index) {
  if (!touched_flag_[index]) {
    touched_flag_[index] = 1;
    touched_.push_back(index);
  }
}

void DenseAccumulator::add(std::uint32_t index, const Scalar& value) {
  touch(index);
  values_[index] += value;
}

void DenseAccumulator::add_product(std::uint32_t index, const Scalar& a, const Scalar& b) {
  touch(index);
  values_[index].add_product(a, b);
}

void DenseAccumulator::add_scaled(const SparseVector& v, const Scalar& factor) {
  for (const auto& e : v) add_product(e.index, e.value, factor);
}

SparseVector DenseAccumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  out.reserve(touched_.size());
  for (auto i : touched_) {
    if (!values_[i].is_zero()) out.push_back({i, std::move(values_[i])});
    values_[i] = Scalar();
    touched_flag_[i] = 0;
  }
  touched_.clear();
  return out;
}

}  // namespace zinbiel
