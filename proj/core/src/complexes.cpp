#include "zinbiel/complexes.hpp"

#include <functional>
#include <string>
#include <vector>

#include "zinbiel/combinatorics.hpp"
#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

void check_module(const FiniteAlgebra& a, const BimoduleData& m, const Cochain& f) {
  m.validate();
  if (m.algebra_dim != a.dim()) throw DimensionError("module is over an algebra of different dimension");
  if (f.algebra_dim() != a.dim() || f.module_dim() != m.module_dim()) {
    throw DimensionError("cochain shape does not match algebra and module");
  }
}

void check_degree(unsigned degree, unsigned cap, const char* what) {
  if (degree > cap) {
    throw CapacityError(std::string(what) + " degree " + std::to_string(degree) + " exceeds the configured cap " +
                        std::to_string(cap));
  }
}

Scalar alternating(std::size_t i) { return Scalar(i % 2 == 0 ? 1 : -1); }

}  // namespace

Cochain dl_delta(const FiniteAlgebra& b, const BimoduleData& m, const Cochain& f, const DegreeLimits& limits) {
  if (b.kind() != AlgebraKind::zinbiel) throw DimensionError("dl_delta: algebra must be tagged zinbiel");
  if (f.theory() != Theory::dl) throw DimensionError("dl_delta: expected a dl cochain");
  check_module(b, m, f);
  const unsigned n = f.degree();
  check_degree(n, limits.dl, "dl");

  const std::size_t d = b.dim();
  const std::size_t md = m.module_dim();
  Cochain out(Theory::dl, n + 1, d, md);
  const TupleSpace& in_space = f.tuples();
  const TupleSpace& out_space = out.tuples();

  const auto shuffles = signed_shuffle_terms(n);
  std::vector<std::uint32_t> x(n + 1);
  std::vector<std::uint32_t> args(n);
  DenseAccumulator inner(md);
  DenseAccumulator acc(md);

  auto f_at = [&](std::span<const std::uint32_t> tuple) { return f.find(in_space.rank(tuple)); };

  for (std::uint64_t r = 0; r < out_space.size(); ++r) {
    out_space.unrank(r, x);

    // x_1 . sum sgn(sigma) f(x_{1+sigma(1)}, ..., x_{1+sigma(n)})
    for (const auto& term : shuffles) {
      for (unsigned k = 0; k < n; ++k) args[k] = x[term.perm(k + 1)];
      if (const auto* v = f_at(args)) inner.add_scaled(*v, Scalar(term.sign));
    }
    const SparseVector summed = inner.take();
    if (!summed.empty()) acc.add_scaled(m.left.apply({{x[0], Scalar(1)}}, summed), Scalar(1));

    // Interior products: (-1)^i f(.., x_i.x_{i+1}, ..) for i = 1..n and
    // (-1)^i f(.., x_{i+1}.x_i, ..) for i = 2..n.
    for (unsigned i = 1; i <= n; ++i) {
      for (int swapped = 0; swapped < 2; ++swapped) {
        if (swapped && i < 2) continue;
        const auto& prod = swapped ? b.basis_product(x[i], x[i - 1]) : b.basis_product(x[i - 1], x[i]);
        if (prod.empty()) continue;
        for (unsigned k = 0; k + 1 < i; ++k) args[k] = x[k];
        for (unsigned k = i + 1; k <= n; ++k) args[k - 1] = x[k];
        for (const auto& e : prod) {
          args[i - 1] = e.index;
          if (const auto* v = f_at(args)) acc.add_scaled(*v, alternating(i) * e.value);
        }
      }
    }

    // (-1)^{n+1} f(x_1, ..., x_n) . x_{n+1}
    for (unsigned k = 0; k < n; ++k) args[k] = x[k];
    if (const auto* v = f_at(args)) {
      acc.add_scaled(m.right.apply(*v, {{x[n], Scalar(1)}}), alternating(n + 1));
    }

    out.set_at_rank(r, acc.take());
  }
  return out;
}

Cochain dl_delta_lowdeg(const FiniteAlgebra& b, const BimoduleData& m, const Cochain& f) {
  if (b.kind() != AlgebraKind::zinbiel) throw DimensionError("dl_delta_lowdeg: algebra must be tagged zinbiel");
  if (f.theory() != Theory::dl) throw DimensionError("dl_delta_lowdeg: expected a dl cochain");
  check_module(b, m, f);
  const unsigned n = f.degree();
  if (n < 1 || n > 3) throw DimensionError("dl_delta_lowdeg: degree must be 1, 2 or 3");

  const std::size_t d = b.dim();
  const std::size_t md = m.module_dim();

  // Multilinear evaluation of f on dense algebra elements.
  std::function<Element(const std::vector<Element>&)> ev = [&](const std::vector<Element>& xs) {
    Element result(md);
    std::vector<std::uint32_t> idx(xs.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t slot, Scalar coeff) {
      if (slot == xs.size()) {
        const auto v = f.value(idx);
        for (const auto& e : v) result[e.index] = result[e.index] + coeff * e.value;
        return;
      }
      for (std::size_t k = 0; k < d; ++k) {
        if (xs[slot][k].is_zero()) continue;
        idx[slot] = static_cast<std::uint32_t>(k);
        rec(slot + 1, coeff * xs[slot][k]);
      }
    };
    rec(0, Scalar(1));
    return result;
  };
  auto mul = [&](const Element& u, const Element& v) { return b.multiply(u, v); };
  auto act_l = [&](const Element& u, const Element& w) { return m.left.apply(u, w); };
  auto act_r = [&](const Element& w, const Element& u) { return m.right.apply(w, u); };
  auto plus = [](Element a, const Element& c, int s) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + Scalar(s) * c[i];
    return a;
  };

  Cochain out(Theory::dl, n + 1, d, md);
  std::vector<std::uint32_t> idx(n + 1);
  for (std::uint64_t r = 0; r < out.tuples().size(); ++r) {
    out.tuples().unrank(r, idx);
    std::vector<Element> e;
    for (auto i : idx) e.push_back(b.basis_element(i));
    Element v(md);
    if (n == 1) {
      // x.f(y) - f(x.y) + f(x).y
      const auto& x = e[0];
      const auto& y = e[1];
      v = act_l(x, ev({y}));
      v = plus(v, ev({mul(x, y)}), -1);
      v = plus(v, act_r(ev({x}), y), 1);
    } else if (n == 2) {
      // x.(f(y,z) + f(z,y)) - f(x.y, z) + f(x, y.z) + f(x, z.y) - f(x,y).z
      const auto& x = e[0];
      const auto& y = e[1];
      const auto& z = e[2];
      v = act_l(x, plus(ev({y, z}), ev({z, y}), 1));
      v = plus(v, ev({mul(x, y), z}), -1);
      v = plus(v, ev({x, mul(y, z)}), 1);
      v = plus(v, ev({x, mul(z, y)}), 1);
      v = plus(v, act_r(ev({x, y}), z), -1);
    } else {
      // w.(f(x,y,z) - f(y,z,x) + f(y,x,z) - f(z,y,x))
      //   - f(w.x,y,z) + f(w,x.y,z) - f(w,x,y.z)
      //   + f(w,y.x,z) - f(w,x,z.y) + f(w,x,y).z
      const auto& w = e[0];
      const auto& x = e[1];
      const auto& y = e[2];
      const auto& z = e[3];
      Element s = ev({x, y, z});
      s = plus(s, ev({y, z, x}), -1);
      s = plus(s, ev({y, x, z}), 1);
      s = plus(s, ev({z, y, x}), -1);
      v = act_l(w, s);
      v = plus(v, ev({mul(w, x), y, z}), -1);
      v = plus(v, ev({w, mul(x, y), z}), 1);
      v = plus(v, ev({w, x, mul(y, z)}), -1);
      v = plus(v, ev({w, mul(y, x), z}), 1);
      v = plus(v, ev({w, x, mul(z, y)}), -1);
      v = plus(v, act_r(ev({w, x, y}), z), 1);
    }
    out.set_at_rank(r, to_sparse(v));
  }
  return out;
}

Cochain ce_delta(const FiniteAlgebra& g, const BimoduleData& m, const Cochain& f, const DegreeLimits& limits) {
  if (g.kind() != AlgebraKind::lie) throw DimensionError("ce_delta: algebra must be tagged lie");
  if (f.theory() != Theory::ce) throw DimensionError("ce_delta: expected a ce cochain");
  check_module(g, m, f);
  const unsigned n = f.degree();
  check_degree(n, limits.ce, "ce");

  const std::size_t d = g.dim();
  Cochain out(Theory::ce, n + 1, d, m.module_dim());
  if (out.tuples().size() == 0) return out;

  // For each basis index k, the pairs a < b whose bracket has an e_k component.
  struct Source {
    std::uint32_t a;
    std::uint32_t b;
    Scalar coeff;
  };
  std::vector<std::vector<Source>> sources(d);
  for (std::uint32_t a = 0; a < d; ++a) {
    for (std::uint32_t b = a + 1; b < d; ++b) {
      for (const auto& e : g.basis_product(a, b)) sources[e.index].push_back({a, b, e.value});
    }
  }

  std::vector<std::uint32_t> t(n);
  std::vector<std::uint32_t> s(n + 1);
  std::vector<std::uint32_t> rest;
  std::vector<char> used(d, 0);
  const TupleSpace& in_space = f.tuples();
  const TupleSpace& out_space = out.tuples();

  // f is pushed forward entry by entry: each stored value f(t) contributes to
  // every output tuple whose differential reads it.
  for (const auto& [rank, value] : f.table()) {
    in_space.unrank(rank, t);
    for (auto v : t) used[v] = 1;

    // sum_i (-1)^{i+1} x_i * f(x_1, .., ^x_i, .., x_{n+1})
    for (std::uint32_t x = 0; x < d; ++x) {
      if (used[x]) continue;
      std::size_t pos = 0;
      while (pos < n && t[pos] < x) ++pos;
      for (std::size_t k = 0; k < pos; ++k) s[k] = t[k];
      s[pos] = x;
      for (std::size_t k = pos; k < n; ++k) s[k + 1] = t[k];
      // position i = pos + 1, sign (-1)^{i+1} = (-1)^pos
      const auto image = m.left.apply({{x, Scalar(1)}}, value);
      out.add_at_rank(out_space.rank(s), image, alternating(pos));
    }

    // sum_{i<j} (-1)^{i+j} f(x_i * x_j, x_1, .., ^x_i, .., ^x_j, .., x_{n+1})
    for (std::size_t p = 0; p < n; ++p) {
      const auto k = t[p];
      rest.clear();
      for (std::size_t q = 0; q < n; ++q) {
        if (q != p) rest.push_back(t[q]);
      }
      // f(e_k, rest) = (-1)^p f(t)
      used[k] = 0;
      for (const auto& src : sources[k]) {
        if (used[src.a] || used[src.b]) continue;
        std::size_t i = 0;
        std::size_t j = 0;
        std::size_t w = 0;
        std::size_t r = 0;
        // merge rest with {a, b}, recording the 0-based slots of a and b
        for (std::size_t slot = 0; slot < n + 1; ++slot) {
          if (w == 0 && (r == rest.size() || src.a < rest[r])) {
            s[slot] = src.a;
            i = slot;
            w = 1;
          } else if (w == 1 && (r == rest.size() || src.b < rest[r])) {
            s[slot] = src.b;
            j = slot;
            w = 2;
          } else {
            s[slot] = rest[r++];
          }
        }
        const Scalar sign = alternating(i + j) * alternating(p);
        out.add_at_rank(out_space.rank(s), value, sign * src.coeff);
      }
      used[k] = 1;
    }

    for (auto v : t) used[v] = 0;
  }
  return out;
}

Cochain apply_delta(const FiniteAlgebra& a, const BimoduleData& m, const Cochain& f, const DegreeLimits& limits) {
  return f.theory() == Theory::dl ? dl_delta(a, m, f, limits) : ce_delta(a, m, f, limits);
}

std::size_t cochain_dimension(Theory theory, std::size_t algebra_dim, std::size_t module_dim, unsigned degree) {
  if (theory == Theory::dl && degree == 0) return 0;
  return TupleSpace(theory, algebra_dim, degree).size() * module_dim;
}

ComplexSlice delta_matrix(Theory theory, const FiniteAlgebra& a, const BimoduleData& m, unsigned degree,
                          const DegreeLimits& limits) {
  const std::size_t d = a.dim();
  const std::size_t md = m.module_dim();
  const std::size_t rows = cochain_dimension(theory, d, md, degree + 1);
  const std::size_t cols = cochain_dimension(theory, d, md, degree);
  std::vector<SparseVector> columns;
  columns.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto basis = Cochain::basis(theory, degree, d, md, c);
    columns.push_back(apply_delta(a, m, basis, limits).coordinates());
  }
  return {theory, degree, Matrix::from_columns(rows, std::move(columns))};
}

CohomologyDims cohomology(Theory theory, const FiniteAlgebra& a, const BimoduleData& m, unsigned degree,
                          const DegreeLimits& limits) {
  if (theory == Theory::dl && degree == 0) throw DimensionError("dl cohomology starts in degree 1");
  CohomologyDims dims;
  const auto here = delta_matrix(theory, a, m, degree, limits);
  dims.dim_C = here.matrix.cols();
  dims.dim_Z = dims.dim_C - rank(here.matrix);
  if (degree > 0) dims.dim_B = rank(delta_matrix(theory, a, m, degree - 1, limits).matrix);
  dims.dim_H = dims.dim_Z - dims.dim_B;
  return dims;
}

}  // namespace zinbiel
