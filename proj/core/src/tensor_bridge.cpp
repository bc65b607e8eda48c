#include "zinbiel/tensor_bridge.hpp"

#include <span>

#include "zinbiel/random.hpp"

namespace zinbiel {

namespace {

SparseVector unit(std::uint32_t i) { return {{i, Scalar(1)}}; }

void require(const AxiomReport& report, const std::string& what, const std::vector<std::string>& names) {
  if (!report.passed) throw AxiomError(what + ": " + report.describe(names), report);
}

// Adds  sign * (u (x) v)  for every pair of entries, into a tensor with
// second factor of dimension `inner`.
void add_tensor(StructureTensor& t, std::size_t i, std::size_t j, const SparseVector& u, const SparseVector& v,
                std::size_t inner, const Scalar& sign) {
  for (const auto& a : u) {
    for (const auto& b : v) t.add(i, j, a.index * inner + b.index, sign * a.value * b.value);
  }
}

std::vector<std::string> tensor_names(const std::vector<std::string>& left, const std::vector<std::string>& right) {
  std::vector<std::string> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left) {
    for (const auto& b : right) out.push_back(a + "|" + b);
  }
  return out;
}

// Visits every ordering of `letters` together with its sign and the
// left-normed bracket of the reordered letters. `order` holds the chosen
// positions. Orderings whose partial bracket already vanishes are skipped.
template <class Visit>
void for_each_ordering(const FiniteAlgebra& g, std::span<const std::uint32_t> letters, Visit&& visit) {
  const std::size_t n = letters.size();
  std::vector<std::uint32_t> order(n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t depth, const SparseVector& bracket, int sign) -> void {
    if (depth == n) {
      visit(sign, bracket, std::span<const std::uint32_t>(order));
      return;
    }
    int smaller_unused = 0;
    for (std::uint32_t q = 0; q < n; ++q) {
      if (used[q]) continue;
      SparseVector next = depth == 0 ? unit(letters[q]) : g.multiply(bracket, unit(letters[q]));
      if (!next.empty()) {
        used[q] = 1;
        order[depth] = q;
        self(self, depth + 1, next, smaller_unused % 2 == 0 ? sign : -sign);
        used[q] = 0;
      }
      ++smaller_unused;
    }
  };
  rec(rec, 0, SparseVector{}, 1);
}

void check_bridge_shapes(const FiniteAlgebra& b, const BimoduleData& m) {
  m.validate();
  if (m.algebra_dim != b.dim()) throw DimensionError("module is over an algebra of different dimension");
}

struct Difference {
  std::uint64_t rank;
  SparseVector lhs;
  SparseVector rhs;
};

std::optional<Difference> first_difference(const Cochain& a, const Cochain& b) {
  auto ia = a.table().begin();
  auto ib = b.table().begin();
  const auto ea = a.table().end();
  const auto eb = b.table().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) return Difference{ia->first, ia->second, {}};
    if (ia == ea || ib->first < ia->first) return Difference{ib->first, {}, ib->second};
    if (ia->second != ib->second) return Difference{ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> unranked(const TupleSpace& space, std::uint64_t r) {
  std::vector<std::uint32_t> t(space.degree());
  space.unrank(r, t);
  return t;
}

}  // namespace

FiniteAlgebra tensor_lie(const FiniteAlgebra& g, const FiniteAlgebra& b, InputCheck check) {
  if (check == InputCheck::verify) {
    require(check_axioms(g, Identity::leibniz), "Leibniz factor", g.basis_names());
    require(check_axioms(b, Identity::zinbiel), "Zinbiel factor", b.basis_names());
  }
  const std::size_t gd = g.dim();
  const std::size_t bd = b.dim();
  StructureTensor t(gd * bd, gd * bd, gd * bd);
  for (std::size_t a = 0; a < gd; ++a) {
    for (std::size_t c = 0; c < gd; ++c) {
      const auto& ac = g.basis_product(a, c);
      const auto& ca = g.basis_product(c, a);
      if (ac.empty() && ca.empty()) continue;
      for (std::size_t x = 0; x < bd; ++x) {
        for (std::size_t y = 0; y < bd; ++y) {
          const std::size_t i = a * bd + x;
          const std::size_t j = c * bd + y;
          add_tensor(t, i, j, ac, b.basis_product(x, y), bd, Scalar(1));
          add_tensor(t, i, j, ca, b.basis_product(y, x), bd, Scalar(-1));
        }
      }
    }
  }
  return FiniteAlgebra(AlgebraKind::lie, tensor_names(g.basis_names(), b.basis_names()), std::move(t));
}

BimoduleData tensor_module(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m, InputCheck check) {
  check_bridge_shapes(b, m);
  if (check == InputCheck::verify) {
    require(check_axioms(g, Identity::leibniz), "Leibniz factor", g.basis_names());
    require(check_axioms(b, Identity::zinbiel), "Zinbiel factor", b.basis_names());
    require(check_axioms(b, m, Identity::zinbiel_bimodule), "coefficient module", {});
  }
  const std::size_t gd = g.dim();
  const std::size_t bd = b.dim();
  const std::size_t md = m.module_dim();
  BimoduleData out;
  out.algebra_dim = gd * bd;
  out.basis = tensor_names(g.basis_names(), m.basis);
  out.left = StructureTensor(gd * bd, gd * md, gd * md);
  out.right = StructureTensor(gd * md, gd * bd, gd * md);
  for (std::size_t a = 0; a < gd; ++a) {
    for (std::size_t c = 0; c < gd; ++c) {
      const auto& ac = g.basis_product(a, c);
      const auto& ca = g.basis_product(c, a);
      if (ac.empty() && ca.empty()) continue;
      for (std::size_t x = 0; x < bd; ++x) {
        for (std::size_t k = 0; k < md; ++k) {
          const std::size_t i = a * bd + x;
          const std::size_t j = c * md + k;
          // m.left(x, k) is  e_x . f_k ; m.right(k, x) is  f_k . e_x
          add_tensor(out.left, i, j, ac, m.left(x, k), md, Scalar(1));
          add_tensor(out.left, i, j, ca, m.right(k, x), md, Scalar(-1));
          add_tensor(out.right, j, i, ac, m.left(x, k), md, Scalar(-1));
          add_tensor(out.right, j, i, ca, m.right(k, x), md, Scalar(1));
        }
      }
    }
  }
  return out;
}

SparseVector left_normed(const FiniteAlgebra& g, const std::vector<std::uint32_t>& letters) {
  if (letters.empty()) throw DimensionError("left_normed: empty bracket");
  SparseVector v = unit(letters[0]);
  for (std::size_t k = 1; k < letters.size() && !v.empty(); ++k) v = g.multiply(v, unit(letters[k]));
  return v;
}

Cochain psi_apply(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m, const Cochain& f) {
  check_bridge_shapes(b, m);
  if (f.theory() != Theory::dl) throw DimensionError("psi_apply: expected a dl cochain");
  if (f.algebra_dim() != b.dim() || f.module_dim() != m.module_dim()) {
    throw DimensionError("psi_apply: cochain shape does not match algebra and module");
  }
  const unsigned n = f.degree();
  const std::size_t bd = b.dim();
  const std::size_t md = m.module_dim();
  Cochain out(Theory::ce, n, g.dim() * bd, g.dim() * md);
  const TupleSpace& space = out.tuples();

  std::vector<std::uint32_t> t(n);
  std::vector<std::uint32_t> xs(n);
  std::vector<std::uint32_t> bs(n);
  std::vector<std::uint32_t> bargs(n);
  DenseAccumulator acc(g.dim() * md);
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    space.unrank(r, t);
    for (unsigned k = 0; k < n; ++k) {
      xs[k] = static_cast<std::uint32_t>(t[k] / bd);
      bs[k] = static_cast<std::uint32_t>(t[k] % bd);
    }
    for_each_ordering(g, xs, [&](int sign, const SparseVector& bracket, std::span<const std::uint32_t> order) {
      for (unsigned k = 0; k < n; ++k) bargs[k] = bs[order[k]];
      const auto* v = f.find(f.tuples().rank(bargs));
      if (!v) return;
      for (const auto& x : bracket) {
        const Scalar c = sign > 0 ? x.value : -x.value;
        for (const auto& e : *v) acc.add_product(static_cast<std::uint32_t>(x.index * md + e.index), c, e.value);
      }
    });
    out.set_at_rank(r, acc.take());
  }
  return out;
}

Matrix psi_matrix(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m, unsigned degree) {
  check_bridge_shapes(b, m);
  if (degree == 0) throw DimensionError("psi_matrix: degree must be at least 1");
  const unsigned n = degree;
  const std::size_t bd = b.dim();
  const std::size_t md = m.module_dim();
  const TupleSpace space(Theory::ce, g.dim() * bd, n);
  const TupleSpace dl_space(Theory::dl, bd, n);
  const std::size_t rows = space.size() * g.dim() * md;
  const std::size_t cols = dl_space.size() * md;

  // Column (k, rank(bargs)) is the basis cochain with value f_k at bargs; it
  // contributes sign * bracket (x) f_k at the ce tuple.
  std::vector<Triplet> entries;
  std::vector<std::uint32_t> t(n);
  std::vector<std::uint32_t> xs(n);
  std::vector<std::uint32_t> bs(n);
  std::vector<std::uint32_t> bargs(n);
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    space.unrank(r, t);
    for (unsigned k = 0; k < n; ++k) {
      xs[k] = static_cast<std::uint32_t>(t[k] / bd);
      bs[k] = static_cast<std::uint32_t>(t[k] % bd);
    }
    for_each_ordering(g, xs, [&](int sign, const SparseVector& bracket, std::span<const std::uint32_t> order) {
      for (unsigned k = 0; k < n; ++k) bargs[k] = bs[order[k]];
      const std::uint64_t brank = dl_space.rank(bargs);
      for (const auto& x : bracket) {
        const Scalar c = sign > 0 ? x.value : -x.value;
        for (std::size_t k = 0; k < md; ++k) {
          entries.push_back({(x.index * md + k) * space.size() + r, k * dl_space.size() + brank, c});
        }
      }
    });
  }
  return Matrix::from_triplets(rows, cols, entries);
}

ChainMapReport verify_chain_map(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m,
                                unsigned degree, std::size_t trials, std::uint64_t seed) {
  if (degree < 1 || degree > 3) throw DimensionError("verify_chain_map: degree must be 1, 2 or 3");
  if (trials == 0) throw DimensionError("verify_chain_map: trials must be at least 1");
  const FiniteAlgebra lie = tensor_lie(g, b, InputCheck::trust);
  const BimoduleData module = tensor_module(g, b, m, InputCheck::trust);

  ChainMapReport report;
  report.degree = degree;
  report.trials = trials;
  CoefficientSource source(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Cochain f = random_cochain(Theory::dl, degree, b.dim(), m.module_dim(), source);
    const Cochain df = dl_delta(b, m, f);
    const Cochain lhs = ce_delta(lie, module, psi_apply(g, b, m, f));
    const Cochain rhs = psi_apply(g, b, m, df);
    const Cochain ddf = dl_delta(b, m, df);

    const auto diff = first_difference(lhs, rhs);
    const bool commutes = !diff;
    const bool squares = ddf.is_zero();
    report.commuting += commutes;
    report.squares_to_zero += squares;
    report.exact += commutes && squares;

    if (report.failure) continue;
    if (!commutes) {
      report.failure =
          ChainMapFailure{trial, "commutation", f, unranked(lhs.tuples(), diff->rank), diff->lhs, diff->rhs};
    } else if (!squares) {
      const auto& [r, v] = *ddf.table().begin();
      report.failure =
          ChainMapFailure{trial, "dl differential squares to zero", f, unranked(ddf.tuples(), r), v, SparseVector{}};
    }
  }
  return report;
}

std::vector<LESRow> les_report(const FiniteAlgebra& g, const FiniteAlgebra& b, const BimoduleData& m,
                               unsigned max_degree, Injectivity injectivity, const DegreeLimits& limits) {
  check_bridge_shapes(b, m);
  const FiniteAlgebra lie = tensor_lie(g, b);
  const BimoduleData module = tensor_module(g, b, m);
  const unsigned top = max_degree + 1;

  // Index k holds the map out of degree k; psi[0] and dl[0] start from C^0_DL = 0.
  std::vector<Matrix> psi(top + 1);
  std::vector<Matrix> dl(top + 1);
  std::vector<Matrix> ce(top);
  std::vector<std::size_t> ce_rank(top);
  psi[0] = Matrix(cochain_dimension(Theory::ce, lie.dim(), module.module_dim(), 0), 0);
  dl[0] = delta_matrix(Theory::dl, b, m, 0, limits).matrix;
  for (unsigned k = 1; k <= top + 1; ++k) {
    Matrix p = psi_matrix(g, b, m, k);
    if (injectivity == Injectivity::require && rank(p) != p.cols()) {
      throw HypothesisError("embedding not injective at degree " + std::to_string(k) + "; LES hypothesis not met");
    }
    if (k > top) break;
    psi[k] = std::move(p);
    dl[k] = delta_matrix(Theory::dl, b, m, k, limits).matrix;
  }
  for (unsigned k = 0; k < top; ++k) {
    ce[k] = delta_matrix(Theory::ce, lie, module, k, limits).matrix;
    ce_rank[k] = rank(ce[k]);
  }

  // H^k_DL and the rank of H^k_DL -> H^k_Lie for k = 0..top.
  std::vector<std::size_t> h_dl(top + 1, 0);
  std::vector<std::size_t> induced(top + 1, 0);
  for (unsigned k = 1; k <= top; ++k) {
    h_dl[k] = dl[k].cols() - rank(dl[k]) - rank(dl[k - 1]);
    // (Psi Z^k_DL + B^k_Lie) / B^k_Lie
    std::vector<SparseVector> images;
    for (const auto& cocycle : nullspace(dl[k])) images.push_back(to_sparse(psi[k] * std::span<const Scalar>(cocycle)));
    const Matrix image = Matrix::from_columns(psi[k].rows(), std::move(images));
    induced[k] = rank(hconcat(ce[k - 1], image)) - ce_rank[k - 1];
  }

  std::vector<LESRow> rows;
  for (unsigned k = 0; k <= max_degree; ++k) {
    LESRow row;
    row.degree = k;
    const std::size_t dim_c = ce[k].cols();
    const std::size_t previous = k == 0 ? 0 : ce_rank[k - 1];
    row.h_lie = dim_c - ce_rank[k] - previous;
    row.h_dl = h_dl[k];
    row.induced_rank = induced[k];
    // Z^k(Q) = {c : delta c in im Psi} / im Psi, B^k(Q) = (im delta + im Psi) / im Psi
    const std::size_t with_next = rank(hconcat(ce[k], psi[k + 1]));
    const std::size_t with_prev = k == 0 ? 0 : rank(hconcat(ce[k - 1], psi[k]));
    row.h_q = dim_c - with_next + rank(psi[k + 1]) - with_prev;
    row.h_q_predicted = (row.h_lie - row.induced_rank) + (h_dl[k + 1] - induced[k + 1]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zinbiel
