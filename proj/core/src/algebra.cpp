#include "zinbiel/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zinbiel/errors.hpp"
#include "zinbiel/matrix.hpp"

namespace zinbiel {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::leibniz: return "leibniz";
    case AlgebraKind::zinbiel: return "zinbiel";
    case AlgebraKind::lie: return "lie";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(std::string_view text) {
  if (text == "leibniz") return AlgebraKind::leibniz;
  if (text == "zinbiel") return AlgebraKind::zinbiel;
  if (text == "lie") return AlgebraKind::lie;
  throw ParseError("unknown algebra kind '" + std::string(text) + "' (expected leibniz, zinbiel or lie)");
}

// ---------------------------------------------------------------------------
// StructureTensor

StructureTensor::StructureTensor(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_dim_(left_dim), right_dim_(right_dim), out_dim_(out_dim), entries_(left_dim * right_dim) {}

void StructureTensor::check(std::size_t i, std::size_t j) const {
  if (i >= left_dim_ || j >= right_dim_) {
    throw DimensionError("StructureTensor: index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") outside " + std::to_string(left_dim_) + "x" + std::to_string(right_dim_));
  }
}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check(i, j);
  if (k >= out_dim_) throw DimensionError("StructureTensor: output index " + std::to_string(k) + " out of range");
  auto& e = entries_[i * right_dim_ + j];
  e = axpy(e, value, SparseVector{{static_cast<std::uint32_t>(k), Scalar(1)}});
}

void StructureTensor::set(std::size_t i, std::size_t j, SparseVector image) {
  check(i, j);
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k].index >= out_dim_ || image[k].value.is_zero() || (k > 0 && image[k - 1].index >= image[k].index)) {
      throw DimensionError("StructureTensor::set: image is not a canonical sparse vector");
    }
  }
  entries_[i * right_dim_ + j] = std::move(image);
}

Scalar StructureTensor::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  check(i, j);
  for (const auto& e : (*this)(i, j)) {
    if (e.index == k) return e.value;
  }
  return Scalar();
}

SparseVector StructureTensor::apply(const SparseVector& u, const SparseVector& v) const {
  DenseAccumulator acc(out_dim_);
  for (const auto& a : u) {
    for (const auto& b : v) {
      const auto& img = (*this)(a.index, b.index);
      if (img.empty()) continue;
      const Scalar ab = a.value * b.value;
      acc.add_scaled(img, ab);
    }
  }
  return acc.take();
}

Element StructureTensor::apply(const Element& u, const Element& v) const {
  if (u.size() != left_dim_ || v.size() != right_dim_) {
    throw DimensionError("StructureTensor::apply: argument dimensions " + std::to_string(u.size()) + ", " +
                         std::to_string(v.size()) + " do not match " + std::to_string(left_dim_) + ", " +
                         std::to_string(right_dim_));
  }
  return to_dense(apply(to_sparse(u), to_sparse(v)), out_dim_);
}

bool StructureTensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const SparseVector& e) { return e.empty(); });
}

// ---------------------------------------------------------------------------
// FiniteAlgebra / BimoduleData

FiniteAlgebra::FiniteAlgebra(AlgebraKind kind, std::vector<std::string> basis, StructureTensor product)
    : kind_(kind), basis_(std::move(basis)), product_(std::move(product)) {
  const auto d = basis_.size();
  if (product_.left_dim() != d || product_.right_dim() != d || product_.out_dim() != d) {
    throw DimensionError("FiniteAlgebra: structure tensor shape does not match dimension " + std::to_string(d));
  }
}

Element FiniteAlgebra::multiply(const Element& u, const Element& v) const { return product_.apply(u, v); }

Element FiniteAlgebra::basis_element(std::size_t i) const {
  if (i >= dim()) throw DimensionError("basis index out of range");
  Element e(dim());
  e[i] = Scalar(1);
  return e;
}

void BimoduleData::validate() const {
  const auto md = module_dim();
  if (left.left_dim() != algebra_dim || left.right_dim() != md || left.out_dim() != md ||
      right.left_dim() != md || right.right_dim() != algebra_dim || right.out_dim() != md) {
    throw DimensionError("BimoduleData: action tensors inconsistent with algebra_dim " + std::to_string(algebra_dim) +
                         " and module_dim " + std::to_string(md));
  }
}

BimoduleData regular_bimodule(const FiniteAlgebra& a) {
  return BimoduleData{a.dim(), a.basis_names(), a.product(), a.product()};
}

BimoduleData zero_bimodule(std::size_t algebra_dim, std::size_t module_dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < module_dim; ++i) names.push_back("f" + std::to_string(i + 1));
  return BimoduleData{algebra_dim, std::move(names), StructureTensor(algebra_dim, module_dim, module_dim),
                      StructureTensor(module_dim, algebra_dim, module_dim)};
}

// ---------------------------------------------------------------------------
// Identities

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::leibniz: return "leibniz";
    case Identity::zinbiel: return "zinbiel";
    case Identity::lie: return "lie";
    case Identity::zinbiel_bimodule: return "zinbiel-bimodule";
    case Identity::lie_module: return "lie-module";
    case Identity::leibniz_representation: return "leibniz-representation";
  }
  return "?";
}

Identity parse_identity(std::string_view text) {
  for (auto id : {Identity::leibniz, Identity::zinbiel, Identity::lie, Identity::zinbiel_bimodule,
                  Identity::lie_module, Identity::leibniz_representation}) {
    if (text == to_string(id)) return id;
  }
  throw ParseError("unknown identity '" + std::string(text) +
                   "' (expected leibniz, zinbiel, lie, zinbiel-bimodule, lie-module or leibniz-representation)");
}

std::string AxiomReport::describe(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << to_string(identity) << ": " << (passed ? "PASS" : "FAIL");
  if (passed) return os.str();
  os << " (" << law << ") at (";
  for (std::size_t k = 0; k < witness.size(); ++k) {
    if (k) os << ", ";
    os << witness[k];
  }
  os << ")";
  auto print = [&](const Element& e) {
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i].is_zero()) continue;
      os << (any ? " + " : "") << e[i] << "*" << (i < names.size() ? names[i] : "b" + std::to_string(i));
      any = true;
    }
    if (!any) os << "0";
  };
  os << ": lhs = ";
  print(lhs);
  os << ", rhs = ";
  print(rhs);
  return os.str();
}

namespace {

SparseVector unit(std::size_t i) { return {{static_cast<std::uint32_t>(i), Scalar(1)}}; }

SparseVector add(const SparseVector& a, const SparseVector& b) { return axpy(a, Scalar(1), b); }
SparseVector sub(const SparseVector& a, const SparseVector& b) { return axpy(a, Scalar(-1), b); }

// Scans every index triple over the given ranges in lexicographic order and
// stops at the first one where the two sides differ.
bool scan3(AxiomReport& report, std::string law, std::size_t n0, std::size_t n1, std::size_t n2, std::size_t out_dim,
           const std::function<std::pair<SparseVector, SparseVector>(std::size_t, std::size_t, std::size_t)>& sides) {
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n2; ++k) {
        auto [lhs, rhs] = sides(i, j, k);
        if (lhs != rhs) {
          report.passed = false;
          report.law = std::move(law);
          report.witness = {i, j, k};
          report.lhs = to_dense(lhs, out_dim);
          report.rhs = to_dense(rhs, out_dim);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

AxiomReport check_axioms(const FiniteAlgebra& a, Identity which) {
  AxiomReport report;
  report.identity = which;
  const auto d = a.dim();
  auto mul = [&](const SparseVector& u, const SparseVector& v) { return a.multiply(u, v); };

  switch (which) {
    case Identity::leibniz:
      scan3(report, "[x,[y,z]] = [[x,y],z] - [[x,z],y]", d, d, d, d, [&](auto i, auto j, auto k) {
        const auto x = unit(i), y = unit(j), z = unit(k);
        return std::pair{mul(x, mul(y, z)), sub(mul(mul(x, y), z), mul(mul(x, z), y))};
      });
      break;
    case Identity::zinbiel:
      scan3(report, "(x.y).z = x.(y.z + z.y)", d, d, d, d, [&](auto i, auto j, auto k) {
        const auto x = unit(i), y = unit(j), z = unit(k);
        return std::pair{mul(mul(x, y), z), mul(x, add(mul(y, z), mul(z, y)))};
      });
      break;
    case Identity::lie: {
      for (std::size_t i = 0; i < d && report.passed; ++i) {
        for (std::size_t j = i; j < d; ++j) {
          const auto lhs = a.basis_product(i, j);
          const auto rhs = scaled(a.basis_product(j, i), Scalar(-1));
          if (i == j ? !lhs.empty() : lhs != rhs) {
            report.passed = false;
            report.law = i == j ? "[x,x] = 0" : "[x,y] = -[y,x]";
            report.witness = {i, j};
            report.lhs = to_dense(lhs, d);
            report.rhs = i == j ? Element(d) : to_dense(rhs, d);
            break;
          }
        }
      }
      if (!report.passed) break;
      scan3(report, "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", d, d, d, d, [&](auto i, auto j, auto k) {
        const auto x = unit(i), y = unit(j), z = unit(k);
        return std::pair{mul(x, mul(y, z)), scaled(add(mul(y, mul(z, x)), mul(z, mul(x, y))), Scalar(-1))};
      });
      break;
    }
    default:
      throw DimensionError("check_axioms: identity '" + std::string(to_string(which)) + "' needs a module");
  }
  return report;
}

AxiomReport check_axioms(const FiniteAlgebra& a, const BimoduleData& m, Identity which) {
  m.validate();
  if (m.algebra_dim != a.dim()) {
    throw DimensionError("check_axioms: module is over a " + std::to_string(m.algebra_dim) +
                         "-dimensional algebra, algebra has dimension " + std::to_string(a.dim()));
  }
  AxiomReport report;
  report.identity = which;
  const auto d = a.dim();
  const auto md = m.module_dim();
  auto mul = [&](const SparseVector& u, const SparseVector& v) { return a.multiply(u, v); };
  auto lft = [&](const SparseVector& x, const SparseVector& v) { return m.left.apply(x, v); };   // x . m
  auto rgt = [&](const SparseVector& v, const SparseVector& x) { return m.right.apply(v, x); };  // m . x

  switch (which) {
    case Identity::zinbiel_bimodule:
      // (x.y).z = x.(y.z + z.y) with each argument in turn replaced by a module element.
      scan3(report, "(m.y).z = m.(y.z + z.y)", md, d, d, md, [&](auto i, auto j, auto k) {
        const auto v = unit(i), y = unit(j), z = unit(k);
        return std::pair{rgt(rgt(v, y), z), rgt(v, add(mul(y, z), mul(z, y)))};
      }) &&
          scan3(report, "(x.m).z = x.(m.z + z.m)", d, md, d, md, [&](auto i, auto j, auto k) {
            const auto x = unit(i), v = unit(j), z = unit(k);
            return std::pair{rgt(lft(x, v), z), lft(x, add(rgt(v, z), lft(z, v)))};
          }) &&
          scan3(report, "(x.y).m = x.(y.m + m.y)", d, d, md, md, [&](auto i, auto j, auto k) {
            const auto x = unit(i), y = unit(j), v = unit(k);
            return std::pair{lft(mul(x, y), v), lft(x, add(lft(y, v), rgt(v, y)))};
          });
      break;
    case Identity::leibniz_representation:
      scan3(report, "[x,[y,m]] = [[x,y],m] - [[x,m],y]", d, d, md, md, [&](auto i, auto j, auto k) {
        const auto x = unit(i), y = unit(j), v = unit(k);
        return std::pair{lft(x, lft(y, v)), sub(lft(mul(x, y), v), rgt(lft(x, v), y))};
      }) &&
          scan3(report, "[x,[m,z]] = [[x,m],z] - [[x,z],m]", d, md, d, md, [&](auto i, auto j, auto k) {
            const auto x = unit(i), v = unit(j), z = unit(k);
            return std::pair{lft(x, rgt(v, z)), sub(rgt(lft(x, v), z), lft(mul(x, z), v))};
          }) &&
          scan3(report, "[m,[y,z]] = [[m,y],z] - [[m,z],y]", md, d, d, md, [&](auto i, auto j, auto k) {
            const auto v = unit(i), y = unit(j), z = unit(k);
            return std::pair{rgt(v, mul(y, z)), sub(rgt(rgt(v, y), z), rgt(rgt(v, z), y))};
          });
      break;
    case Identity::lie_module: {
      for (std::size_t i = 0; i < d && report.passed; ++i) {
        for (std::size_t k = 0; k < md; ++k) {
          const auto lhs = rgt(unit(k), unit(i));
          const auto rhs = scaled(lft(unit(i), unit(k)), Scalar(-1));
          if (lhs != rhs) {
            report.passed = false;
            report.law = "m.x = -(x.m)";
            report.witness = {k, i};
            report.lhs = to_dense(lhs, md);
            report.rhs = to_dense(rhs, md);
            break;
          }
        }
      }
      if (!report.passed) break;
      scan3(report, "[x,y].m = x.(y.m) - y.(x.m)", d, d, md, md, [&](auto i, auto j, auto k) {
        const auto x = unit(i), y = unit(j), v = unit(k);
        return std::pair{lft(mul(x, y), v), sub(lft(x, lft(y, v)), lft(y, lft(x, v)))};
      });
      break;
    }
    default:
      throw DimensionError("check_axioms: identity '" + std::string(to_string(which)) + "' is not a module identity");
  }
  return report;
}

AxiomReport check_total_product(const FiniteAlgebra& a) {
  AxiomReport report;
  report.identity = Identity::zinbiel;
  const auto d = a.dim();
  auto star = [&](const SparseVector& u, const SparseVector& v) { return add(a.multiply(u, v), a.multiply(v, u)); };
  scan3(report, "(x*y)*z = x*(y*z)", d, d, d, d, [&](auto i, auto j, auto k) {
    const auto x = unit(i), y = unit(j), z = unit(k);
    return std::pair{star(star(x, y), z), star(x, star(y, z))};
  });
  return report;
}

FiniteAlgebra change_basis(const FiniteAlgebra& a, const std::vector<std::vector<Scalar>>& p) {
  const auto d = a.dim();
  if (p.size() != d) throw DimensionError("change_basis: matrix size does not match algebra dimension");
  const auto pinv = dense_inverse(p);
  StructureTensor t(d, d, d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      // e'_x e'_y = sum_{j,k} p[j][x] p[k][y] e_j e_k, then re-expressed through p^{-1}.
      Element old(d);
      for (std::size_t j = 0; j < d; ++j) {
        if (p[j][x].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) {
          if (p[k][y].is_zero()) continue;
          const Scalar w = p[j][x] * p[k][y];
          for (const auto& e : a.basis_product(j, k)) old[e.index].add_product(w, e.value);
        }
      }
      Element fresh(d);
      for (std::size_t m = 0; m < d; ++m) {
        for (std::size_t l = 0; l < d; ++l) fresh[m].add_product(pinv[m][l], old[l]);
      }
      t.set(x, y, to_sparse(fresh));
    }
  }
  return FiniteAlgebra(a.kind(), a.basis_names(), std::move(t));
}

}  // namespace zinbiel
