#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/free_leibniz.hpp"

namespace zinbiel {

/// Named example algebras and bimodules.
///
///   B3              dim 3 Zinbiel, e1.e2 = e3
///   B2              dim 2 Zinbiel, e1.e1 = e2
///   B2perturbed     B2 with e2.e2 = e1 added (tagged zinbiel, fails the identity)
///   polyzinbiel(d)  k[t] with f.g = f * integral_0^t g, modulo degree > d
///   nullzinbiel(d)  dim d Zinbiel with every product zero
///   lie2            dim 2 Lie, [e1,e2] = e1, [e2,e1] = -e1
///   leibniz2        dim 2 Leibniz, [a,a] = b
///   freeleibniz(m,N) truncated free Leibniz algebra (see free_leibniz.hpp)
///   regular(NAME)   NAME acting on itself (a bimodule)
FiniteAlgebra builtin_algebra(std::string_view name, std::size_t dim_cap = kDefaultDimCap);
BimoduleData builtin_bimodule(std::string_view name, std::size_t dim_cap = kDefaultDimCap);

using CatalogEntry = std::variant<FiniteAlgebra, BimoduleData>;
/// Throws ParseError listing the catalog when `name` is unknown.
CatalogEntry builtin(std::string_view name, std::size_t dim_cap = kDefaultDimCap);

/// Human-readable list of the catalog's name patterns.
std::vector<std::string> catalog_names();

FiniteAlgebra polyzinbiel(std::size_t degree);

}  // namespace zinbiel
