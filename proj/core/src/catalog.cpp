#include "zinbiel/catalog.hpp"

#include <charconv>
#include <optional>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

std::vector<std::string> e_names(std::size_t d, const char* stem = "e") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string catalog_listing() {
  std::string s;
  for (const auto& n : catalog_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

[[noreturn]] void unknown(std::string_view name) {
  throw ParseError("unknown builtin '" + std::string(name) + "'; catalog: " + catalog_listing());
}

// Parses "head(a,b,...)" into its integer arguments.
std::optional<std::vector<std::size_t>> call_args(std::string_view name, std::string_view head) {
  if (name.size() < head.size() + 2 || name.substr(0, head.size()) != head || name[head.size()] != '(' ||
      name.back() != ')') {
    return std::nullopt;
  }
  std::string_view inner = name.substr(head.size() + 1, name.size() - head.size() - 2);
  std::vector<std::size_t> args;
  while (true) {
    const auto comma = inner.find(',');
    std::string_view piece = inner.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError("builtin '" + std::string(name) + "': arguments must be nonnegative integers");
    }
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return args;
}

FiniteAlgebra b3() {
  StructureTensor t(3, 3, 3);
  t.add(0, 1, 2, Scalar(1));
  return FiniteAlgebra(AlgebraKind::zinbiel, e_names(3), std::move(t));
}

FiniteAlgebra b2(bool perturbed) {
  StructureTensor t(2, 2, 2);
  t.add(0, 0, 1, Scalar(1));
  if (perturbed) t.add(1, 1, 0, Scalar(1));
  return FiniteAlgebra(AlgebraKind::zinbiel, e_names(2), std::move(t));
}

FiniteAlgebra lie2() {
  StructureTensor t(2, 2, 2);
  t.add(0, 1, 0, Scalar(1));
  t.add(1, 0, 0, Scalar(-1));
  return FiniteAlgebra(AlgebraKind::lie, e_names(2), std::move(t));
}

FiniteAlgebra leibniz2() {
  StructureTensor t(2, 2, 2);
  t.add(0, 0, 1, Scalar(1));
  return FiniteAlgebra(AlgebraKind::leibniz, {"a", "b"}, std::move(t));
}

FiniteAlgebra null_zinbiel(std::size_t d) {
  return FiniteAlgebra(AlgebraKind::zinbiel, e_names(d), StructureTensor(d, d, d));
}

}  // namespace

FiniteAlgebra polyzinbiel(std::size_t degree) {
  const std::size_t d = degree + 1;
  StructureTensor t(d, d, d);
  // t^a . t^b = t^a * t^(b+1) / (b+1)
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; a + b + 1 < d; ++b) {
      t.add(a, b, a + b + 1, Scalar(1, static_cast<std::int64_t>(b + 1)));
    }
  }
  return FiniteAlgebra(AlgebraKind::zinbiel, e_names(d, "p"), std::move(t));
}

std::vector<std::string> catalog_names() {
  return {"B3", "B2", "B2perturbed", "polyzinbiel(d)", "nullzinbiel(d)", "lie2", "leibniz2", "freeleibniz(m,N)",
          "regular(NAME)"};
}

FiniteAlgebra builtin_algebra(std::string_view name, std::size_t dim_cap) {
  auto entry = builtin(name, dim_cap);
  if (auto* a = std::get_if<FiniteAlgebra>(&entry)) return std::move(*a);
  throw ParseError("builtin '" + std::string(name) + "' is a bimodule, not an algebra");
}

BimoduleData builtin_bimodule(std::string_view name, std::size_t dim_cap) {
  auto entry = builtin(name, dim_cap);
  if (auto* m = std::get_if<BimoduleData>(&entry)) return std::move(*m);
  throw ParseError("builtin '" + std::string(name) + "' is an algebra, not a bimodule");
}

CatalogEntry builtin(std::string_view name, std::size_t dim_cap) {
  auto capped = [&](FiniteAlgebra a) {
    if (a.dim() > dim_cap) {
      throw CapacityError("builtin '" + std::string(name) + "' has dimension " + std::to_string(a.dim()) +
                          " above the cap " + std::to_string(dim_cap));
    }
    return a;
  };
  if (name == "B3") return b3();
  if (name == "B2") return b2(false);
  if (name == "B2perturbed") return b2(true);
  if (name == "lie2") return lie2();
  if (name == "leibniz2") return leibniz2();
  if (auto args = call_args(name, "polyzinbiel")) {
    if (args->size() != 1) unknown(name);
    return capped(polyzinbiel(args->front()));
  }
  if (auto args = call_args(name, "nullzinbiel")) {
    if (args->size() != 1 || args->front() == 0) unknown(name);
    return capped(null_zinbiel(args->front()));
  }
  if (auto args = call_args(name, "freeleibniz")) {
    if (args->size() != 2) unknown(name);
    return build_truncated((*args)[0], (*args)[1], dim_cap);
  }
  if (name.starts_with("regular(") && name.ends_with(")")) {
    const auto inner = name.substr(8, name.size() - 9);
    return regular_bimodule(builtin_algebra(inner, dim_cap));
  }
  unknown(name);
}

}  // namespace zinbiel
