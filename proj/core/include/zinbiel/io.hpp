#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zinbiel/algebra.hpp"
#include "zinbiel/catalog.hpp"

namespace zinbiel {

/// Algebra documents:
///   {"kind": "zinbiel", "dim": 2, "basis": ["e1","e2"],
///    "products": [{"left": 0, "right": 0, "result": [[1, "1"]]}]}
/// Bimodule documents:
///   {"algebra_dim": 2, "module_dim": 2, "basis": [...],
///    "left_action":  [{"left": i, "right": k, "result": [...]}],   e_i . f_k
///    "right_action": [{"left": k, "right": i, "result": [...]}]}   f_k . e_i
/// Indices are 0-based; scalars are "p/q" strings or integers; absent
/// products are zero. Output keys are sorted alphabetically.
std::string to_json(const FiniteAlgebra& a);
std::string to_json(const BimoduleData& m);
std::string to_json(const CatalogEntry& entry);

/// Throws ParseError on malformed documents.
FiniteAlgebra algebra_from_json(std::string_view text);
BimoduleData bimodule_from_json(std::string_view text);
/// A document with "left_action" is read as a bimodule, otherwise as an algebra.
CatalogEntry entry_from_json(std::string_view text);

CatalogEntry load_entry(const std::filesystem::path& path);
void save_entry(const std::filesystem::path& path, const CatalogEntry& entry);

}  // namespace zinbiel
