#include "zinbiel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zinbiel/errors.hpp"

namespace zinbiel {

using nlohmann::json;

namespace {

json products_to_json(const StructureTensor& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.left_dim(); ++i) {
    for (std::size_t j = 0; j < t.right_dim(); ++j) {
      const auto& v = t(i, j);
      if (v.empty()) continue;
      json result = json::array();
      for (const auto& e : v) result.push_back(json::array({e.index, e.value.to_string()}));
      out.push_back({{"left", i}, {"right", j}, {"result", result}});
    }
  }
  return out;
}

Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
  throw ParseError("scalar must be a string \"p/q\" or an integer");
}

std::size_t index_from_json(const json& v, std::size_t bound, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  const auto i = v.get<std::size_t>();
  if (i >= bound) throw ParseError(std::string(what) + " " + std::to_string(i) + " out of range");
  return i;
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

void products_from_json(const json& list, StructureTensor& t, const char* name) {
  if (!list.is_array()) throw ParseError(std::string("'") + name + "' must be an array");
  for (const auto& p : list) {
    const auto i = index_from_json(field(p, "left"), t.left_dim(), "left index");
    const auto j = index_from_json(field(p, "right"), t.right_dim(), "right index");
    const auto& result = field(p, "result");
    if (!result.is_array()) throw ParseError("'result' must be an array of [index, scalar] pairs");
    for (const auto& term : result) {
      if (!term.is_array() || term.size() != 2) throw ParseError("each result term must be [index, scalar]");
      t.add(i, j, index_from_json(term[0], t.out_dim(), "result index"), scalar_from_json(term[1]));
    }
  }
}

std::vector<std::string> names_from_json(const json& doc, std::size_t dim, const char* prefix) {
  if (!doc.contains("basis")) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
  }
  const auto& basis = doc.at("basis");
  if (!basis.is_array() || basis.size() != dim) throw ParseError("'basis' must list one name per dimension");
  std::vector<std::string> names;
  for (const auto& n : basis) {
    if (!n.is_string()) throw ParseError("basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  return names;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t dim_from_json(const json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

FiniteAlgebra algebra_from_doc(const json& doc) {
  const auto& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  const std::size_t dim = dim_from_json(doc, "dim");
  StructureTensor t(dim, dim, dim);
  if (doc.contains("products")) products_from_json(doc.at("products"), t, "products");
  return FiniteAlgebra(parse_algebra_kind(kind.get<std::string>()), names_from_json(doc, dim, "e"), std::move(t));
}

BimoduleData bimodule_from_doc(const json& doc) {
  BimoduleData m;
  m.algebra_dim = dim_from_json(doc, "algebra_dim");
  const std::size_t md = dim_from_json(doc, "module_dim");
  m.basis = names_from_json(doc, md, "m");
  m.left = StructureTensor(m.algebra_dim, md, md);
  m.right = StructureTensor(md, m.algebra_dim, md);
  if (doc.contains("left_action")) products_from_json(doc.at("left_action"), m.left, "left_action");
  if (doc.contains("right_action")) products_from_json(doc.at("right_action"), m.right, "right_action");
  return m;
}

}  // namespace

std::string to_json(const FiniteAlgebra& a) {
  json doc = {{"kind", std::string(to_string(a.kind()))},
              {"dim", a.dim()},
              {"basis", a.basis_names()},
              {"products", products_to_json(a.product())}};
  return doc.dump(2) + "\n";
}

std::string to_json(const BimoduleData& m) {
  json doc = {{"algebra_dim", m.algebra_dim},
              {"module_dim", m.module_dim()},
              {"basis", m.basis},
              {"left_action", products_to_json(m.left)},
              {"right_action", products_to_json(m.right)}};
  return doc.dump(2) + "\n";
}

std::string to_json(const CatalogEntry& entry) {
  return std::visit([](const auto& e) { return to_json(e); }, entry);
}

FiniteAlgebra algebra_from_json(std::string_view text) { return algebra_from_doc(parse(text)); }

BimoduleData bimodule_from_json(std::string_view text) { return bimodule_from_doc(parse(text)); }

CatalogEntry entry_from_json(std::string_view text) {
  const json doc = parse(text);
  if (doc.is_object() && doc.contains("left_action")) return bimodule_from_doc(doc);
  return algebra_from_doc(doc);
}

CatalogEntry load_entry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return entry_from_json(buffer.str());
}

void save_entry(const std::filesystem::path& path, const CatalogEntry& entry) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << to_json(entry);
}

}  // namespace zinbiel
