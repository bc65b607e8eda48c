#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reproduce.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/complexes.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/tensor_bridge.hpp"

namespace zinbiel::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kBuiltinPrefix = "builtin:";

struct Options {
  std::string format = "text";
  std::size_t dim_cap = kDefaultDimCap;
};

CatalogEntry resolve(const std::string& target, const Options& opt) {
  if (target.rfind(kBuiltinPrefix, 0) == 0) return builtin(target.substr(kBuiltinPrefix.size()), opt.dim_cap);
  return load_entry(target);
}

FiniteAlgebra resolve_algebra(const std::string& target, const Options& opt) {
  auto entry = resolve(target, opt);
  if (auto* a = std::get_if<FiniteAlgebra>(&entry)) return std::move(*a);
  throw ParseError(target + " is a bimodule, expected an algebra");
}

BimoduleData resolve_module(const std::string& target, const Options& opt) {
  auto entry = resolve(target, opt);
  if (auto* m = std::get_if<BimoduleData>(&entry)) return std::move(*m);
  throw ParseError(target + " is an algebra, expected a bimodule");
}

Identity default_identity(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::leibniz:
      return Identity::leibniz;
    case AlgebraKind::zinbiel:
      return Identity::zinbiel;
    case AlgebraKind::lie:
      return Identity::lie;
  }
  return Identity::zinbiel;
}

Identity default_module_identity(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::leibniz:
      return Identity::leibniz_representation;
    case AlgebraKind::zinbiel:
      return Identity::zinbiel_bimodule;
    case AlgebraKind::lie:
      return Identity::lie_module;
  }
  return Identity::zinbiel_bimodule;
}

json report_json(const AxiomReport& r) {
  json doc = {{"identity", std::string(to_string(r.identity))}, {"passed", r.passed}};
  if (!r.passed) {
    doc["law"] = r.law;
    doc["witness"] = r.witness;
    json lhs = json::array();
    json rhs = json::array();
    for (const auto& s : r.lhs) lhs.push_back(s.to_string());
    for (const auto& s : r.rhs) rhs.push_back(s.to_string());
    doc["lhs"] = lhs;
    doc["rhs"] = rhs;
  }
  return doc;
}

json vector_json(const SparseVector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(json::array({e.index, e.value.to_string()}));
  return out;
}

std::string vector_text(const SparseVector& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) {
    os << (k ? " + " : "") << v[k].value << "*" << names.at(v[k].index);
  }
  return os.str();
}

// Emits axiom reports; returns the exit code.
int emit_reports(const std::vector<std::pair<AxiomReport, std::vector<std::string>>>& reports, const Options& opt,
                 std::ostream& out) {
  bool ok = true;
  json docs = json::array();
  for (const auto& [r, names] : reports) {
    ok = ok && r.passed;
    if (opt.format == "json") {
      docs.push_back(report_json(r));
    } else {
      out << r.describe(names) << "\n";
    }
  }
  if (opt.format == "json") out << (docs.size() == 1 ? docs[0] : docs).dump() << "\n";
  return ok ? kOk : kCheckFailed;
}

// Fails with exit code 1 when an input does not satisfy its identity.
struct InputFailure {
  AxiomReport report;
  std::string what;
  std::vector<std::string> names;
};

void require(const AxiomReport& r, const std::string& what, const std::vector<std::string>& names) {
  if (!r.passed) throw InputFailure{r, what, names};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_check(const std::string& target, const std::string& over, const std::string& identity, const Options& opt,
              std::ostream& out) {
  auto entry = resolve(target, opt);
  if (auto* a = std::get_if<FiniteAlgebra>(&entry)) {
    const Identity which = identity.empty() ? default_identity(a->kind()) : parse_identity(identity);
    return emit_reports({{check_axioms(*a, which), a->basis_names()}}, opt, out);
  }
  const auto& m = std::get<BimoduleData>(entry);
  m.validate();
  if (over.empty()) {
    if (opt.format == "json") {
      out << json{{"algebra_dim", m.algebra_dim}, {"module_dim", m.module_dim()}}.dump() << "\n";
    } else {
      out << "bimodule: algebra_dim " << m.algebra_dim << ", module_dim " << m.module_dim()
          << " (pass --over to check identities)\n";
    }
    return kOk;
  }
  const FiniteAlgebra a = resolve_algebra(over, opt);
  const Identity which = identity.empty() ? default_module_identity(a.kind()) : parse_identity(identity);
  return emit_reports({{check_axioms(a, m, which), m.basis}}, opt, out);
}

BimoduleData coefficients(const FiniteAlgebra& a, const std::string& module, const Options& opt) {
  if (module.empty()) return regular_bimodule(a);
  return resolve_module(module, opt);
}

int cmd_cohomology(const std::string& complex, const std::string& algebra, const std::string& module,
                   unsigned degree, const Options& opt, std::ostream& out) {
  const Theory theory = parse_theory(complex);
  const FiniteAlgebra a = resolve_algebra(algebra, opt);
  const BimoduleData m = coefficients(a, module, opt);
  if (theory == Theory::dl) {
    require(check_axioms(a, Identity::zinbiel), "algebra", a.basis_names());
    require(check_axioms(a, m, Identity::zinbiel_bimodule), "module", m.basis);
  } else {
    require(check_axioms(a, Identity::lie), "algebra", a.basis_names());
    require(check_axioms(a, m, Identity::lie_module), "module", m.basis);
  }
  const CohomologyDims dims = cohomology(theory, a, m, degree);
  if (opt.format == "json") {
    out << json{{"theory", std::string(to_string(theory))},
                {"degree", degree},
                {"dim_Z", dims.dim_Z},
                {"dim_B", dims.dim_B},
                {"dim_H", dims.dim_H}}
               .dump()
        << "\n";
  } else {
    out << to_string(theory) << " cohomology in degree " << degree << ": dim C = " << dims.dim_C
        << ", dim Z = " << dims.dim_Z << ", dim B = " << dims.dim_B << ", dim H = " << dims.dim_H << "\n";
  }
  return kOk;
}

int cmd_tensor_lie(const std::string& leibniz, const std::string& zinbiel, const std::string& output,
                   const Options& opt, std::ostream& out) {
  const FiniteAlgebra g = resolve_algebra(leibniz, opt);
  const FiniteAlgebra b = resolve_algebra(zinbiel, opt);
  require(check_axioms(g, Identity::leibniz), "Leibniz factor", g.basis_names());
  require(check_axioms(b, Identity::zinbiel), "Zinbiel factor", b.basis_names());
  const FiniteAlgebra lie = tensor_lie(g, b, InputCheck::trust);
  if (output.empty()) {
    out << to_json(lie);
    return kOk;
  }
  save_entry(output, lie);
  const AxiomReport r = check_axioms(lie, Identity::lie);
  if (opt.format == "json") {
    out << json{{"dim", lie.dim()}, {"output", output}, {"lie", report_json(r)}}.dump() << "\n";
  } else {
    out << "wrote " << output << " (dim " << lie.dim() << ")\n" << r.describe(lie.basis_names()) << "\n";
  }
  return r.passed ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& leibniz, const std::string& zinbiel, const std::string& module, unsigned degree,
               std::size_t trials, std::uint64_t seed, bool check_inputs, const Options& opt, std::ostream& out) {
  const FiniteAlgebra g = resolve_algebra(leibniz, opt);
  const FiniteAlgebra b = resolve_algebra(zinbiel, opt);
  const BimoduleData m = coefficients(b, module, opt);
  if (check_inputs) {
    require(check_axioms(g, Identity::leibniz), "Leibniz factor", g.basis_names());
    require(check_axioms(b, Identity::zinbiel), "Zinbiel factor", b.basis_names());
    require(check_axioms(b, m, Identity::zinbiel_bimodule), "module", m.basis);
  }
  const ChainMapReport r = verify_chain_map(g, b, m, degree, trials, seed);
  if (opt.format == "json") {
    json doc = {{"degree", r.degree},   {"trials", r.trials},       {"exact", r.exact},
                {"commuting", r.commuting}, {"squares_to_zero", r.squares_to_zero}, {"passed", r.passed()},
                {"seed", seed}};
    if (r.failure) {
      doc["failure"] = {{"trial", r.failure->trial},
                        {"property", r.failure->property},
                        {"tuple", r.failure->tuple},
                        {"lhs", vector_json(r.failure->lhs)},
                        {"rhs", vector_json(r.failure->rhs)}};
    }
    out << doc.dump() << "\n";
  } else {
    out << r.exact << "/" << r.trials << " exact\n";
    if (!r.passed()) {
      out << "commutation held in " << r.commuting << "/" << r.trials << " trials; dl differential squared to zero in "
          << r.squares_to_zero << "/" << r.trials << " trials\n";
      const auto& f = *r.failure;
      out << "first failure: trial " << f.trial << ", " << f.property << " at (";
      for (std::size_t k = 0; k < f.tuple.size(); ++k) out << (k ? ", " : "") << f.tuple[k];
      out << ")\n";
      if (f.property == "commutation") {
        const BimoduleData tm = tensor_module(g, b, m, InputCheck::trust);
        out << "  delta_Lie(Psi f) = " << vector_text(f.lhs, tm.basis) << "\n";
        out << "  Psi(delta_DL f)  = " << vector_text(f.rhs, tm.basis) << "\n";
      } else {
        out << "  delta_DL(delta_DL f) = " << vector_text(f.lhs, m.basis) << "\n";
      }
    }
  }
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_les(const std::string& leibniz, const std::string& zinbiel, const std::string& module, unsigned max_degree,
            bool allow_non_injective, const Options& opt, std::ostream& out) {
  const FiniteAlgebra g = resolve_algebra(leibniz, opt);
  const FiniteAlgebra b = resolve_algebra(zinbiel, opt);
  const BimoduleData m = coefficients(b, module, opt);
  require(check_axioms(g, Identity::leibniz), "Leibniz factor", g.basis_names());
  require(check_axioms(b, Identity::zinbiel), "Zinbiel factor", b.basis_names());
  require(check_axioms(b, m, Identity::zinbiel_bimodule), "module", m.basis);
  const auto rows =
      les_report(g, b, m, max_degree, allow_non_injective ? Injectivity::skip : Injectivity::require);
  bool exact = true;
  for (const auto& row : rows) exact = exact && row.exact();
  if (opt.format == "json") {
    json list = json::array();
    for (const auto& row : rows) {
      list.push_back({{"degree", row.degree},
                      {"h_dl", row.h_dl},
                      {"h_lie", row.h_lie},
                      {"h_q", row.h_q},
                      {"induced_rank", row.induced_rank},
                      {"h_q_predicted", row.h_q_predicted},
                      {"exact", row.exact()}});
    }
    out << json{{"rows", list}, {"exact", exact}}.dump() << "\n";
  } else {
    out << std::setw(3) << "n" << std::setw(8) << "H_DL" << std::setw(8) << "H_Lie" << std::setw(8) << "H_Q"
        << std::setw(8) << "rank" << std::setw(11) << "predicted" << "  exact\n";
    for (const auto& row : rows) {
      out << std::setw(3) << row.degree << std::setw(8) << row.h_dl << std::setw(8) << row.h_lie << std::setw(8)
          << row.h_q << std::setw(8) << row.induced_rank << std::setw(11) << row.h_q_predicted << "  "
          << (row.exact() ? "yes" : "no") << "\n";
    }
  }
  return exact ? kOk : kCheckFailed;
}

int cmd_builtin(const std::string& name, const std::string& output, const Options& opt, std::ostream& out) {
  const CatalogEntry entry = builtin(name, opt.dim_cap);
  if (output.empty()) {
    out << to_json(entry);
  } else {
    save_entry(output, entry);
    out << "wrote " << output << "\n";
  }
  return kOk;
}

int cmd_reproduce(const std::string& which, const Options& opt, std::ostream& out) {
  if (which != "example-4-6") throw ParseError("unknown reproduction '" + which + "' (available: example-4-6)");
  const TwoDimReport r = reproduce_two_dim();
  out << (opt.format == "json" ? render_json(r) : render_text(r));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of dual Leibniz algebras and their tensor-product Lie algebras", "zinbiel"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("ZINBIEL_DIM_CAP")) {
    try {
      opt.dim_cap = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: ZINBIEL_DIM_CAP must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dim-cap", opt.dim_cap, "Largest free Leibniz dimension to build (env ZINBIEL_DIM_CAP)");

  std::string target, over, identity, complex, algebra, module, leibniz, zinbiel, output, name, which;
  unsigned degree = 1;
  unsigned max_degree = 1;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  bool regular = false;
  bool no_input_check = false;
  bool allow_non_injective = false;

  auto* check = app.add_subcommand("check", "Check an algebra or bimodule against its identities");
  check->add_option("target", target, "builtin:NAME or a JSON file")->required();
  check->add_option("--over", over, "Algebra a bimodule is over");
  check->add_option("--identity", identity,
                    "leibniz, zinbiel, lie, zinbiel-bimodule, lie-module or leibniz-representation");

  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions in one degree");
  coh->add_option("--complex", complex, "dl or ce")->required()->check(CLI::IsMember({"dl", "ce"}));
  coh->add_option("--algebra", algebra, "builtin:NAME or a JSON file")->required();
  auto* coh_module = coh->add_option("--module", module, "Coefficient bimodule (default: regular)");
  coh->add_flag("--regular", regular, "Use the algebra itself as coefficients")->excludes(coh_module);
  coh->add_option("--degree", degree, "Cochain degree")->required();

  auto* tl = app.add_subcommand("tensor-lie", "Build the tensor-product Lie algebra");
  tl->add_option("--leibniz", leibniz, "Leibniz factor")->required();
  tl->add_option("--zinbiel", zinbiel, "Zinbiel factor")->required();
  tl->add_option("-o,--output", output, "Write the algebra here instead of standard output");

  auto* vcm = app.add_subcommand("verify-chain-map", "Check that Psi commutes with the differentials");
  vcm->add_option("--leibniz", leibniz, "Leibniz factor")->required();
  vcm->add_option("--zinbiel", zinbiel, "Zinbiel factor")->required();
  auto* vcm_module = vcm->add_option("--module", module, "Coefficient bimodule (default: regular)");
  vcm->add_flag("--regular", regular, "Use the Zinbiel factor itself as coefficients")->excludes(vcm_module);
  vcm->add_option("--degree", degree, "Cochain degree (1, 2 or 3)")->required();
  vcm->add_option("--trials", trials, "Number of random cochains");
  vcm->add_option("--seed", seed, "Random seed");
  vcm->add_flag("--no-input-check", no_input_check, "Skip the axiom checks on the inputs");

  auto* les = app.add_subcommand("les", "Long exact sequence dimension table");
  les->add_option("--leibniz", leibniz, "Leibniz factor")->required();
  les->add_option("--zinbiel", zinbiel, "Zinbiel factor")->required();
  auto* les_module = les->add_option("--module", module, "Coefficient bimodule (default: regular)");
  les->add_flag("--regular", regular, "Use the Zinbiel factor itself as coefficients")->excludes(les_module);
  les->add_option("--max-degree", max_degree, "Last degree of the table");
  les->add_flag("--allow-non-injective", allow_non_injective, "Compute the table even when Psi is not injective");

  auto* bi = app.add_subcommand("builtin", "Emit a catalog algebra or bimodule as JSON");
  bi->add_option("name", name, "Catalog name, e.g. B2, polyzinbiel(3), regular(B3)")->required();
  bi->add_option("-o,--output", output, "Write to this file");

  auto* rep = app.add_subcommand("reproduce", "Recompute a published example");
  rep->add_option("example", which, "example-4-6")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink_out;
    std::ostringstream sink_err;
    const int code = app.exit(e, sink_out, sink_err);
    out << sink_out.str();
    err << sink_err.str();
    if (code != 0) {
      err << app.help();
      return kUsage;
    }
    return kOk;
  }

  try {
    if (*check) return cmd_check(target, over, identity, opt, out);
    if (*coh) return cmd_cohomology(complex, algebra, module, degree, opt, out);
    if (*tl) return cmd_tensor_lie(leibniz, zinbiel, output, opt, out);
    if (*vcm) return cmd_verify(leibniz, zinbiel, module, degree, trials, seed, !no_input_check, opt, out);
    if (*les) return cmd_les(leibniz, zinbiel, module, max_degree, allow_non_injective, opt, out);
    if (*bi) return cmd_builtin(name, output, opt, out);
    if (*rep) return cmd_reproduce(which, opt, out);
  } catch (const InputFailure& f) {
    out << f.what << " fails " << f.report.describe(f.names) << "\n";
    return kCheckFailed;
  } catch (const HypothesisError& e) {
    out << e.what() << "\n";
    return kCheckFailed;
  } catch (const AxiomError& e) {
    out << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace zinbiel::cli
