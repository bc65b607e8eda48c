#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "reproduce.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/io.hpp"

using namespace zinbiel;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "zinbiel_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Json, AlgebraRoundTrip) {
  for (const auto& name : {"B2", "B3", "polyzinbiel(3)", "lie2", "leibniz2", "freeleibniz(2,3)"}) {
    const auto a = builtin_algebra(name);
    EXPECT_EQ(algebra_from_json(to_json(a)), a) << name;
  }
  const auto m = builtin_bimodule("regular(B3)");
  EXPECT_EQ(bimodule_from_json(to_json(m)), m);
  EXPECT_TRUE(std::holds_alternative<BimoduleData>(entry_from_json(to_json(m))));
}

TEST(Json, KeysAreSortedAndOutputIsStable) {
  const std::string text = to_json(builtin_algebra("B2"));
  EXPECT_EQ(text, to_json(algebra_from_json(text)));
  EXPECT_LT(text.find("\"basis\""), text.find("\"dim\""));
  EXPECT_LT(text.find("\"kind\""), text.find("\"products\""));
  EXPECT_EQ(text.back(), '\n');
}

TEST(Json, AcceptsIntegerAndFractionScalars) {
  const auto a = algebra_from_json(
      R"({"kind":"zinbiel","dim":2,"basis":["x","y"],"products":[{"left":0,"right":0,"result":[[1,"1/2"]]}]})");
  EXPECT_EQ(a.basis_product(0, 0), (SparseVector{{1, Scalar(1, 2)}}));
  const auto b = algebra_from_json(
      R"({"kind":"zinbiel","dim":2,"basis":["x","y"],"products":[{"left":0,"right":0,"result":[[1,3]]}]})");
  EXPECT_EQ(b.basis_product(0, 0), (SparseVector{{1, Scalar(3)}}));
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_THROW(algebra_from_json("not json"), ParseError);
  EXPECT_THROW(algebra_from_json(R"({"kind":"zinbiel"})"), ParseError);
  EXPECT_THROW(algebra_from_json(R"({"kind":"nope","dim":1,"basis":["x"],"products":[]})"), ParseError);
  EXPECT_THROW(
      algebra_from_json(R"({"kind":"zinbiel","dim":1,"basis":["x"],"products":[{"left":3,"right":0,"result":[]}]})"),
      Error);
  EXPECT_THROW(
      algebra_from_json(
          R"({"kind":"zinbiel","dim":1,"basis":["x"],"products":[{"left":0,"right":0,"result":[[0,"1/0"]]}]})"),
      Error);
  EXPECT_THROW(load_entry(scratch("missing.json")), Error);
}

TEST(Json, SaveAndLoad) {
  const auto path = scratch("poly.json");
  save_entry(path, builtin("polyzinbiel(2)"));
  EXPECT_EQ(std::get<FiniteAlgebra>(load_entry(path)), builtin_algebra("polyzinbiel(2)"));
}

TEST(Cli, CheckBuiltins) {
  auto r = invoke({"check", "builtin:B3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "zinbiel: PASS\n");
  r = invoke({"check", "builtin:B2perturbed"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("zinbiel: FAIL"), std::string::npos);
  r = invoke({"check", "builtin:leibniz2", "--identity", "lie"});
  EXPECT_EQ(r.code, 1);
  r = invoke({"check", "builtin:regular(B2)", "--over", "builtin:B2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "zinbiel-bimodule: PASS\n");
}

TEST(Cli, CheckJson) {
  const auto r = invoke({"--format", "json", "check", "builtin:B3"});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["passed"], true);
}

TEST(Cli, Cohomology) {
  auto r = invoke({"cohomology", "--complex", "dl", "--algebra", "builtin:B2", "--regular", "--degree", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dl cohomology in degree 2: dim C = 8, dim Z = 3, dim B = 2, dim H = 1\n");
  r = invoke({"--format", "json", "cohomology", "--complex", "dl", "--algebra", "builtin:B2", "--degree", "2"});
  EXPECT_EQ(r.out, "{\"degree\":2,\"dim_B\":2,\"dim_H\":1,\"dim_Z\":3,\"theory\":\"dl\"}\n");
  r = invoke({"cohomology", "--complex", "ce", "--algebra", "builtin:lie2", "--degree", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim H = 0"), std::string::npos);
}

TEST(Cli, CohomologyRejectsWrongInputs) {
  auto r = invoke({"cohomology", "--complex", "dl", "--algebra", "builtin:B2perturbed", "--degree", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("algebra fails zinbiel: FAIL", 0), 0u);
  r = invoke({"cohomology", "--complex", "ce", "--algebra", "builtin:leibniz2", "--degree", "1"});
  EXPECT_EQ(r.code, 1);
  r = invoke({"cohomology", "--complex", "dl", "--algebra", "builtin:B2", "--degree", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  r = invoke({"cohomology", "--complex", "xx", "--algebra", "builtin:B2", "--degree", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"check", "builtin:nosuch"}).code, 2);
  EXPECT_EQ(invoke({"check", "builtin:freeleibniz(2,9)"}).code, 2);
  EXPECT_EQ(invoke({"--dim-cap", "2000", "check", "builtin:freeleibniz(2,3)"}).code, 0);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify-chain-map"), std::string::npos);
}

TEST(Cli, TensorLieToFile) {
  const auto path = scratch("tensor.json");
  auto r = invoke({"tensor-lie", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2", "-o", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(dim 12)"), std::string::npos);
  EXPECT_NE(r.out.find("lie: PASS"), std::string::npos);
  r = invoke({"check", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lie: PASS\n");
  r = invoke({"tensor-lie", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2perturbed"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, VerifyChainMap) {
  auto r = invoke({"verify-chain-map", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2", "--regular",
                "--degree", "2", "--trials", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3/3 exact\n");
  r = invoke({"verify-chain-map", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2perturbed",
           "--degree", "1", "--trials", "2", "--no-input-check"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("dl differential squares to zero"), std::string::npos);
  r = invoke({"verify-chain-map", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2perturbed",
           "--degree", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("fails zinbiel"), std::string::npos);
}

TEST(Cli, Les) {
  auto r = invoke({"les", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2", "--max-degree", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not injective at degree 3"), std::string::npos);
  r = invoke({"les", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2", "--max-degree", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("yes"), std::string::npos);
  r = invoke({"--format", "json", "les", "--leibniz", "builtin:freeleibniz(2,2)", "--zinbiel", "builtin:B2",
           "--max-degree", "1", "--allow-non-injective"});
  EXPECT_EQ(r.code, 1);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["exact"], false);
  EXPECT_EQ(doc["rows"].size(), 2u);
}

TEST(Cli, BuiltinRoundTrip) {
  const auto r = invoke({"builtin", "B3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_json(builtin_algebra("B3")));
  EXPECT_EQ(invoke({"builtin", "B3"}).out, r.out);
  const auto path = scratch("regular.json");
  EXPECT_EQ(invoke({"builtin", "regular(B2)", "-o", path.string()}).code, 0);
  const auto check = invoke({"check", path.string(), "--over", "builtin:B2"});
  EXPECT_EQ(check.code, 0);
  EXPECT_EQ(check.out, "zinbiel-bimodule: PASS\n");
}

TEST(Reproduce, TwoDimensionalExample) {
  const auto r = cli::reproduce_two_dim();
  EXPECT_EQ(r.degree2.dim_H, 1u);
  EXPECT_EQ(r.free_parameters, (std::vector<std::string>{"a^2_11", "a^2_12", "a^2_21"}));
  EXPECT_EQ(r.coboundary_parameter_count, 2u);
  EXPECT_TRUE(r.coboundary_match_published);
  EXPECT_FALSE(r.constraints_match_published);
  EXPECT_EQ(r.psi_rank, 8u);
  EXPECT_EQ(r.psi_columns, 8u);
  EXPECT_EQ(r.induced_rank, 1u);
  EXPECT_EQ(r.lie2_h2, 0u);
  ASSERT_FALSE(r.constraints.empty());
  EXPECT_EQ(cli::format_form(r.constraints[0], r.variables), "a^1_11 + 2 a^2_12 - a^2_21");
}

TEST(Reproduce, CommandOutput) {
  const auto r = invoke({"reproduce", "example-4-6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim H^2 = 1 (matches published value)"), std::string::npos);
  EXPECT_NE(r.out.find("a^1_11 + 2 a^2_12 - a^2_21 = 0"), std::string::npos);
  EXPECT_NE(r.out.find("dim H^2_CE = 0 (differs from published value)"), std::string::npos);
  const auto j = invoke({"--format", "json", "reproduce", "example-4-6"});
  EXPECT_EQ(json::parse(j.out)["dim_H"], 1);
  EXPECT_EQ(invoke({"reproduce", "nothing"}).code, 2);
}
