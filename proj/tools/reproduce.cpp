#include "reproduce.hpp"

#include <sstream>

#include "json.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/tensor_bridge.hpp"

namespace zinbiel::cli {

namespace {

constexpr std::size_t kPublishedH2 = 1;
constexpr std::size_t kPublishedLie2H2 = 1;

Matrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) entries.push_back({r, e.index, e.value});
  }
  return Matrix::from_triplets(rows.size(), cols, entries);
}

bool same_row_space(const Matrix& a, const Matrix& b) { return row_echelon(a).rows == row_echelon(b).rows; }

// a^k_ij sits at coordinate (k-1)*4 + (i-1)*2 + (j-1).
std::uint32_t alpha(unsigned k, unsigned i, unsigned j) { return (k - 1) * 4 + (i - 1) * 2 + (j - 1); }
// g^k_i sits at coordinate (k-1)*2 + (i-1).
std::uint32_t beta(unsigned k, unsigned i) { return (k - 1) * 2 + (i - 1); }

const char* verdict(bool matches) { return matches ? "matches published value" : "differs from published value"; }

}  // namespace

std::string format_form(const SparseVector& form, const std::vector<std::string>& variables) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : form) {
    const bool negative = e.value.sign() < 0;
    const Scalar magnitude = negative ? -e.value : e.value;
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    if (magnitude != Scalar(1)) os << magnitude << " ";
    os << variables.at(e.index);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

TwoDimReport reproduce_two_dim() {
  TwoDimReport r;
  const FiniteAlgebra b = builtin_algebra("B2");
  const BimoduleData m = regular_bimodule(b);

  r.degree2 = cohomology(Theory::dl, b, m, 2);
  for (unsigned k = 1; k <= 2; ++k) {
    for (unsigned i = 1; i <= 2; ++i) {
      for (unsigned j = 1; j <= 2; ++j) {
        r.variables.push_back("a^" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j));
      }
    }
  }

  const Matrix delta2 = delta_matrix(Theory::dl, b, m, 2).matrix;
  const RowEchelon echelon = row_echelon(delta2);
  r.constraints = echelon.rows;
  std::vector<bool> pivot(r.variables.size(), false);
  for (auto p : echelon.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < r.variables.size(); ++c) {
    if (!pivot[c]) r.free_parameters.push_back(r.variables[c]);
  }

  const std::vector<SparseVector> published = {
      {{alpha(1, 1, 2), Scalar(1)}},
      {{alpha(1, 2, 1), Scalar(1)}},
      {{alpha(1, 2, 2), Scalar(1)}},
      {{alpha(2, 2, 2), Scalar(1)}},
      {{alpha(1, 1, 1), Scalar(1)}, {alpha(2, 1, 2), Scalar(1)}, {alpha(2, 2, 1), Scalar(-1)}},
  };
  for (const auto& form : published) r.published_constraints.push_back(format_form(form, r.variables) + " = 0");
  r.constraints_match_published = same_row_space(delta2, from_rows(delta2.cols(), published));

  // delta_1 g depends on g exactly through the published functionals when
  // both have the same row space.
  const Matrix delta1 = delta_matrix(Theory::dl, b, m, 1).matrix;
  r.coboundary_parameter_count = rank(delta1);
  const std::vector<SparseVector> coboundary_forms = {
      {{beta(1, 2), Scalar(1)}},
      {{beta(1, 1), Scalar(2)}, {beta(2, 2), Scalar(-1)}},
  };
  r.coboundary_match_published = same_row_space(delta1, from_rows(delta1.cols(), coboundary_forms));

  // The Lie side, with g = freeleibniz(2,2).
  const FiniteAlgebra g = builtin_algebra("freeleibniz(2,2)");
  const Matrix psi = psi_matrix(g, b, m, 2);
  r.psi_rank = rank(psi);
  r.psi_columns = psi.cols();
  const FiniteAlgebra lie = tensor_lie(g, b);
  const BimoduleData module = tensor_module(g, b, m);
  const Matrix lie_delta1 = delta_matrix(Theory::ce, lie, module, 1).matrix;
  std::vector<SparseVector> images;
  for (const auto& z : nullspace(delta2)) images.push_back(to_sparse(psi * std::span<const Scalar>(z)));
  r.induced_rank =
      rank(hconcat(lie_delta1, Matrix::from_columns(psi.rows(), std::move(images)))) - rank(lie_delta1);

  const FiniteAlgebra lie2 = builtin_algebra("lie2");
  r.lie2_h2 = cohomology(Theory::ce, lie2, regular_bimodule(lie2), 2).dim_H;
  return r;
}

std::string render_text(const TwoDimReport& r) {
  std::ostringstream os;
  os << "B = <e1, e2 | e1.e1 = e2>, coefficients in B\n";
  os << "dim Z^2 = " << r.degree2.dim_Z << ", dim B^2 = " << r.degree2.dim_B << "\n";
  os << "dim H^2 = " << r.degree2.dim_H << " (" << verdict(r.degree2.dim_H == kPublishedH2) << ")\n";
  os << "\n2-cochains f(e_i, e_j) = a^1_ij e1 + a^2_ij e2; cocycle constraints:\n";
  for (const auto& row : r.constraints) os << "  " << format_form(row, r.variables) << " = 0\n";
  os << "free cocycle parameters (" << r.free_parameters.size() << "):";
  for (std::size_t i = 0; i < r.free_parameters.size(); ++i) os << (i ? ", " : " ") << r.free_parameters[i];
  os << "\npublished constraint list:\n";
  for (const auto& c : r.published_constraints) os << "  " << c << "\n";
  os << "constraint list: " << verdict(r.constraints_match_published) << "\n";
  if (!r.constraints_match_published) {
    os << "  note: on (e1, e1, e1) the terms f(x, y.z) and f(x, z.y) coincide, which doubles a^2_12\n";
  }
  os << "\ncoboundary parameters (" << r.coboundary_parameter_count << "): g^1_2, 2 g^1_1 - g^2_2 ("
     << verdict(r.coboundary_match_published) << ")\n";
  os << "\ng = freeleibniz(2,2): Psi in degree 2 has rank " << r.psi_rank << " of " << r.psi_columns
     << "; image of H^2_DL in H^2_Lie has dimension " << r.induced_rank << "\n";
  os << "\nlie2 with adjoint coefficients: dim H^2_CE = " << r.lie2_h2 << " ("
     << verdict(r.lie2_h2 == kPublishedLie2H2) << ")\n";
  return os.str();
}

std::string render_json(const TwoDimReport& r) {
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& row : r.constraints) constraints.push_back(format_form(row, r.variables) + " = 0");
  nlohmann::json doc = {
      {"dim_B", r.degree2.dim_B},
      {"dim_H", r.degree2.dim_H},
      {"dim_Z", r.degree2.dim_Z},
      {"dim_H_matches_published", r.degree2.dim_H == kPublishedH2},
      {"constraints", constraints},
      {"free_parameters", r.free_parameters},
      {"published_constraints", r.published_constraints},
      {"constraints_match_published", r.constraints_match_published},
      {"coboundary_parameter_count", r.coboundary_parameter_count},
      {"coboundary_match_published", r.coboundary_match_published},
      {"psi_rank", r.psi_rank},
      {"psi_columns", r.psi_columns},
      {"induced_rank", r.induced_rank},
      {"lie2_dim_H2", r.lie2_h2},
      {"lie2_matches_published", r.lie2_h2 == kPublishedLie2H2},
  };
  return doc.dump() + "\n";
}

}  // namespace zinbiel::cli
