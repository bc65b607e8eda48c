#pragma once

#include <string>
#include <vector>

#include "zinbiel/complexes.hpp"
#include "zinbiel/sparse.hpp"

namespace zinbiel::cli {

/// Everything the `reproduce example-4-6` command computes. Cochains are
/// f(e_i, e_j) = sum_k a^k_ij e_k on the algebra e1.e1 = e2 with regular
/// coefficients; coordinates follow the canonical cochain order.
struct TwoDimReport {
  CohomologyDims degree2;
  std::vector<std::string> variables;        // a^k_ij in coordinate order
  std::vector<SparseVector> constraints;     // reduced row echelon rows
  std::vector<std::string> free_parameters;  // non-pivot variables
  bool constraints_match_published = false;
  std::vector<std::string> published_constraints;

  std::size_t coboundary_parameter_count = 0;  // rank of delta_1
  bool coboundary_match_published = false;

  std::size_t psi_rank = 0;      // degree 2, g = freeleibniz(2,2)
  std::size_t psi_columns = 0;
  std::size_t induced_rank = 0;  // H^2_DL -> H^2_Lie for the same g

  std::size_t lie2_h2 = 0;  // CE cohomology of lie2 with adjoint coefficients
};

TwoDimReport reproduce_two_dim();

/// Renders a linear form over named variables, e.g. "a^1_11 + 2 a^2_12 - a^2_21".
std::string format_form(const SparseVector& form, const std::vector<std::string>& variables);

std::string render_text(const TwoDimReport& r);
std::string render_json(const TwoDimReport& r);

}  // namespace zinbiel::cli
