#pragma once

#include <cstddef>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cochain.hpp"
#include "zinbiel/matrix.hpp"

namespace zinbiel {

/// Largest cochain degree a differential may be applied to.
struct DegreeLimits {
  unsigned dl = 4;
  unsigned ce = 5;
};

/// Dual Leibniz differential, general shuffle formula. `b` must be tagged
/// zinbiel and `m` must be a bimodule over it.
Cochain dl_delta(const FiniteAlgebra& b, const BimoduleData& m, const Cochain& f, const DegreeLimits& limits = {});

/// The hand-expanded differentials of degrees 1, 2 and 3, evaluated densely.
/// Kept separate from dl_delta so each can check the other.
Cochain dl_delta_lowdeg(const FiniteAlgebra& b, const BimoduleData& m, const Cochain& f);

/// Chevalley-Eilenberg differential with coefficients in the left action of `m`.
/// `g` must be tagged lie.
Cochain ce_delta(const FiniteAlgebra& g, const BimoduleData& m, const Cochain& f, const DegreeLimits& limits = {});

/// Dispatches on the cochain's theory.
Cochain apply_delta(const FiniteAlgebra& a, const BimoduleData& m, const Cochain& f, const DegreeLimits& limits = {});

/// Dimension of C^n; 0 for dl in degree 0.
std::size_t cochain_dimension(Theory theory, std::size_t algebra_dim, std::size_t module_dim, unsigned degree);

/// Matrix of delta_n : C^n -> C^{n+1} in canonical coordinates.
struct ComplexSlice {
  Theory theory = Theory::dl;
  unsigned degree = 0;
  Matrix matrix;
};

/// For dl, degree 0 gives the empty map 0 -> C^1.
ComplexSlice delta_matrix(Theory theory, const FiniteAlgebra& a, const BimoduleData& m, unsigned degree,
                          const DegreeLimits& limits = {});

struct CohomologyDims {
  std::size_t dim_C = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_B = 0;
  std::size_t dim_H = 0;
};

CohomologyDims cohomology(Theory theory, const FiniteAlgebra& a, const BimoduleData& m, unsigned degree,
                          const DegreeLimits& limits = {});

}  // namespace zinbiel
