#include "zinbiel/random.hpp"

namespace zinbiel {

Cochain random_cochain(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim,
                       CoefficientSource& source) {
  Cochain shape(theory, degree, algebra_dim, module_dim);
  const std::size_t n = shape.space_dimension();
  SparseVector coords;
  coords.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    const int v = source.next();
    if (v != 0) coords.push_back({static_cast<std::uint32_t>(c), Scalar(v)});
  }
  return Cochain::from_coordinates(theory, degree, algebra_dim, module_dim, coords);
}

}  // namespace zinbiel
