#pragma once

#include <cstdint>
#include <random>

#include "zinbiel/cochain.hpp"

namespace zinbiel {

/// Seed-reproducible source of small integer coefficients.
///
/// Draws come from std::mt19937_64 seeded with the given value; each
/// coefficient is (engine() % 19) - 9, an integer in [-9, 9]. The standard
/// fixes mt19937_64's output sequence, so runs agree across platforms.
class CoefficientSource {
 public:
  explicit CoefficientSource(std::uint64_t seed) : engine_(seed) {}

  int next() { return static_cast<int>(engine_() % 19) - 9; }

 private:
  std::mt19937_64 engine_;
};

/// Fills every coordinate of C^n (in canonical coordinate order) with a draw.
Cochain random_cochain(Theory theory, unsigned degree, std::size_t algebra_dim, std::size_t module_dim,
                       CoefficientSource& source);

}  // namespace zinbiel
