#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "weylgb/arith/exponents.hpp"

namespace weylgb {

/// Dimension of the zero set of a monomial ideal: the largest variable set S
/// that contains the support of no generator. Coefficients play no role.
/// Exhaustive over all 2^n subsets (n <= 30).
int monomial_ideal_dimension(std::span<const Exponents> gens, std::size_t n_vars);

struct SquarefreeDegree {
  int dimension = 0;
  long degree = 0;
  /// Facets (maximal faces) of the Stanley-Reisner complex as bit masks,
  /// in increasing numeric order.
  std::vector<std::uint32_t> facets;
};

/// Dimension and degree of a squarefree monomial ideal: the degree is the
/// number of coordinate subspaces of top dimension in its zero set.
/// Throws NonSquarefree if some exponent is >= 2.
SquarefreeDegree squarefree_ideal_degree(std::span<const Exponents> gens, std::size_t n_vars);

}  // namespace weylgb
