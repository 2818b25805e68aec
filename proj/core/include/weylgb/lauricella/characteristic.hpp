#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "weylgb/arith/cpoly.hpp"
#include "weylgb/lauricella/param_set.hpp"

namespace weylgb {

struct CharIdealTorus {
  /// in_(0,1)(l'_i) in (y, xi).
  std::vector<CPoly> generators;
  /// Buchberger under the order w added nothing to {l'_1..l'_m}.
  bool input_is_groebner = false;
};

CharIdealTorus char_ideal_torus(std::size_t m, const ParamSet& P);
inline CharIdealTorus char_ideal_torus(std::size_t m) { return char_ideal_torus(m, ParamSet::symbolic(m)); }

/// Rewrites a polynomial in (y, xi) through y_i = 1/x_i, xi_i = -x_i^2 xi_i
/// and clears the x-denominators by the smallest monomial; the result lives
/// in PolyContext::phase_space(m, "x").
CPoly to_x_chart(const CPoly& p, std::size_t m);

struct CharDimension {
  /// Dimension of the leading-term ideal of <in_(0,1)(l_i)> per draw.
  std::vector<int> dimension_l;
  /// Same for the torus generators moved to the x-chart.
  std::vector<int> dimension_torus;
  std::vector<std::uint64_t> seeds;

  bool consistent() const;
  int dimension() const { return dimension_l.empty() ? -1 : dimension_l.front(); }
};

/// Two draws of random rational parameters (seeds `seed` and `seed + 1`).
CharDimension char_dimension(std::size_t m, std::uint64_t seed = 1);

/// The saturations by x_1...x_m of <L_1..L_m> and of the torus generators
/// moved to the x-chart coincide.
bool torus_agreement(std::size_t m);

}  // namespace weylgb
