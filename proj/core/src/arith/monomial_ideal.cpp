#include "weylgb/arith/monomial_ideal.hpp"

#include <stdexcept>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

std::vector<std::uint32_t> supports(std::span<const Exponents> gens, std::size_t n_vars) {
  if (n_vars > 30) throw std::invalid_argument("monomial ideal: at most 30 variables supported");
  std::vector<std::uint32_t> out;
  for (const Exponents& g : gens) {
    if (g.size() != n_vars) throw ContextMismatch("generator has the wrong number of exponents");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_vars; ++i)
      if (g[i] > 0) mask |= 1u << i;
    out.push_back(mask);
  }
  return out;
}

// A coordinate subspace spanned by the variables in `face` lies in the zero
// set iff no generator is supported inside `face`.
bool is_face(std::uint32_t face, const std::vector<std::uint32_t>& supp) {
  for (std::uint32_t s : supp)
    if ((s & face) == s) return false;
  return true;
}

}  // namespace

int monomial_ideal_dimension(std::span<const Exponents> gens, std::size_t n_vars) {
  const auto supp = supports(gens, n_vars);
  int best = -1;
  const std::uint64_t total = std::uint64_t{1} << n_vars;
  for (std::uint64_t face = 0; face < total; ++face) {
    const int size = __builtin_popcountll(face);
    if (size > best && is_face(static_cast<std::uint32_t>(face), supp)) best = size;
  }
  return best;
}

SquarefreeDegree squarefree_ideal_degree(std::span<const Exponents> gens, std::size_t n_vars) {
  for (const Exponents& g : gens)
    for (int e : g)
      if (e >= 2) throw NonSquarefree("squarefree_ideal_degree: generator with exponent >= 2");
  const auto supp = supports(gens, n_vars);

  SquarefreeDegree out;
  out.dimension = -1;
  const std::uint64_t total = std::uint64_t{1} << n_vars;
  for (std::uint64_t f = 0; f < total; ++f) {
    const auto face = static_cast<std::uint32_t>(f);
    if (!is_face(face, supp)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n_vars && maximal; ++v)
      if (!(face & (1u << v)) && is_face(face | (1u << v), supp)) maximal = false;
    if (!maximal) continue;
    out.facets.push_back(face);
    out.dimension = std::max(out.dimension, __builtin_popcount(face));
  }
  for (std::uint32_t f : out.facets)
    if (__builtin_popcount(f) == out.dimension) ++out.degree;
  return out;
}

}  // namespace weylgb
