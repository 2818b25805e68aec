#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylgb/weyl/weyl_element.hpp"
#include "weylgb/weyl/weyl_order.hpp"

namespace weylgb {

/// f = sum q_i * g_i + remainder (left multiplication).
struct WeylDivision {
  WeylElement remainder;
  std::vector<WeylElement> quotients;
};

/// Left division. No monomial of the remainder is divisible by a leading
/// monomial of G; in(q_i g_i) <= in(f). The first divisor in list order is
/// always used. Throws ParameterLeadingCoefficient, ZeroElement.
WeylDivision weyl_divide(const WeylElement& f, std::span<const WeylElement> G, const WeylOrder& ord);

WeylElement weyl_normal_form(const WeylElement& f, std::span<const WeylElement> G, const WeylOrder& ord);

/// lc(g) * x^(gamma-alpha) d^(delta-beta) [h^..] f  -  lc(f) * x^(gamma-alpha') d^(delta-beta') [h^..] g.
/// Throws ZeroElement, ContextMismatch.
WeylElement weyl_spair(const WeylElement& f, const WeylElement& g, const WeylOrder& ord);

/// The two left multipliers of weyl_spair: sp = first * f - second * g.
std::pair<WeylElement, WeylElement> weyl_spair_multipliers(const WeylElement& f, const WeylElement& g,
                                                           const WeylOrder& ord);

/// Groebner basis of the left ideal generated by G: the input elements (in
/// order, zeros dropped) followed by monic S-pair remainders. Uses the
/// chain criterion only (the product criterion is not valid in D).
///
/// Throws InvalidOrder if the plain algebra is used with a first weight that
/// has a negative entry, NonHomogeneousInput in D^(h) for inhomogeneous
/// input, ParameterLeadingCoefficient.
std::vector<WeylElement> weyl_buchberger(std::span<const WeylElement> G, const WeylOrder& ord);

/// Every S-pair of G reduces to zero modulo G.
bool weyl_is_groebner_basis(std::span<const WeylElement> G, const WeylOrder& ord);

struct RepTerm {
  WeylElement cofactor;
  WeylElement generator;
};

/// Outcome of a standard-representation check.
struct StandardRepCertificate {
  bool ok = false;
  /// f == sum cofactor_i * generator_i.
  bool identity_holds = false;
  /// First term index whose product's leading monomial exceeds in(f).
  std::optional<std::size_t> failing_index;
  /// Leading monomial of f and of each product (empty string for zero products).
  std::string lead_f;
  std::vector<std::string> lead_terms;
  /// First differing term when the identity fails.
  std::string detail;
};

/// f = sum c_i g_i with in(c_i g_i) <= in(f) for every nonzero product.
StandardRepCertificate check_standard_rep(const WeylElement& f, std::span<const RepTerm> terms,
                                          const WeylOrder& ord);

/// Text of the highest term of p - q under a graded order ("" if equal).
std::string first_difference(const WeylElement& p, const WeylElement& q);

}  // namespace weylgb
