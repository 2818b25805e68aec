#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weylgb/arith/cpoly.hpp"
#include "weylgb/arith/monomial_order.hpp"

namespace weylgb {

/// Result of dividing f by an ordered list G: f = sum q_i g_i + remainder.
struct CDivision {
  CPoly remainder;
  std::vector<CPoly> quotients;
};

/// Full division: no monomial of the remainder is divisible by a leading
/// monomial of G. Always reduces by the first divisor in list order.
/// Throws ParameterLeadingCoefficient if a divisor's leading coefficient is
/// not a rational constant.
CDivision cpoly_divide(const CPoly& f, std::span<const CPoly> G, const MonomialOrder& ord);

CPoly cpoly_normal_form(const CPoly& f, std::span<const CPoly> G, const MonomialOrder& ord);

CPoly cpoly_spoly(const CPoly& f, const CPoly& g, const MonomialOrder& ord);

/// Reduced Groebner basis of <G>: monic, interreduced, sorted by decreasing
/// leading monomial.
std::vector<CPoly> cpoly_buchberger(std::span<const CPoly> G, const MonomialOrder& ord);

/// Buchberger criterion: every S-polynomial reduces to zero modulo G.
bool is_groebner_basis(std::span<const CPoly> G, const MonomialOrder& ord);

/// True when every element of `a` reduces to zero modulo the Groebner basis
/// `gb_b` (i.e. <a> is contained in <gb_b>).
bool ideal_contained(std::span<const CPoly> a, std::span<const CPoly> gb_b, const MonomialOrder& ord);

std::vector<Exponents> leading_monomials(std::span<const CPoly> G, const MonomialOrder& ord);

/// I : x_v^infinity for every v in `vars`, one variable at a time, by
/// elimination of an auxiliary variable t with t*x_v - 1. Works for any
/// ideal. Returns a reduced Groebner basis under degrevlex.
std::vector<CPoly> saturate_by_elimination(std::span<const CPoly> G, std::span<const std::size_t> vars);

/// Same saturation for homogeneous ideals, using the reverse-lex property:
/// with x_v the smallest variable, dividing each basis element by its
/// largest power of x_v yields a basis of I : x_v^infinity. Throws
/// NonHomogeneousInput otherwise. Returns a reduced basis under `final_order`.
std::vector<CPoly> saturate_homogeneous(std::span<const CPoly> G, std::span<const std::size_t> vars,
                                        const MonomialOrder& final_order);

}  // namespace weylgb
