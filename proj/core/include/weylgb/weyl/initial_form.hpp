#pragma once

#include <span>
#include <variant>

#include "weylgb/arith/cpoly.hpp"
#include "weylgb/weyl/weyl_element.hpp"

namespace weylgb {

/// (u,v)-initial form of an operator together with its (u,v)-order.
///
/// When every u_i + v_i > 0 the form is a commutative polynomial in
/// (coords, xi_1..xi_n[, h]); otherwise it is kept as the Weyl element made of
/// the maximal-weight terms.
struct InitialForm {
  std::variant<CPoly, WeylElement> form;
  long ord = 0;

  bool is_commutative() const noexcept { return std::holds_alternative<CPoly>(form); }
  const CPoly& symbol() const { return std::get<CPoly>(form); }
  const WeylElement& weyl() const { return std::get<WeylElement>(form); }
};

/// max over terms of alpha.u + beta.v. Throws ZeroElement.
long weyl_ord(const WeylElement& p, std::span<const int> u, std::span<const int> v);

/// Throws ZeroElement, NegativeWeightSum, ContextMismatch (wrong lengths).
InitialForm initial_form(const WeylElement& p, std::span<const int> u, std::span<const int> v);

/// Principal symbol: the (0,1)-initial form.
CPoly principal_symbol(const WeylElement& p);

/// Commutative ring holding the symbols of elements of `ctx`: the
/// coordinates, xi_i for each d_i, and h in the homogenized case.
PolyContextPtr symbol_context(const WeylContext& ctx);

}  // namespace weylgb
