#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weylgb/arith/monomial_order.hpp"
#include "weylgb/weyl/weyl_element.hpp"

namespace weylgb {

/// Orders on Weyl monomials are matrix orders on the (x, d, h) exponent
/// layout of WeylContext. The h slot never carries weight and sits last in
/// the lex tie-break: homogeneous elements of equal degree that agree on
/// every x and d exponent also agree on h.
using WeylOrder = MonomialOrder;

/// Weight (0,1) (order in d), then (1,0) (degree in x), then lex on
/// (x_1..x_n, d_1..d_n).
WeylOrder weyl_order_w(std::size_t n);

/// Weight (-1,...,-1, 1,...,1) with lex tie-break d_1 > ... > d_n > x_1 > ... > x_n.
WeylOrder weyl_order_km(std::size_t n);

/// Pure lex d_1 > ... > d_n > x_1 > ... > x_n.
WeylOrder weyl_order_lex(std::size_t n);

/// Weight (u, v) followed by the given tie-break priority (slot indices in
/// the WeylContext layout; h is appended last).
WeylOrder weyl_weight_order(std::span<const int> u, std::span<const int> v, std::vector<std::size_t> priority);

/// First weight row restricted to (u, v); empty when the order has no weights.
std::vector<int> first_weight(const WeylOrder& ord, std::size_t n);

/// Leading term of p. Throws ZeroElement.
WeylTerm leading_term(const WeylElement& p, const WeylOrder& ord);

}  // namespace weylgb
