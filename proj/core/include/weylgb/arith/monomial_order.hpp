#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "weylgb/arith/exponents.hpp"

namespace weylgb {

/// Matrix order: exponent tuples are compared by a sequence of weight
/// vectors, then lexicographically following a variable priority list
/// (highest priority first). Slots not named in the priority list are
/// compared afterwards in index order.
///
/// The same type orders commutative monomials and normally ordered Weyl
/// monomials (whose tuples are laid out as x-exponents, d-exponents, h).
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(std::size_t n_slots, std::vector<std::vector<int>> weights,
                std::vector<std::size_t> priority);

  /// Lex with slot 0 highest.
  static MonomialOrder lex(std::size_t n);
  /// Lex with an explicit priority permutation.
  static MonomialOrder lex(std::size_t n, std::vector<std::size_t> priority);
  /// Degree reverse lexicographic with slot n-1 smallest.
  static MonomialOrder degrevlex(std::size_t n);
  /// Degree reverse lexicographic where `last` is the smallest variable;
  /// the remaining variables keep their index order.
  static MonomialOrder degrevlex_last(std::size_t n, std::size_t last);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::vector<int>>& weights() const noexcept { return weights_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

  /// Weight of `e` under the given row.
  long weight(std::size_t row, const Exponents& e) const;

  /// Strict "greater first" comparator, usable as a map ordering.
  struct Descending {
    const MonomialOrder* order;
    bool operator()(const Exponents& a, const Exponents& b) const { return order->greater(a, b); }
  };
  Descending descending() const { return Descending{this}; }

private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> weights_;
  std::vector<std::size_t> priority_;  // full permutation after construction
};

}  // namespace weylgb
