#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "weylgb/arith/param_scalar.hpp"

namespace weylgb {

/// Parameters (a, b, c_1..c_m) of the Lauricella system, either the free
/// symbols or rational values.
struct ParamSet {
  std::size_t m = 1;
  ParamScalar a;
  ParamScalar b;
  std::vector<ParamScalar> c;  // c[0] is c_1

  static ParamSet symbolic(std::size_t m);
  static ParamSet rational(const Rational& a, const Rational& b, const std::vector<Rational>& c);
  /// Rationals p/q with |p| <= 40, 1 <= q <= 12 drawn from a seeded mt19937_64.
  static ParamSet random(std::size_t m, std::uint64_t seed);

  bool is_specialized() const;
  /// Values usable with specialize(); only the rational entries are set.
  ParamValues values() const;
  /// Rational value of a parameter slot; nullopt if symbolic.
  std::optional<Rational> rational_a() const { return a.constant_value(); }
};

/// A vector of signs, each +1 or -1.
class SignVector {
public:
  explicit SignVector(std::vector<int> signs);

  /// All 2^m sign vectors, in binary counting order with +1 as 0.
  static std::vector<SignVector> all(std::size_t m);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const noexcept { return signs_; }

private:
  std::vector<int> signs_;
};

}  // namespace weylgb
