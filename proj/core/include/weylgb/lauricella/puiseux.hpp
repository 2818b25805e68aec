#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "weylgb/arith/cpoly.hpp"
#include "weylgb/arith/exponents.hpp"
#include "weylgb/arith/rational.hpp"
#include "weylgb/check.hpp"
#include "weylgb/weyl/weyl_element.hpp"

namespace weylgb {

/// Finite sum of c * x_1^(k_1/2) ... x_m^(k_m/2) with integer k_i; terms are
/// keyed by the numerators k.
class PuiseuxFn {
public:
  using TermMap = std::map<Exponents, Rational>;

  explicit PuiseuxFn(std::size_t m) : m_(m) {}
  /// c * x^(k/2).
  static PuiseuxFn monomial(std::size_t m, Exponents halves, const Rational& c = Rational(1));
  /// An ordinary polynomial in x (integer exponents, doubled internally).
  static PuiseuxFn from_poly(const CPoly& p);

  std::size_t m() const noexcept { return m_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Exponents& halves, const Rational& c);

  PuiseuxFn& operator+=(const PuiseuxFn& o);
  PuiseuxFn& operator*=(const Rational& r);
  friend PuiseuxFn operator+(PuiseuxFn a, const PuiseuxFn& b) { return a += b; }
  friend PuiseuxFn operator*(PuiseuxFn a, const Rational& r) { return a *= r; }
  friend PuiseuxFn operator*(const PuiseuxFn& a, const PuiseuxFn& b);
  friend bool operator==(const PuiseuxFn& a, const PuiseuxFn& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

  /// e.g. "x1^(1/2)*x2^(3/2) - 1/3*x1".
  std::string str() const;

private:
  std::size_t m_;
  TermMap terms_;
};

/// Action of a plain-D operator with rational coefficients:
/// d_i x^(k/2) = (k/2) x^(k/2 - 1). Throws UnspecializedParameter,
/// ContextMismatch (homogenized algebra or wrong number of variables).
PuiseuxFn apply_to_puiseux(const WeylElement& p, const PuiseuxFn& f);

/// The four solutions at a = -1/2, b = -2, c_1 = c_2 = 1/2, each against l_1
/// and l_2, followed by the negative control 1 + x_1 (expected to survive;
/// its check passes when it is not annihilated).
CheckList check_example_solutions();

}  // namespace weylgb
