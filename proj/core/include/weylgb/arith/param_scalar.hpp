#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylgb/arith/exponents.hpp"
#include "weylgb/arith/rational.hpp"

namespace weylgb {

/// Index of a parameter symbol. Slot 0 is a, slot 1 is b, slot 1+k is c_k.
class ParamSymbol {
public:
  static constexpr std::size_t a() { return 0; }
  static constexpr std::size_t b() { return 1; }
  /// c_k for k >= 1.
  static constexpr std::size_t c(std::size_t k) { return 1 + k; }
  static std::string name(std::size_t slot);
};

/// Rational values for some or all of the parameter symbols; unset symbols
/// stay symbolic under specialization.
struct ParamValues {
  std::optional<Rational> a;
  std::optional<Rational> b;
  std::vector<std::optional<Rational>> c;  // c[0] is c_1

  std::optional<Rational> lookup(std::size_t slot) const;
};

/// Polynomial in a, b, c_1, c_2, ... with rational coefficients. This is the
/// coefficient ring of every polynomial and operator in the library.
class ParamScalar {
public:
  using TermMap = std::map<Exponents, Rational>;

  ParamScalar() = default;
  ParamScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  ParamScalar(long n) : ParamScalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static ParamScalar symbol(std::size_t slot);
  static ParamScalar a() { return symbol(ParamSymbol::a()); }
  static ParamScalar b() { return symbol(ParamSymbol::b()); }
  static ParamScalar c(std::size_t k) { return symbol(ParamSymbol::c(k)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// True when no parameter symbol occurs.
  bool is_constant() const noexcept;
  /// The value of a constant scalar; nullopt if a parameter occurs.
  std::optional<Rational> constant_value() const;
  /// Constant coefficient (value at a = b = c = 0).
  Rational constant_term() const;
  const TermMap& terms() const noexcept { return terms_; }

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator*=(const Rational& r);
  /// Division by a nonzero rational.
  ParamScalar& operator/=(const Rational& r);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }

  /// Substitutes every symbol that has a value; the rest stay symbolic.
  ParamScalar specialize(const ParamValues& values) const;

  /// Human-readable form, e.g. "a*b - 2*c1 + 1/2".
  std::string str() const;
  /// True when str() is a single signed product that needs no parentheses
  /// when used as a factor.
  bool is_monomial() const noexcept { return terms_.size() <= 1; }

private:
  void add_term(const Exponents& e, const Rational& r);

  TermMap terms_;  // keys have trailing zeros trimmed; no zero values
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

}  // namespace weylgb
