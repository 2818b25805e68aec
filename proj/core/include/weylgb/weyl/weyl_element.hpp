#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weylgb/arith/exponents.hpp"
#include "weylgb/arith/param_scalar.hpp"

namespace weylgb {

/// Variables of a Weyl algebra D = Q<x_1..x_n, d_1..d_n> or its
/// homogenization D^(h) with a central h and d_i x_i = x_i d_i + h^2.
///
/// Exponent tuples of its elements have 2n+1 slots: x-exponents, then
/// d-exponents, then the h-exponent (always 0 in the plain algebra).
class WeylContext {
public:
  WeylContext(std::vector<std::string> coords, std::vector<std::string> derivs, bool homogenized);

  /// Coordinates <coord>1..<coord>n with derivations d1..dn.
  static std::shared_ptr<const WeylContext> make(std::size_t n, bool homogenized, const std::string& coord = "x");

  std::size_t nvars() const noexcept { return coords_.size(); }
  std::size_t slots() const noexcept { return 2 * coords_.size() + 1; }
  std::size_t x_slot(std::size_t i) const noexcept { return i; }
  std::size_t d_slot(std::size_t i) const noexcept { return nvars() + i; }
  std::size_t h_slot() const noexcept { return 2 * nvars(); }
  bool homogenized() const noexcept { return homogenized_; }
  const std::string& coord(std::size_t i) const { return coords_.at(i); }
  const std::string& deriv(std::size_t i) const { return derivs_.at(i); }
  const std::vector<std::string>& coords() const noexcept { return coords_; }
  const std::vector<std::string>& derivs() const noexcept { return derivs_; }

  /// Same variables with the homogenization flag switched.
  std::shared_ptr<const WeylContext> with_homogenization(bool homogenized) const;

  friend bool operator==(const WeylContext& a, const WeylContext& b) {
    return a.homogenized_ == b.homogenized_ && a.coords_ == b.coords_ && a.derivs_ == b.derivs_;
  }

private:
  std::vector<std::string> coords_;
  std::vector<std::string> derivs_;
  bool homogenized_;
};

using WeylContextPtr = std::shared_ptr<const WeylContext>;

struct WeylTerm {
  Exponents exp;  // 2n+1 slots
  ParamScalar coeff;
};

/// Normally ordered element sum c * x^alpha d^beta h^k of D or D^(h).
class WeylElement {
public:
  using TermMap = std::map<Exponents, ParamScalar>;

  explicit WeylElement(WeylContextPtr ctx) : ctx_(std::move(ctx)) {}
  WeylElement(WeylContextPtr ctx, const ParamScalar& constant);

  static WeylElement monomial(WeylContextPtr ctx, Exponents exp, ParamScalar c = ParamScalar(1));
  static WeylElement x(WeylContextPtr ctx, std::size_t i);
  static WeylElement d(WeylContextPtr ctx, std::size_t i);
  /// The homogenizing variable; throws ContextMismatch in the plain algebra.
  static WeylElement h(WeylContextPtr ctx);
  /// Euler operator x_i d_i.
  static WeylElement theta(WeylContextPtr ctx, std::size_t i);
  /// Sum of all Euler operators.
  static WeylElement theta_sum(WeylContextPtr ctx);

  const WeylContextPtr& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  ParamScalar coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const ParamScalar& c);

  /// Largest |alpha|+|beta|+k over all terms; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const ParamScalar& s);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  /// Noncommutative product, normally ordered.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(WeylElement a, const ParamScalar& s) { return a *= s; }
  friend WeylElement operator*(const ParamScalar& s, WeylElement a) { return a *= s; }
  friend bool operator==(const WeylElement& a, const WeylElement& b);

  WeylElement pow(unsigned e) const;
  /// (c * x^alpha d^beta h^k) * this, normally ordered.
  WeylElement left_mul_term(const Exponents& e, const ParamScalar& c) const;

  WeylElement specialize(const ParamValues& values) const;

  /// Grammar-compatible text, e.g. "x1^2*d1^2 + c1*x1*d1".
  std::string str() const;

private:
  void check_context(const WeylElement& o) const;

  WeylContextPtr ctx_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const WeylElement& p);

/// Text of a single Weyl monomial; "1" for the identity.
std::string weyl_monomial_str(const WeylContext& ctx, const Exponents& e);

/// Noncommutative product p*q. Throws ContextMismatch.
WeylElement weyl_mul(const WeylElement& p, const WeylElement& q);

/// Inserts powers of h so every term has the top total degree.
/// Throws ContextMismatch for an element already in D^(h).
WeylElement homogenize(const WeylElement& p);

/// Sets h = 1. Throws ContextMismatch for a plain-D element.
WeylElement dehomogenize(const WeylElement& p);

/// True iff p lies in x_i * D, i.e. every normally ordered term carries x_i.
bool left_divisible_by_var(const WeylElement& p, std::size_t i);

}  // namespace weylgb
