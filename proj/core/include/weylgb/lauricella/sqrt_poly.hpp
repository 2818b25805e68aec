#pragma once

#include <cstddef>
#include <string>

#include "weylgb/arith/cpoly.hpp"

namespace weylgb {

/// x1..xm.
PolyContextPtr coordinate_context(std::size_t m);
/// x1..xm, t1..tm, where t_i stands for the square root of x_i.
PolyContextPtr sqrt_context(std::size_t m);

/// Polynomial in x and t = sqrt(x), kept reduced modulo t_i^2 - x_i so that
/// every t-exponent is 0 or 1.
class SqrtPoly {
public:
  explicit SqrtPoly(std::size_t m);
  /// Reduces an arbitrary polynomial of sqrt_context(m).
  SqrtPoly(std::size_t m, const CPoly& p);
  SqrtPoly(std::size_t m, const Rational& constant);

  static SqrtPoly x(std::size_t m, std::size_t i);  // 0-based
  static SqrtPoly t(std::size_t m, std::size_t i);  // 0-based

  std::size_t m() const noexcept { return m_; }
  const CPoly& poly() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_.is_zero(); }
  /// True when some term still carries a square root.
  bool has_odd_t() const;
  /// The same polynomial in coordinate_context(m). Throws std::logic_error
  /// if a square root survives.
  CPoly to_x() const;

  SqrtPoly operator-() const;
  SqrtPoly& operator+=(const SqrtPoly& o);
  SqrtPoly& operator-=(const SqrtPoly& o);
  friend SqrtPoly operator+(SqrtPoly a, const SqrtPoly& b) { return a += b; }
  friend SqrtPoly operator-(SqrtPoly a, const SqrtPoly& b) { return a -= b; }
  friend SqrtPoly operator*(const SqrtPoly& a, const SqrtPoly& b);
  friend bool operator==(const SqrtPoly& a, const SqrtPoly& b) { return a.p_ == b.p_; }

  std::string str() const { return p_.str(); }

private:
  static CPoly reduce(std::size_t m, const CPoly& p);
  std::size_t m_;
  CPoly p_;
};

std::ostream& operator<<(std::ostream& os, const SqrtPoly& p);

}  // namespace weylgb
