#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weylgb/arith/exponents.hpp"
#include "weylgb/arith/monomial_order.hpp"
#include "weylgb/arith/param_scalar.hpp"

namespace weylgb {

/// Ordered variable names of a commutative polynomial ring.
class PolyContext {
public:
  explicit PolyContext(std::vector<std::string> names) : names_(std::move(names)) {}

  /// x1..xn, then xi1..xin.
  static std::shared_ptr<const PolyContext> phase_space(std::size_t m, const std::string& coord = "x");
  static std::shared_ptr<const PolyContext> make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Index of `name`, or size() if absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const PolyContext& a, const PolyContext& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

/// A single term: coefficient times monomial.
struct CTerm {
  Exponents exp;
  ParamScalar coeff;
};

/// Sparse commutative polynomial over ParamScalar. Terms are stored keyed by
/// exponent tuple in an order-independent layout; orders are applied on
/// demand.
class CPoly {
public:
  using TermMap = std::map<Exponents, ParamScalar>;

  explicit CPoly(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}
  CPoly(PolyContextPtr ctx, const ParamScalar& constant);

  static CPoly monomial(PolyContextPtr ctx, Exponents e, ParamScalar c = ParamScalar(1));
  static CPoly variable(PolyContextPtr ctx, std::size_t i);

  const PolyContextPtr& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `e` (zero if absent).
  ParamScalar coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const ParamScalar& c);

  CTerm leading_term(const MonomialOrder& ord) const;
  /// Total degree of the highest-degree term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const ParamScalar& s);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(CPoly a, const ParamScalar& s) { return a *= s; }
  friend bool operator==(const CPoly& a, const CPoly& b);

  CPoly pow(unsigned e) const;
  /// Multiplies by c * x^e.
  CPoly mul_term(const Exponents& e, const ParamScalar& c) const;

  CPoly specialize(const ParamValues& values) const;
  /// Evaluates at a rational point; throws UnspecializedParameter if a
  /// coefficient is not constant.
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Terms printed from the highest graded-lex term down.
  std::string str() const;

private:
  void check_context(const CPoly& o) const;

  PolyContextPtr ctx_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const CPoly& p);

/// Monomial text such as "x1^2*xi1"; "1" for the empty monomial.
std::string monomial_str(const PolyContext& ctx, const Exponents& e);

}  // namespace weylgb
