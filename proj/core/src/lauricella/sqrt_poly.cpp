#include "weylgb/lauricella/sqrt_poly.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

PolyContextPtr cached(std::size_t m, bool with_t) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, bool>, PolyContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, with_t}];
  if (!slot) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    if (with_t)
      for (std::size_t i = 1; i <= m; ++i) names.push_back("t" + std::to_string(i));
    slot = PolyContext::make(std::move(names));
  }
  return slot;
}

}  // namespace

PolyContextPtr coordinate_context(std::size_t m) { return cached(m, false); }
PolyContextPtr sqrt_context(std::size_t m) { return cached(m, true); }

SqrtPoly::SqrtPoly(std::size_t m) : m_(m), p_(sqrt_context(m)) {}

SqrtPoly::SqrtPoly(std::size_t m, const CPoly& p) : m_(m), p_(reduce(m, p)) {}

SqrtPoly::SqrtPoly(std::size_t m, const Rational& constant) : m_(m), p_(sqrt_context(m), ParamScalar(constant)) {}

SqrtPoly SqrtPoly::x(std::size_t m, std::size_t i) { return SqrtPoly(m, CPoly::variable(sqrt_context(m), i)); }

SqrtPoly SqrtPoly::t(std::size_t m, std::size_t i) { return SqrtPoly(m, CPoly::variable(sqrt_context(m), m + i)); }

CPoly SqrtPoly::reduce(std::size_t m, const CPoly& p) {
  if (!(*p.context() == *sqrt_context(m))) throw ContextMismatch("polynomial is not in the x,t ring");
  CPoly out(p.context());
  for (const auto& [e, c] : p.terms()) {
    Exponents r = e;
    for (std::size_t i = 0; i < m; ++i) {
      r[i] += r[m + i] / 2;
      r[m + i] %= 2;
    }
    out.add_term(r, c);
  }
  return out;
}

bool SqrtPoly::has_odd_t() const {
  for (const auto& [e, c] : p_.terms())
    for (std::size_t i = 0; i < m_; ++i)
      if (e[m_ + i] != 0) return true;
  return false;
}

CPoly SqrtPoly::to_x() const {
  if (has_odd_t()) throw std::logic_error("a square-root term survived: " + p_.str());
  CPoly out(coordinate_context(m_));
  for (const auto& [e, c] : p_.terms()) out.add_term(Exponents(e.begin(), e.begin() + m_), c);
  return out;
}

SqrtPoly SqrtPoly::operator-() const {
  SqrtPoly r(*this);
  r.p_ = -p_;
  return r;
}

SqrtPoly& SqrtPoly::operator+=(const SqrtPoly& o) {
  p_ += o.p_;
  return *this;
}

SqrtPoly& SqrtPoly::operator-=(const SqrtPoly& o) {
  p_ -= o.p_;
  return *this;
}

SqrtPoly operator*(const SqrtPoly& a, const SqrtPoly& b) { return SqrtPoly(a.m_, a.p_ * b.p_); }

std::ostream& operator<<(std::ostream& os, const SqrtPoly& p) { return os << p.str(); }

}  // namespace weylgb
