#include "weylgb/arith/param_scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents add_keys(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

std::string ParamSymbol::name(std::size_t slot) {
  if (slot == a()) return "a";
  if (slot == b()) return "b";
  return "c" + std::to_string(slot - 1);
}

std::optional<Rational> ParamValues::lookup(std::size_t slot) const {
  if (slot == ParamSymbol::a()) return a;
  if (slot == ParamSymbol::b()) return b;
  const std::size_t k = slot - 1;
  if (k >= 1 && k <= c.size()) return c[k - 1];
  return std::nullopt;
}

ParamScalar::ParamScalar(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Exponents{}, r);
}

ParamScalar ParamScalar::symbol(std::size_t slot) {
  ParamScalar s;
  Exponents e(slot + 1, 0);
  e[slot] = 1;
  s.terms_.emplace(std::move(e), Rational(1));
  return s;
}

bool ParamScalar::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> ParamScalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

Rational ParamScalar::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParamScalar::add_term(const Exponents& e, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_constant()) return ParamScalar(b) *= a.terms_.begin()->second;
  if (b.is_constant()) return ParamScalar(a) *= b.terms_.begin()->second;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_keys(ea, eb), ca * cb);
  return r;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) { return *this = *this * o; }

ParamScalar& ParamScalar::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

ParamScalar& ParamScalar::operator/=(const Rational& r) {
  for (auto& [e, c] : terms_) c /= r;
  return *this;
}

ParamScalar ParamScalar::specialize(const ParamValues& values) const {
  ParamScalar out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest = e;
    for (std::size_t slot = 0; slot < e.size(); ++slot) {
      if (e[slot] == 0) continue;
      if (auto v = values.lookup(slot)) {
        coeff *= v->pow(static_cast<unsigned>(e[slot]));
        rest[slot] = 0;
      }
    }
    trim(rest);
    out.add_term(rest, coeff);
  }
  return out;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  // Highest degree first; within a degree, a before b before c1 ...
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const int dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    Rational c = t->second;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t slot = 0; slot < t->first.size(); ++slot) {
      const int k = t->first[slot];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ParamSymbol::name(slot);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      os << c.str();
    else if (c.is_one())
      os << mono;
    else
      os << c.str() << "*" << mono;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.str(); }

}  // namespace weylgb
