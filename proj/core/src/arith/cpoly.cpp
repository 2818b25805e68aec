#include "weylgb/arith/cpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "weylgb/arith/term_format.hpp"
#include "weylgb/errors.hpp"

namespace weylgb {

std::shared_ptr<const PolyContext> PolyContext::phase_space(std::size_t m, const std::string& coord) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back(coord + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) names.push_back("xi" + std::to_string(i));
  return std::make_shared<const PolyContext>(std::move(names));
}

std::shared_ptr<const PolyContext> PolyContext::make(std::vector<std::string> names) {
  return std::make_shared<const PolyContext>(std::move(names));
}

std::size_t PolyContext::index_of(const std::string& name) const {
  return static_cast<std::size_t>(std::find(names_.begin(), names_.end(), name) - names_.begin());
}

CPoly::CPoly(PolyContextPtr ctx, const ParamScalar& constant) : ctx_(std::move(ctx)) {
  add_term(Exponents(ctx_->size(), 0), constant);
}

CPoly CPoly::monomial(PolyContextPtr ctx, Exponents e, ParamScalar c) {
  CPoly p(std::move(ctx));
  p.add_term(e, c);
  return p;
}

CPoly CPoly::variable(PolyContextPtr ctx, std::size_t i) {
  Exponents e(ctx->size(), 0);
  e.at(i) = 1;
  return monomial(std::move(ctx), std::move(e));
}

ParamScalar CPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void CPoly::add_term(const Exponents& e, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CTerm CPoly::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw ZeroElement("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool CPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

void CPoly::check_context(const CPoly& o) const {
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw ContextMismatch("CPoly operands use different variables");
}

CPoly CPoly::operator-() const {
  CPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_context(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_context(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CPoly& CPoly::operator*=(const ParamScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap out;
  for (auto& [e, c] : terms_) {
    ParamScalar v = c * s;
    if (!v.is_zero()) out.emplace(e, std::move(v));
  }
  terms_ = std::move(out);
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  a.check_context(b);
  CPoly r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

bool operator==(const CPoly& a, const CPoly& b) {
  return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.terms_ == b.terms_;
}

CPoly CPoly::pow(unsigned e) const {
  CPoly r(ctx_, ParamScalar(1));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

CPoly CPoly::mul_term(const Exponents& e, const ParamScalar& c) const {
  CPoly r(ctx_);
  for (const auto& [te, tc] : terms_) r.add_term(te + e, tc * c);
  return r;
}

CPoly CPoly::specialize(const ParamValues& values) const {
  CPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.specialize(values));
  return r;
}

Rational CPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) throw ContextMismatch("evaluation point has the wrong length");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    auto v = c.constant_value();
    if (!v) throw UnspecializedParameter("cannot evaluate a coefficient containing parameters");
    Rational t = *v;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(static_cast<unsigned>(e[i]));
    sum += t;
  }
  return sum;
}

std::string monomial_str(const PolyContext& ctx, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

namespace detail {

void append_signed_term(std::ostringstream& os, bool first, const ParamScalar& c, const std::string& mono) {
  std::string cs;
  bool neg = false;
  if (c.is_monomial()) {
    ParamScalar abs = c;
    const Rational lead = c.terms().begin()->second;
    if (lead.sign() < 0) {
      neg = true;
      abs = -c;
    }
    cs = abs.str();
  } else {
    cs = "(" + c.str() + ")";
  }
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  if (mono == "1")
    os << cs;
  else if (cs == "1")
    os << mono;
  else
    os << cs << "*" << mono;
}

}  // namespace detail

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const int dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    detail::append_signed_term(os, first, t->second, monomial_str(*ctx_, t->first));
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CPoly& p) { return os << p.str(); }

}  // namespace weylgb
