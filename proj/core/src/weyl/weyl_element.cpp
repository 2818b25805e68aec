#include "weylgb/weyl/weyl_element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "weylgb/arith/term_format.hpp"
#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

// k! * C(b,k) * C(g,k): coefficient of x^(g-k) d^(b-k) in d^b x^g.
long long leibniz_coeff(int b, int g, int k) {
  long long r = 1;
  // b!/(b-k)! * g!/(g-k)! / k!
  for (int i = 0; i < k; ++i) r *= (b - i);
  for (int i = 0; i < k; ++i) r *= (g - i);
  for (int i = 2; i <= k; ++i) r /= i;
  return r;
}

struct RawTerm {
  Exponents exp;
  long long coeff;
};

// (x^a1 d^b1 h^k1) * (x^a2 d^b2 h^k2) as a normally ordered sum.
std::vector<RawTerm> multiply_monomials(const Exponents& left, const Exponents& right, std::size_t n,
                                        bool homogenized) {
  Exponents base = left + right;
  std::vector<RawTerm> out{{base, 1}};
  for (std::size_t i = 0; i < n; ++i) {
    const int b = left[n + i];   // d_i power on the left
    const int g = right[i];      // x_i power on the right
    const int kmax = std::min(b, g);
    if (kmax == 0) continue;
    std::vector<RawTerm> next;
    next.reserve(out.size() * static_cast<std::size_t>(kmax + 1));
    for (const RawTerm& t : out) {
      for (int k = 0; k <= kmax; ++k) {
        RawTerm u{t.exp, t.coeff * leibniz_coeff(b, g, k)};
        u.exp[i] -= k;
        u.exp[n + i] -= k;
        if (homogenized) u.exp[2 * n] += 2 * k;
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

WeylContext::WeylContext(std::vector<std::string> coords, std::vector<std::string> derivs, bool homogenized)
    : coords_(std::move(coords)), derivs_(std::move(derivs)), homogenized_(homogenized) {
  if (coords_.size() != derivs_.size()) throw ContextMismatch("WeylContext: coordinate/derivation count mismatch");
}

std::shared_ptr<const WeylContext> WeylContext::make(std::size_t n, bool homogenized, const std::string& coord) {
  std::vector<std::string> xs, ds;
  for (std::size_t i = 1; i <= n; ++i) {
    xs.push_back(coord + std::to_string(i));
    ds.push_back("d" + std::to_string(i));
  }
  return std::make_shared<const WeylContext>(std::move(xs), std::move(ds), homogenized);
}

std::shared_ptr<const WeylContext> WeylContext::with_homogenization(bool homogenized) const {
  return std::make_shared<const WeylContext>(coords_, derivs_, homogenized);
}

WeylElement::WeylElement(WeylContextPtr ctx, const ParamScalar& constant) : ctx_(std::move(ctx)) {
  add_term(Exponents(ctx_->slots(), 0), constant);
}

WeylElement WeylElement::monomial(WeylContextPtr ctx, Exponents exp, ParamScalar c) {
  if (exp.size() != ctx->slots()) throw ContextMismatch("monomial exponent has the wrong length");
  if (!ctx->homogenized() && exp[ctx->h_slot()] != 0) throw ContextMismatch("h used in the plain Weyl algebra");
  WeylElement p(std::move(ctx));
  p.add_term(exp, c);
  return p;
}

WeylElement WeylElement::x(WeylContextPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw IndexOutOfRange("coordinate index out of range");
  Exponents e(ctx->slots(), 0);
  e[ctx->x_slot(i)] = 1;
  return monomial(std::move(ctx), std::move(e));
}

WeylElement WeylElement::d(WeylContextPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw IndexOutOfRange("derivation index out of range");
  Exponents e(ctx->slots(), 0);
  e[ctx->d_slot(i)] = 1;
  return monomial(std::move(ctx), std::move(e));
}

WeylElement WeylElement::h(WeylContextPtr ctx) {
  if (!ctx->homogenized()) throw ContextMismatch("h is only available in the homogenized Weyl algebra");
  Exponents e(ctx->slots(), 0);
  e[ctx->h_slot()] = 1;
  return monomial(std::move(ctx), std::move(e));
}

WeylElement WeylElement::theta(WeylContextPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw IndexOutOfRange("Euler operator index out of range");
  Exponents e(ctx->slots(), 0);
  e[ctx->x_slot(i)] = 1;
  e[ctx->d_slot(i)] = 1;
  return monomial(std::move(ctx), std::move(e));
}

WeylElement WeylElement::theta_sum(WeylContextPtr ctx) {
  WeylElement s(ctx);
  for (std::size_t i = 0; i < ctx->nvars(); ++i) s += theta(ctx, i);
  return s;
}

ParamScalar WeylElement::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void WeylElement::add_term(const Exponents& e, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylElement::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool WeylElement::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

void WeylElement::check_context(const WeylElement& o) const {
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw ContextMismatch("Weyl operands live in different algebras");
}

WeylElement WeylElement::operator-() const {
  WeylElement r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  check_context(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  check_context(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const ParamScalar& s) {
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

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  a.check_context(b);
  WeylElement r(a.ctx_);
  const std::size_t n = a.ctx_->nvars();
  const bool hom = a.ctx_->homogenized();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const ParamScalar c = ca * cb;
      for (const RawTerm& t : multiply_monomials(ea, eb, n, hom)) {
        if (t.coeff == 1)
          r.add_term(t.exp, c);
        else
          r.add_term(t.exp, c * ParamScalar(Rational(static_cast<long>(t.coeff))));
      }
    }
  }
  return r;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.terms_ == b.terms_;
}

WeylElement WeylElement::pow(unsigned e) const {
  WeylElement r(ctx_, ParamScalar(1));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

WeylElement WeylElement::left_mul_term(const Exponents& e, const ParamScalar& c) const {
  WeylElement r(ctx_);
  const std::size_t n = ctx_->nvars();
  const bool hom = ctx_->homogenized();
  for (const auto& [te, tc] : terms_) {
    const ParamScalar cc = c * tc;
    for (const RawTerm& t : multiply_monomials(e, te, n, hom))
      r.add_term(t.exp, t.coeff == 1 ? cc : cc * ParamScalar(Rational(static_cast<long>(t.coeff))));
  }
  return r;
}

WeylElement WeylElement::specialize(const ParamValues& values) const {
  WeylElement r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.specialize(values));
  return r;
}

std::string weyl_monomial_str(const WeylContext& ctx, const Exponents& e) {
  std::string s;
  auto put = [&s](const std::string& name, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (k > 1) s += "^" + std::to_string(k);
  };
  for (std::size_t i = 0; i < ctx.nvars(); ++i) put(ctx.coord(i), e[ctx.x_slot(i)]);
  for (std::size_t i = 0; i < ctx.nvars(); ++i) put(ctx.deriv(i), e[ctx.d_slot(i)]);
  put("h", e[ctx.h_slot()]);
  return s.empty() ? "1" : s;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* p, auto* q) {
    const int dp = total_degree(p->first), dq = total_degree(q->first);
    if (dp != dq) return dp > dq;
    return p->first > q->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    detail::append_signed_term(os, first, t->second, weyl_monomial_str(*ctx_, t->first));
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeylElement& p) { return os << p.str(); }

WeylElement weyl_mul(const WeylElement& p, const WeylElement& q) { return p * q; }

WeylElement homogenize(const WeylElement& p) {
  const auto& ctx = p.context();
  if (ctx->homogenized()) throw ContextMismatch("homogenize expects an element of the plain Weyl algebra");
  WeylElement r(ctx->with_homogenization(true));
  const int top = p.degree();
  for (const auto& [e, c] : p.terms()) {
    Exponents he = e;
    he[ctx->h_slot()] = top - total_degree(e);
    r.add_term(he, c);
  }
  return r;
}

WeylElement dehomogenize(const WeylElement& p) {
  const auto& ctx = p.context();
  if (!ctx->homogenized()) throw ContextMismatch("dehomogenize expects an element of the homogenized Weyl algebra");
  WeylElement r(ctx->with_homogenization(false));
  for (const auto& [e, c] : p.terms()) {
    Exponents de = e;
    de[ctx->h_slot()] = 0;
    r.add_term(de, c);
  }
  return r;
}

bool left_divisible_by_var(const WeylElement& p, std::size_t i) {
  const auto& ctx = p.context();
  if (i >= ctx->nvars()) throw IndexOutOfRange("left_divisible_by_var: index out of range");
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return t.first[ctx->x_slot(i)] >= 1; });
}

}  // namespace weylgb
