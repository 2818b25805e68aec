#include "weylgb/lauricella/puiseux.hpp"

#include <sstream>

#include "weylgb/errors.hpp"
#include "weylgb/lauricella/operators.hpp"

namespace weylgb {

PuiseuxFn PuiseuxFn::monomial(std::size_t m, Exponents halves, const Rational& c) {
  if (halves.size() != m) throw ContextMismatch("exponent tuple length differs from m");
  PuiseuxFn f(m);
  f.add_term(halves, c);
  return f;
}

PuiseuxFn PuiseuxFn::from_poly(const CPoly& p) {
  PuiseuxFn f(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const auto v = c.constant_value();
    if (!v) throw UnspecializedParameter("polynomial coefficient " + c.str() + " involves a parameter");
    Exponents halves(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) halves[i] = 2 * e[i];
    f.add_term(halves, *v);
  }
  return f;
}

void PuiseuxFn::add_term(const Exponents& halves, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(halves, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PuiseuxFn& PuiseuxFn::operator+=(const PuiseuxFn& o) {
  if (o.m_ != m_) throw ContextMismatch("Puiseux functions in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PuiseuxFn& PuiseuxFn::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

PuiseuxFn operator*(const PuiseuxFn& a, const PuiseuxFn& b) {
  if (a.m_ != b.m_) throw ContextMismatch("Puiseux functions in different numbers of variables");
  PuiseuxFn out(a.m_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string PuiseuxFn::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << "x" << i + 1;
      if (e[i] == 2) continue;
      if (e[i] % 2 == 0)
        mono << "^" << e[i] / 2;
      else
        mono << "^(" << e[i] << "/2)";
    }
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (!any)
      os << mag.str();
    else if (mag.is_one())
      os << mono.str();
    else
      os << mag.str() << "*" << mono.str();
  }
  return os.str();
}

PuiseuxFn apply_to_puiseux(const WeylElement& p, const PuiseuxFn& f) {
  const auto& ctx = *p.context();
  if (ctx.homogenized()) throw ContextMismatch("operators act on functions only in the plain Weyl algebra");
  const std::size_t m = ctx.nvars();
  if (m != f.m()) throw ContextMismatch("operator and function have different numbers of variables");
  PuiseuxFn out(m);
  for (const auto& [pe, pc] : p.terms()) {
    const auto coeff = pc.constant_value();
    if (!coeff) throw UnspecializedParameter("operator coefficient " + pc.str() + " involves a parameter");
    for (const auto& [k, c] : f.terms()) {
      Rational value = *coeff * c;
      Exponents r = k;
      for (std::size_t i = 0; i < m && !value.is_zero(); ++i) {
        for (int s = 0; s < pe[ctx.d_slot(i)]; ++s) {
          value *= Rational(r[i], 2);
          r[i] -= 2;
        }
        r[i] += 2 * pe[ctx.x_slot(i)];
      }
      out.add_term(r, value);
    }
  }
  return out;
}

CheckList check_example_solutions() {
  const ParamSet P = ParamSet::rational(Rational(-1, 2), Rational(-2), {Rational(1, 2), Rational(1, 2)});
  auto mono = [](int k1, int k2, const Rational& c) { return PuiseuxFn::monomial(2, {k1, k2}, c); };
  const Rational third(1, 3);
  const PuiseuxFn poly = mono(0, 0, 1) + mono(2, 0, 2) + mono(0, 2, 2) + mono(2, 2, -2) + mono(4, 0, -third) +
                         mono(0, 4, -third);
  const PuiseuxFn root_x = mono(1, 0, 1);
  const PuiseuxFn root_y = mono(0, 1, 1);
  const PuiseuxFn root_xy = mono(1, 1, 1) * (mono(0, 0, 1) + mono(2, 0, -third) + mono(0, 2, -third));

  const std::vector<std::pair<std::string, PuiseuxFn>> solutions{{"1+2x+2y-2xy-x^2/3-y^2/3", poly},
                                                                 {"sqrt(x)", root_x},
                                                                 {"sqrt(y)", root_y},
                                                                 {"sqrt(xy)(1-x/3-y/3)", root_xy}};
  CheckList out;
  for (const auto& [name, f] : solutions)
    for (std::size_t i = 1; i <= 2; ++i) {
      const PuiseuxFn r = apply_to_puiseux(ell(i, P), f);
      out.add("l" + std::to_string(i) + " annihilates " + name, r.is_zero(), r.is_zero() ? "0" : r.str());
    }
  const PuiseuxFn control = mono(0, 0, 1) + mono(2, 0, 1);
  const PuiseuxFn r = apply_to_puiseux(ell(1, P), control);
  out.add("negative control: l1 does not annihilate 1+x", !r.is_zero(), r.str());
  return out;
}

}  // namespace weylgb
