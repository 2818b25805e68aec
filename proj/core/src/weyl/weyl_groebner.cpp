#include "weylgb/weyl/weyl_groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weylgb/arith/term_format.hpp"
#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

struct Lead {
  Exponents exp;
  Rational coeff;
};

Lead rational_lead(const WeylElement& g, const WeylOrder& ord) {
  const WeylTerm t = leading_term(g, ord);
  auto v = t.coeff.constant_value();
  if (!v)
    throw ParameterLeadingCoefficient("leading coefficient " + t.coeff.str() + " involves a parameter");
  return {t.exp, *v};
}

WeylElement make_monic(WeylElement g, const WeylOrder& ord) {
  const Lead l = rational_lead(g, ord);
  if (!l.coeff.is_one()) g *= ParamScalar(Rational(1) / l.coeff);
  return g;
}

}  // namespace

WeylDivision weyl_divide(const WeylElement& f, std::span<const WeylElement> G, const WeylOrder& ord) {
  const auto& ctx = f.context();
  std::vector<Lead> leads;
  for (const WeylElement& g : G) {
    if (g.is_zero()) throw ZeroElement("division by the zero operator");
    if (!(*g.context() == *ctx)) throw ContextMismatch("divisor lives in a different algebra");
    leads.push_back(rational_lead(g, ord));
  }

  WeylDivision out{WeylElement(ctx), std::vector<WeylElement>(G.size(), WeylElement(ctx))};
  std::map<Exponents, ParamScalar, MonomialOrder::Descending> work(ord.descending());
  for (const auto& [e, c] : f.terms()) work.emplace(e, c);

  while (!work.empty()) {
    auto top = work.begin();
    const Exponents e = top->first;
    const ParamScalar c = top->second;
    std::size_t i = 0;
    while (i < G.size() && !divides(leads[i].exp, e)) ++i;
    if (i == G.size()) {
      out.remainder.add_term(e, c);
      work.erase(top);
      continue;
    }
    const Exponents shift = e - leads[i].exp;
    ParamScalar q = c;
    q /= leads[i].coeff;
    out.quotients[i].add_term(shift, q);
    const WeylElement step = G[i].left_mul_term(shift, -q);
    for (const auto& [pe, pc] : step.terms()) {
      auto [it, inserted] = work.try_emplace(pe, pc);
      if (!inserted) {
        it->second += pc;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    if (work.count(e) != 0) throw std::logic_error("weyl_divide: leading term did not cancel (order not multiplicative)");
  }
  return out;
}

WeylElement weyl_normal_form(const WeylElement& f, std::span<const WeylElement> G, const WeylOrder& ord) {
  return weyl_divide(f, G, ord).remainder;
}

std::pair<WeylElement, WeylElement> weyl_spair_multipliers(const WeylElement& f, const WeylElement& g,
                                                           const WeylOrder& ord) {
  if (!(*f.context() == *g.context())) throw ContextMismatch("S-pair of elements in different algebras");
  const WeylTerm lf = leading_term(f, ord), lg = leading_term(g, ord);
  const Exponents l = lcm(lf.exp, lg.exp);
  return {WeylElement::monomial(f.context(), l - lf.exp, lg.coeff),
          WeylElement::monomial(f.context(), l - lg.exp, lf.coeff)};
}

WeylElement weyl_spair(const WeylElement& f, const WeylElement& g, const WeylOrder& ord) {
  auto [mf, mg] = weyl_spair_multipliers(f, g, ord);
  return mf * f - mg * g;
}

std::vector<WeylElement> weyl_buchberger(std::span<const WeylElement> input, const WeylOrder& ord) {
  std::vector<WeylElement> basis;
  for (const WeylElement& g : input)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return basis;

  const auto& ctx = basis.front().context();
  for (const WeylElement& g : basis) {
    if (!(*g.context() == *ctx)) throw ContextMismatch("generators live in different algebras");
    if (ctx->homogenized() && !g.is_homogeneous())
      throw NonHomogeneousInput("Buchberger in D^(h) needs homogeneous generators: " + g.str());
    rational_lead(g, ord);
  }
  if (!ctx->homogenized()) {
    for (int w : first_weight(ord, ctx->nvars()))
      if (w < 0)
        throw InvalidOrder("Buchberger in the plain Weyl algebra needs a first weight with u, v >= 0");
  }

  std::vector<Exponents> lm;
  for (const WeylElement& g : basis) lm.push_back(leading_term(g, ord).exp);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  auto is_pending = [&pending](std::size_t i, std::size_t j) {
    return pending.count({std::min(i, j), std::max(i, j)}) > 0;
  };

  while (!pending.empty()) {
    auto pick = pending.begin();
    Exponents best = lcm(lm[pick->first], lm[pick->second]);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponents l = lcm(lm[it->first], lm[it->second]);
      if (ord.greater(best, l)) {
        best = std::move(l);
        pick = it;
      }
    }
    const auto [i, j] = *pick;
    pending.erase(pick);

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k)
      if (k != i && k != j && divides(lm[k], best) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    if (chain) continue;

    WeylElement r = weyl_normal_form(weyl_spair(basis[i], basis[j], ord), basis, ord);
    if (r.is_zero()) continue;
    r = make_monic(std::move(r), ord);
    const std::size_t n = basis.size();
    lm.push_back(leading_term(r, ord).exp);
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }
  return basis;
}

bool weyl_is_groebner_basis(std::span<const WeylElement> G, const WeylOrder& ord) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!weyl_normal_form(weyl_spair(G[i], G[j], ord), G, ord).is_zero()) return false;
  return true;
}

std::string first_difference(const WeylElement& p, const WeylElement& q) {
  const WeylElement diff = p - q;
  if (diff.is_zero()) return "";
  auto best = diff.terms().begin();
  for (auto it = std::next(best); it != diff.terms().end(); ++it) {
    const int da = total_degree(it->first), db = total_degree(best->first);
    if (da > db || (da == db && it->first > best->first)) best = it;
  }
  std::ostringstream os;
  detail::append_signed_term(os, true, best->second, weyl_monomial_str(*diff.context(), best->first));
  return os.str();
}

StandardRepCertificate check_standard_rep(const WeylElement& f, std::span<const RepTerm> terms,
                                          const WeylOrder& ord) {
  StandardRepCertificate cert;
  const auto& ctx = f.context();
  WeylElement sum(ctx);
  std::vector<WeylElement> products;
  for (const RepTerm& t : terms) {
    products.push_back(t.cofactor * t.generator);
    sum += products.back();
  }
  cert.identity_holds = (sum == f);
  if (!cert.identity_holds) cert.detail = "f - sum: " + first_difference(f, sum);

  std::optional<Exponents> lead_f;
  if (!f.is_zero()) {
    lead_f = leading_term(f, ord).exp;
    cert.lead_f = weyl_monomial_str(*ctx, *lead_f);
  }
  for (std::size_t i = 0; i < products.size(); ++i) {
    if (products[i].is_zero()) {
      cert.lead_terms.emplace_back();
      continue;
    }
    const Exponents lp = leading_term(products[i], ord).exp;
    cert.lead_terms.push_back(weyl_monomial_str(*ctx, lp));
    if (!cert.failing_index && (!lead_f || ord.greater(lp, *lead_f))) cert.failing_index = i;
  }
  if (cert.failing_index && cert.detail.empty())
    cert.detail = "term " + std::to_string(*cert.failing_index) + " leads with " +
                  cert.lead_terms[*cert.failing_index] + " above in(f) = " + cert.lead_f;
  cert.ok = cert.identity_holds && !cert.failing_index;
  return cert;
}

}  // namespace weylgb
