#include "weylgb/arith/cgroebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

struct Lead {
  Exponents exp;
  Rational coeff;
};

Lead rational_lead(const CPoly& g, const MonomialOrder& ord) {
  const CTerm t = g.leading_term(ord);
  auto v = t.coeff.constant_value();
  if (!v)
    throw ParameterLeadingCoefficient("leading coefficient " + t.coeff.str() + " of " + g.str() +
                                      " involves a parameter");
  return {t.exp, *v};
}

CPoly make_monic(CPoly g, const MonomialOrder& ord) {
  const Lead l = rational_lead(g, ord);
  if (!l.coeff.is_one()) g *= ParamScalar(Rational(1) / l.coeff);
  return g;
}

}  // namespace

CDivision cpoly_divide(const CPoly& f, std::span<const CPoly> G, const MonomialOrder& ord) {
  std::vector<Lead> leads;
  leads.reserve(G.size());
  for (const CPoly& g : G) {
    if (g.is_zero()) throw ZeroElement("division by the zero polynomial");
    if (!(*g.context() == *f.context())) throw ContextMismatch("divisor in a different ring");
    leads.push_back(rational_lead(g, ord));
  }

  CDivision out{CPoly(f.context()), std::vector<CPoly>(G.size(), CPoly(f.context()))};
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
    for (const auto& [ge, gc] : G[i].terms()) {
      ParamScalar delta = -(q * gc);
      auto [it, inserted] = work.try_emplace(ge + shift, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return out;
}

CPoly cpoly_normal_form(const CPoly& f, std::span<const CPoly> G, const MonomialOrder& ord) {
  return cpoly_divide(f, G, ord).remainder;
}

CPoly cpoly_spoly(const CPoly& f, const CPoly& g, const MonomialOrder& ord) {
  const CTerm lf = f.leading_term(ord), lg = g.leading_term(ord);
  const Exponents l = lcm(lf.exp, lg.exp);
  return f.mul_term(l - lf.exp, lg.coeff) - g.mul_term(l - lg.exp, lf.coeff);
}

std::vector<Exponents> leading_monomials(std::span<const CPoly> G, const MonomialOrder& ord) {
  std::vector<Exponents> out;
  for (const CPoly& g : G) out.push_back(g.leading_term(ord).exp);
  return out;
}

std::vector<CPoly> cpoly_buchberger(std::span<const CPoly> input, const MonomialOrder& ord) {
  std::vector<CPoly> basis;
  for (const CPoly& g : input)
    if (!g.is_zero()) basis.push_back(make_monic(g, ord));
  if (basis.empty()) return {};

  std::vector<Exponents> lm = leading_monomials(basis, ord);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto is_pending = [&pending](std::size_t i, std::size_t j) {
    return pending.count({std::min(i, j), std::max(i, j)}) > 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
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

    bool coprime = true;
    for (std::size_t v = 0; v < best.size() && coprime; ++v)
      if (lm[i][v] > 0 && lm[j][v] > 0) coprime = false;
    if (coprime) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k)
      if (k != i && k != j && divides(lm[k], best) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    if (chain) continue;

    CPoly r = cpoly_normal_form(cpoly_spoly(basis[i], basis[j], ord), basis, ord);
    if (r.is_zero()) continue;
    r = make_monic(std::move(r), ord);
    const std::size_t n = basis.size();
    lm.push_back(r.leading_term(ord).exp);
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimalise: drop elements whose leading monomial is divisible by another.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < basis.size() && keep[i]; ++k)
      if (k != i && keep[k] && divides(lm[k], lm[i]) && (lm[k] != lm[i] || k < i)) keep[i] = false;
  std::vector<CPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Interreduce tails.
  std::vector<CPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(make_monic(cpoly_normal_form(minimal[i], others, ord), ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&ord](const CPoly& a, const CPoly& b) {
    return ord.greater(a.leading_term(ord).exp, b.leading_term(ord).exp);
  });
  return reduced;
}

bool is_groebner_basis(std::span<const CPoly> G, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!cpoly_normal_form(cpoly_spoly(G[i], G[j], ord), G, ord).is_zero()) return false;
  return true;
}

bool ideal_contained(std::span<const CPoly> a, std::span<const CPoly> gb_b, const MonomialOrder& ord) {
  return std::all_of(a.begin(), a.end(),
                     [&](const CPoly& f) { return cpoly_normal_form(f, gb_b, ord).is_zero(); });
}

std::vector<CPoly> saturate_by_elimination(std::span<const CPoly> G, std::span<const std::size_t> vars) {
  if (G.empty()) return {};
  const PolyContextPtr ctx = G.front().context();
  const std::size_t n = ctx->size();

  std::vector<std::string> names{"_t"};
  for (const auto& s : ctx->names()) names.push_back(s);
  const PolyContextPtr ext = PolyContext::make(std::move(names));

  // Block order: t-degree first, then degrevlex on the original variables.
  std::vector<std::vector<int>> w;
  std::vector<int> trow(n + 1, 0);
  trow[0] = 1;
  w.push_back(trow);
  const MonomialOrder drl = MonomialOrder::degrevlex(n);
  for (const auto& row : drl.weights()) {
    std::vector<int> r{0};
    r.insert(r.end(), row.begin(), row.end());
    w.push_back(std::move(r));
  }
  const MonomialOrder elim(n + 1, std::move(w), {});

  std::vector<CPoly> current(G.begin(), G.end());
  for (std::size_t v : vars) {
    std::vector<CPoly> lifted;
    for (const CPoly& g : current) {
      CPoly l(ext);
      for (const auto& [e, c] : g.terms()) {
        Exponents le{0};
        le.insert(le.end(), e.begin(), e.end());
        l.add_term(le, c);
      }
      lifted.push_back(std::move(l));
    }
    Exponents tx(n + 1, 0);
    tx[0] = 1;
    tx[v + 1] = 1;
    CPoly aux = CPoly::monomial(ext, tx) - CPoly(ext, ParamScalar(1));
    lifted.push_back(std::move(aux));

    std::vector<CPoly> next;
    for (const CPoly& g : cpoly_buchberger(lifted, elim)) {
      const bool t_free = std::all_of(g.terms().begin(), g.terms().end(),
                                      [](const auto& t) { return t.first[0] == 0; });
      if (!t_free) continue;
      CPoly p(ctx);
      for (const auto& [e, c] : g.terms()) p.add_term(Exponents(e.begin() + 1, e.end()), c);
      next.push_back(std::move(p));
    }
    current = cpoly_buchberger(next, drl);
  }
  return cpoly_buchberger(current, drl);
}

std::vector<CPoly> saturate_homogeneous(std::span<const CPoly> G, std::span<const std::size_t> vars,
                                        const MonomialOrder& final_order) {
  for (const CPoly& g : G)
    if (!g.is_homogeneous()) throw NonHomogeneousInput("saturate_homogeneous needs homogeneous generators");
  std::vector<CPoly> current(G.begin(), G.end());
  if (current.empty()) return {};
  const std::size_t n = current.front().nvars();
  for (std::size_t v : vars) {
    const MonomialOrder ord = MonomialOrder::degrevlex_last(n, v);
    std::vector<CPoly> divided;
    for (const CPoly& g : cpoly_buchberger(current, ord)) {
      int k = std::numeric_limits<int>::max();
      for (const auto& [e, c] : g.terms()) k = std::min(k, e[v]);
      if (k == 0) {
        divided.push_back(g);
        continue;
      }
      CPoly d(g.context());
      for (const auto& [e, c] : g.terms()) {
        Exponents de = e;
        de[v] -= k;
        d.add_term(de, c);
      }
      divided.push_back(std::move(d));
    }
    current = std::move(divided);
  }
  return cpoly_buchberger(current, final_order);
}

}  // namespace weylgb
