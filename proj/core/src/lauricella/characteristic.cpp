#include "weylgb/lauricella/characteristic.hpp"

#include <algorithm>
#include <numeric>

#include "weylgb/arith/cgroebner.hpp"
#include "weylgb/arith/monomial_ideal.hpp"
#include "weylgb/lauricella/operators.hpp"
#include "weylgb/weyl/initial_form.hpp"
#include "weylgb/weyl/weyl_groebner.hpp"

namespace weylgb {
namespace {

int lt_dimension(const std::vector<CPoly>& gens) {
  const std::size_t n = gens.front().nvars();
  const MonomialOrder ord = MonomialOrder::degrevlex(n);
  const std::vector<CPoly> gb = cpoly_buchberger(gens, ord);
  const std::vector<Exponents> lts = leading_monomials(gb, ord);
  return monomial_ideal_dimension(lts, n);
}

}  // namespace

CharIdealTorus char_ideal_torus(std::size_t m, const ParamSet& P) {
  std::vector<WeylElement> ops;
  for (std::size_t i = 1; i <= m; ++i) ops.push_back(ell_prime(i, P));
  const std::vector<WeylElement> gb = weyl_buchberger(ops, weyl_order_w(m));
  CharIdealTorus out;
  out.input_is_groebner = gb.size() == ops.size();
  for (const WeylElement& op : ops) out.generators.push_back(principal_symbol(op));
  return out;
}

CPoly to_x_chart(const CPoly& p, std::size_t m) {
  const auto ctx = PolyContext::phase_space(m, "x");
  std::vector<int> shift(m, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m; ++i) shift[i] = std::max(shift[i], e[i] - 2 * e[m + i]);
  CPoly out(ctx);
  for (const auto& [e, c] : p.terms()) {
    Exponents r(2 * m, 0);
    int xi_degree = 0;
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = 2 * e[m + i] - e[i] + shift[i];
      r[m + i] = e[m + i];
      xi_degree += e[m + i];
    }
    out.add_term(r, xi_degree % 2 == 0 ? c : -c);
  }
  return out;
}

bool CharDimension::consistent() const {
  auto same = [](const std::vector<int>& v) { return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end(); };
  return !dimension_l.empty() && same(dimension_l) && same(dimension_torus) &&
         (dimension_torus.empty() || dimension_torus.front() == dimension_l.front());
}

CharDimension char_dimension(std::size_t m, std::uint64_t seed) {
  CharDimension out;
  for (std::uint64_t s : {seed, seed + 1}) {
    const ParamSet P = ParamSet::random(m, s);
    std::vector<CPoly> symbols;
    for (std::size_t i = 1; i <= m; ++i) symbols.push_back(principal_symbol(ell(i, P)));
    out.dimension_l.push_back(lt_dimension(symbols));

    std::vector<CPoly> moved;
    for (const CPoly& g : char_ideal_torus(m, P).generators) moved.push_back(to_x_chart(g, m));
    out.dimension_torus.push_back(lt_dimension(moved));
    out.seeds.push_back(s);
  }
  return out;
}

bool torus_agreement(std::size_t m) {
  std::vector<CPoly> L, moved;
  for (std::size_t i = 1; i <= m; ++i) L.push_back(make_symbol(SymbolKind::L, i, m));
  for (const CPoly& g : char_ideal_torus(m).generators) moved.push_back(to_x_chart(g, m));
  std::vector<std::size_t> vars(m);
  std::iota(vars.begin(), vars.end(), 0);
  return saturate_by_elimination(L, vars) == saturate_by_elimination(moved, vars);
}

}  // namespace weylgb
