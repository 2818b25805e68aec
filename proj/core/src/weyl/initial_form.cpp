#include "weylgb/weyl/initial_form.hpp"

#include <algorithm>
#include <limits>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

long term_weight(const Exponents& e, std::span<const int> u, std::span<const int> v) {
  const std::size_t n = u.size();
  long w = 0;
  for (std::size_t i = 0; i < n; ++i) w += static_cast<long>(u[i]) * e[i] + static_cast<long>(v[i]) * e[n + i];
  return w;
}

}  // namespace

PolyContextPtr symbol_context(const WeylContext& ctx) {
  std::vector<std::string> names = ctx.coords();
  for (const auto& d : ctx.derivs()) names.push_back("xi" + d.substr(1));
  if (ctx.homogenized()) names.push_back("h");
  return PolyContext::make(std::move(names));
}

long weyl_ord(const WeylElement& p, std::span<const int> u, std::span<const int> v) {
  if (p.is_zero()) throw ZeroElement("order of the zero operator");
  if (u.size() != p.context()->nvars() || v.size() != p.context()->nvars())
    throw ContextMismatch("weight vectors do not match the number of variables");
  long best = std::numeric_limits<long>::min();
  for (const auto& [e, c] : p.terms()) best = std::max(best, term_weight(e, u, v));
  return best;
}

InitialForm initial_form(const WeylElement& p, std::span<const int> u, std::span<const int> v) {
  const long ord = weyl_ord(p, u, v);
  bool all_positive = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] + v[i] < 0) throw NegativeWeightSum("initial form needs u_i + v_i >= 0");
    if (u[i] + v[i] == 0) all_positive = false;
  }

  const auto& ctx = p.context();
  if (!all_positive) {
    WeylElement top(ctx);
    for (const auto& [e, c] : p.terms())
      if (term_weight(e, u, v) == ord) top.add_term(e, c);
    return {std::move(top), ord};
  }

  CPoly sym(symbol_context(*ctx));
  const std::size_t len = sym.nvars();
  for (const auto& [e, c] : p.terms()) {
    if (term_weight(e, u, v) != ord) continue;
    sym.add_term(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(len)), c);
  }
  return {std::move(sym), ord};
}

CPoly principal_symbol(const WeylElement& p) {
  const std::size_t n = p.context()->nvars();
  const std::vector<int> zero(n, 0), one(n, 1);
  return initial_form(p, zero, one).symbol();
}

}  // namespace weylgb
