#include "weylgb/lauricella/operators.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

WeylContextPtr cached_context(std::size_t m, bool homogenized, const std::string& coord) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, bool, std::string>, WeylContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, homogenized, coord}];
  if (!slot) slot = WeylContext::make(m, homogenized, coord);
  return slot;
}

void check_index(std::size_t i, std::size_t m) {
  if (i < 1 || i > m) throw IndexOutOfRange("operator index " + std::to_string(i) + " outside 1.." + std::to_string(m));
}

void check_pair(std::size_t i, std::size_t j, std::size_t m) {
  check_index(i, m);
  check_index(j, m);
  if (i == j) throw IndexOutOfRange("pair operators need distinct indices");
}

WeylElement scalar(const WeylContextPtr& ctx, const ParamScalar& s) { return WeylElement(ctx, s); }

}  // namespace

OperatorKind parse_operator_kind(const std::string& name) {
  static const std::map<std::string, OperatorKind> kinds{
      {"ell", OperatorKind::Ell},  {"ell_prime", OperatorKind::EllPrime}, {"ell_ij", OperatorKind::EllPair},
      {"S_i", OperatorKind::S},    {"S_ab", OperatorKind::Sab},           {"T_i", OperatorKind::T},
      {"T_ij", OperatorKind::TPair}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw std::invalid_argument("unknown operator kind '" + name + "'");
  return it->second;
}

WeylContextPtr lauricella_context(std::size_t m) { return cached_context(m, false, "x"); }
WeylContextPtr lauricella_y_context(std::size_t m) { return cached_context(m, false, "y"); }
WeylContextPtr lauricella_h_context(std::size_t m) { return cached_context(m, true, "x"); }

WeylElement ell(std::size_t i, const ParamSet& P) {
  check_index(i, P.m);
  const auto ctx = lauricella_context(P.m);
  const WeylElement th = WeylElement::theta(ctx, i - 1);
  const WeylElement sum = WeylElement::theta_sum(ctx);
  const WeylElement one(ctx, ParamScalar(1));
  return th * (th + scalar(ctx, P.c[i - 1] - ParamScalar(1))) -
         WeylElement::x(ctx, i - 1) * (sum + scalar(ctx, P.a)) * (sum + scalar(ctx, P.b));
}

WeylElement ell_prime(std::size_t i, const ParamSet& P) {
  check_index(i, P.m);
  const auto ctx = lauricella_y_context(P.m);
  const WeylElement th = WeylElement::theta(ctx, i - 1);
  const WeylElement sum = WeylElement::theta_sum(ctx);
  return WeylElement::x(ctx, i - 1) * th * (th - scalar(ctx, P.c[i - 1] - ParamScalar(1))) -
         (sum - scalar(ctx, P.a)) * (sum - scalar(ctx, P.b));
}

WeylElement ell_pair(std::size_t i, std::size_t j, const ParamSet& P) {
  check_pair(i, j, P.m);
  const auto ctx = lauricella_context(P.m);
  return WeylElement::x(ctx, j - 1) * ell(i, P) - WeylElement::x(ctx, i - 1) * ell(j, P);
}

WeylElement op_S(std::size_t i, const ParamSet& P) {
  check_index(i, P.m);
  const auto ctx = lauricella_h_context(P.m);
  const WeylElement th = WeylElement::theta(ctx, i - 1);
  const WeylElement h2 = WeylElement::h(ctx).pow(2);
  return th * (th + (P.c[i - 1] - ParamScalar(1)) * h2);
}

WeylElement op_S_ab(std::size_t m, const ParamScalar& a, const ParamScalar& b) {
  const auto ctx = lauricella_h_context(m);
  const WeylElement sum = WeylElement::theta_sum(ctx);
  const WeylElement h2 = WeylElement::h(ctx).pow(2);
  return (sum + a * h2) * (sum + b * h2);
}

WeylElement op_T(std::size_t i, const ParamSet& P) {
  check_index(i, P.m);
  const auto ctx = lauricella_h_context(P.m);
  return WeylElement::h(ctx) * op_S(i, P) - WeylElement::x(ctx, i - 1) * op_S_ab(P.m, P.a, P.b);
}

WeylElement op_T(std::size_t i, std::size_t j, const ParamSet& P) {
  check_pair(i, j, P.m);
  const auto ctx = lauricella_h_context(P.m);
  return WeylElement::x(ctx, j - 1) * op_S(i, P) - WeylElement::x(ctx, i - 1) * op_S(j, P);
}

WeylElement make_operator(OperatorKind kind, std::size_t i, std::size_t j, const ParamSet& P) {
  switch (kind) {
    case OperatorKind::Ell: return ell(i, P);
    case OperatorKind::EllPrime: return ell_prime(i, P);
    case OperatorKind::EllPair: return ell_pair(i, j, P);
    case OperatorKind::S: return op_S(i, P);
    case OperatorKind::Sab: return op_S_ab(P.m, P.a, P.b);
    case OperatorKind::T: return op_T(i, P);
    case OperatorKind::TPair: return op_T(i, j, P);
  }
  throw std::logic_error("unhandled operator kind");
}

CPoly make_symbol(SymbolKind kind, std::size_t i, std::size_t m) {
  check_index(i, m);
  const auto ctx = PolyContext::phase_space(m, kind == SymbolKind::L ? "x" : "y");
  CPoly pairing(ctx);  // sum_j coord_j xi_j
  for (std::size_t j = 0; j < m; ++j) pairing += CPoly::variable(ctx, j) * CPoly::variable(ctx, m + j);
  const CPoly coord = CPoly::variable(ctx, i - 1);
  const CPoly xi = CPoly::variable(ctx, m + i - 1);
  if (kind == SymbolKind::L) return coord.pow(2) * xi.pow(2) - coord * pairing.pow(2);
  return coord.pow(3) * xi.pow(2) - pairing.pow(2);
}

}  // namespace weylgb
