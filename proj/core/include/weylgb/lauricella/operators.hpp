#pragma once

#include <cstddef>
#include <string>

#include "weylgb/arith/cpoly.hpp"
#include "weylgb/lauricella/param_set.hpp"
#include "weylgb/weyl/weyl_element.hpp"

namespace weylgb {

/// Operator families of the Lauricella F_C system. Indices are 1-based.
enum class OperatorKind {
  Ell,       // theta_i(theta_i + c_i - 1) - x_i(theta + a)(theta + b)
  EllPrime,  // y_i theta_i(theta_i - c_i + 1) - (theta - a)(theta - b), in y-coordinates
  EllPair,   // x_j ell_i - x_i ell_j
  S,         // theta_i(theta_i + (c_i - 1)h^2), homogenized
  Sab,       // (theta + a h^2)(theta + b h^2), homogenized
  T,         // h S_i - x_i S_ab
  TPair,     // x_j S_i - x_i S_j
};

/// Principal symbols.
enum class SymbolKind {
  L,       // x_i^2 xi_i^2 - x_i (sum x_j xi_j)^2
  LPrime,  // y_i^3 xi_i^2 - (sum y_j xi_j)^2
};

/// Parses "ell", "ell_prime", "ell_ij", "S_i", "S_ab", "T_i", "T_ij".
OperatorKind parse_operator_kind(const std::string& name);

/// Shared contexts: plain D in x, plain D in y, D^(h) in x.
WeylContextPtr lauricella_context(std::size_t m);
WeylContextPtr lauricella_y_context(std::size_t m);
WeylContextPtr lauricella_h_context(std::size_t m);

/// Builds the operator. `j` is used by the pair kinds, which accept any
/// i != j (so that T_ji = -T_ij). Throws IndexOutOfRange.
WeylElement make_operator(OperatorKind kind, std::size_t i, std::size_t j, const ParamSet& P);
inline WeylElement make_operator(OperatorKind kind, std::size_t i, const ParamSet& P) {
  return make_operator(kind, i, 0, P);
}

WeylElement ell(std::size_t i, const ParamSet& P);
WeylElement ell_prime(std::size_t i, const ParamSet& P);
WeylElement ell_pair(std::size_t i, std::size_t j, const ParamSet& P);
WeylElement op_S(std::size_t i, const ParamSet& P);
/// (theta + a h^2)(theta + b h^2) for arbitrary scalars a, b (S_{a-1,b-1}
/// is op_S_ab(m, P.a - 1, P.b - 1)).
WeylElement op_S_ab(std::size_t m, const ParamScalar& a, const ParamScalar& b);
WeylElement op_T(std::size_t i, const ParamSet& P);
WeylElement op_T(std::size_t i, std::size_t j, const ParamSet& P);

CPoly make_symbol(SymbolKind kind, std::size_t i, std::size_t m);

}  // namespace weylgb
