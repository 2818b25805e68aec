#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weylgb/ahyp/int_matrix.hpp"
#include "weylgb/arith/cpoly.hpp"
#include "weylgb/check.hpp"
#include "weylgb/lauricella/param_set.hpp"
#include "weylgb/weyl/weyl_element.hpp"

namespace weylgb {

/// Columns e_1 + e_{m+2}, ..., e_{m+1} + e_{m+2}, -e_1 + e_{m+2}, ..., -e_{m+1} + e_{m+2}.
IntMatrix build_A(std::size_t m);

/// d1..d{m+1}, d-1..d-{m+1}: the variables of the toric ring of build_A(m).
PolyContextPtr toric_context(std::size_t m);

/// Reduced Groebner basis (degrevlex, last variable smallest) of the toric
/// ideal {d^u - d^v : Au = Av}: lattice-basis binomials saturated by the
/// product of all variables. Uses d1..dn as variable names unless `ctx` is
/// given.
std::vector<CPoly> toric_ideal(const IntMatrix& A, PolyContextPtr ctx = nullptr);

/// d_j d_{-j} - d_{m+1} d_{-(m+1)} for j = 1..m.
std::vector<CPoly> toric_generators_claimed(std::size_t m);

/// Degree of the leading-term ideal of toric_ideal(build_A(m)).
long rank_via_degree(std::size_t m);

/// beta = (1 - c_1, ..., 1 - c_m, b - a, sum c_j - a - b - m).
using BetaVector = std::vector<ParamScalar>;
BetaVector beta_vector(const ParamSet& P);

/// Weyl algebra in u1..u{m+1}, u-1..u-{m+1} with derivations d1.., d-1...
WeylContextPtr ahyp_context(std::size_t m);

/// The m+2 operators sum_k A_ik u_k d_k - beta_i.
std::vector<WeylElement> euler_operators(std::size_t m, const BetaVector& beta);

/// P_J(s) = (s_{m+2} + sum_{j in J} s_j - sum_{j not in J} s_j) / 2 with
/// J given as a bit mask over 1..m+1 (bit j-1 set when j is in J).
class SupportFunction {
public:
  SupportFunction(std::size_t m, std::uint32_t mask);
  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(std::size_t j) const { return (mask_ >> (j - 1)) & 1U; }
  ParamScalar operator()(const std::vector<ParamScalar>& s) const;
  Rational operator()(const std::vector<Rational>& s) const;
  /// e.g. "{1,3}".
  std::string str() const;

private:
  std::size_t m_;
  std::uint32_t mask_;
};

struct SubsetValue {
  std::uint32_t mask = 0;
  Rational value;
  bool integral = false;
};

struct IrreducibilityReport {
  /// P_J(beta) for every J, in increasing mask order.
  std::vector<SubsetValue> support_values;
  bool irreducible = false;
  /// The sign-vector expression
  /// (sum c_i - a - b - 2 sum eps_i (1 - c_i) + eps_{m+1}(b - a)) / 2 for every
  /// sign vector (bit set = eps = -1).
  std::vector<SubsetValue> display_values;
  bool display_irreducible = false;
  bool verdicts_agree() const { return irreducible == display_irreducible; }
};

/// Throws UnspecializedParameter unless every parameter is rational.
IrreducibilityReport irreducibility_check(const ParamSet& P);

/// T with u_i d_{u_i} = sum_k T_ki z_k d_{z_k} for z_k = u^(row k of B),
/// obtained by applying u_i d_{u_i} to each Laurent monomial z_k.
/// Throws SingularChange when det B = 0.
IntMatrix euler_pushforward(const IntMatrix& B);

/// Exponent matrix of z_j = u_j u_{-j} / (u_{m+1} u_{-(m+1)}), z_{m+j} = 1/u_{-j},
/// z_{2m+1} = 1/u_{m+1}, z_{2m+2} = 1/u_{-(m+1)}; columns ordered
/// u_1..u_{m+1}, u_{-1}..u_{-(m+1)}.
IntMatrix fc_change_matrix(std::size_t m);

/// The four Euler-operator identities of the coordinate change, read off
/// euler_pushforward(fc_change_matrix(m)).
CheckList check_pushforward_identities(std::size_t m);

}  // namespace weylgb
