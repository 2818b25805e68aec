#pragma once

#include <cstddef>

#include "weylgb/check.hpp"
#include "weylgb/lauricella/param_set.hpp"
#include "weylgb/weyl/weyl_groebner.hpp"

namespace weylgb {

/// Right-hand sides for the commutator l'_i l'_j - l'_j l'_i.
enum class CommutationForm {
  Displayed,  // -(2 theta - a - b + 1)(l'_i - l'_j)
  Corrected,  // (2 theta - a - b - 1)(l'_i - l'_j)
  DropOne,    // -(2 theta - a - b)(l'_i - l'_j), negative control
};

/// Compares the commutator with the chosen right-hand side. Throws
/// IndexOutOfRange.
bool verify_commutation(std::size_t m, std::size_t i, std::size_t j, const ParamSet& P,
                        CommutationForm form = CommutationForm::Displayed);

/// sp(l'_i, l'_j) = {y_j^3 d_j^2 - l'_j - (2 theta - a - b + k)} l'_i
///                - {y_i^3 d_i^2 - l'_i - (2 theta - a - b + k)} l'_j
/// checked as a standard representation under the order w, with k = 1 for
/// Displayed, -1 for Corrected and 0 for DropOne.
StandardRepCertificate verify_torus_spair(std::size_t m, std::size_t i, std::size_t j, const ParamSet& P,
                                          CommutationForm form = CommutationForm::Displayed);

struct SpairSuiteOptions {
  /// Negative control: c_k h^3 theta_k T_ij becomes c_k h^2 theta_k T_ij in
  /// the sp(T_k, T_ij) case.
  bool perturb_tk = false;
};

/// For each S-pair of G = {T_i, T_ij} and every index combination, checks
/// that the displayed identity holds and that a standard representation of
/// the S-pair under the order km is certified. Cases needing three or four
/// distinct indices are skipped when m is too small.
CheckList verify_spair_suite(std::size_t m, const ParamSet& P, const SpairSuiteOptions& options = {});
inline CheckList verify_spair_suite(std::size_t m) { return verify_spair_suite(m, ParamSet::symbolic(m)); }

/// Dehomogenized relations of the S-pair representations among l_i and
/// l_ij = x_j l_i - x_i l_j, each checked to be the zero operator, plus
///   x_j l_i - l_ij - x_i l_j = 0 and
///   (theta_j(theta_j - 1) + c_j theta_j) l_i - (theta_i(theta_i - 1) + c_i theta_i) l_j
///     - (theta + a - 1)(theta + b - 1) l_ij = 0.
/// With flip_last the sign of the last term of both named relations is flipped.
CheckList syzygy_suite(std::size_t m, const ParamSet& P, bool flip_last = false);

}  // namespace weylgb
