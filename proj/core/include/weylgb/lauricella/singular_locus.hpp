#pragma once

#include <cstddef>
#include <vector>

#include "weylgb/arith/cpoly.hpp"
#include "weylgb/lauricella/param_set.hpp"
#include "weylgb/lauricella/sqrt_poly.hpp"

namespace weylgb {

/// The two parts of the singular locus: the expanded product of
/// 1 + sum eps_j sqrt(x_j) over all sign vectors, and the coordinate
/// hyperplanes x_1 * ... * x_m.
struct SingularLocusPoly {
  CPoly product;
  CPoly coordinate;
};

/// Throws std::logic_error if the expansion keeps a square root.
SingularLocusPoly singular_locus_poly(std::size_t m);

/// Matrix of the linear system x_i xi_i + eps_i sqrt(x_i) sum_j x_j xi_j = 0 in xi.
std::vector<std::vector<SqrtPoly>> coeff_matrix(std::size_t m, const SignVector& eps);

/// Determinant by cofactor expansion along the first row.
SqrtPoly sqrt_det(const std::vector<std::vector<SqrtPoly>>& M);

SqrtPoly coeff_matrix_det(std::size_t m, const SignVector& eps);

/// x_1 * ... * x_m * (1 + sum eps_j t_j).
SqrtPoly det_closed_form(std::size_t m, const SignVector& eps);

struct PointTest {
  /// coordinate_zero[i] is true when x_{i+1} = 0.
  std::vector<bool> coordinate_zero;
  Rational product_value;
  bool member = false;
};

/// Membership of a rational point in the singular locus.
/// Throws IndexOutOfRange if the point does not have m coordinates.
PointTest singular_point_test(std::size_t m, const std::vector<Rational>& point);

}  // namespace weylgb
