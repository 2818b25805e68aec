#include "weylgb/lauricella/singular_locus.hpp"

#include "weylgb/errors.hpp"

namespace weylgb {

SingularLocusPoly singular_locus_poly(std::size_t m) {
  SqrtPoly prod(m, Rational(1));
  for (const SignVector& eps : SignVector::all(m)) {
    SqrtPoly factor(m, Rational(1));
    for (std::size_t j = 0; j < m; ++j) {
      SqrtPoly t = SqrtPoly::t(m, j);
      factor += eps[j] > 0 ? t : -t;
    }
    prod = prod * factor;
  }
  CPoly coordinate(coordinate_context(m), ParamScalar(1));
  for (std::size_t i = 0; i < m; ++i) coordinate = coordinate * CPoly::variable(coordinate_context(m), i);
  return {prod.to_x(), coordinate};
}

std::vector<std::vector<SqrtPoly>> coeff_matrix(std::size_t m, const SignVector& eps) {
  if (eps.size() != m) throw IndexOutOfRange("sign vector length differs from m");
  std::vector<std::vector<SqrtPoly>> M(m, std::vector<SqrtPoly>(m, SqrtPoly(m)));
  for (std::size_t i = 0; i < m; ++i) {
    const SqrtPoly root = eps[i] > 0 ? SqrtPoly::t(m, i) : -SqrtPoly::t(m, i);
    for (std::size_t k = 0; k < m; ++k) {
      M[i][k] = SqrtPoly::x(m, k) * root;
      if (i == k) M[i][k] += SqrtPoly::x(m, i);
    }
  }
  return M;
}

SqrtPoly sqrt_det(const std::vector<std::vector<SqrtPoly>>& M) {
  const std::size_t n = M.size();
  if (n == 0) throw IndexOutOfRange("determinant of an empty matrix");
  const std::size_t m = M[0][0].m();
  if (n == 1) return M[0][0];
  SqrtPoly det(m);
  for (std::size_t col = 0; col < n; ++col) {
    if (M[0][col].is_zero()) continue;
    std::vector<std::vector<SqrtPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SqrtPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(M[r][c]);
      minor.push_back(std::move(row));
    }
    const SqrtPoly term = M[0][col] * sqrt_det(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

SqrtPoly coeff_matrix_det(std::size_t m, const SignVector& eps) { return sqrt_det(coeff_matrix(m, eps)); }

SqrtPoly det_closed_form(std::size_t m, const SignVector& eps) {
  if (eps.size() != m) throw IndexOutOfRange("sign vector length differs from m");
  SqrtPoly sum(m, Rational(1));
  SqrtPoly prod(m, Rational(1));
  for (std::size_t j = 0; j < m; ++j) {
    sum += eps[j] > 0 ? SqrtPoly::t(m, j) : -SqrtPoly::t(m, j);
    prod = prod * SqrtPoly::x(m, j);
  }
  return prod * sum;
}

PointTest singular_point_test(std::size_t m, const std::vector<Rational>& point) {
  if (point.size() != m)
    throw IndexOutOfRange("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(m));
  PointTest out;
  for (const Rational& v : point) {
    out.coordinate_zero.push_back(v.is_zero());
    if (v.is_zero()) out.member = true;
  }
  out.product_value = singular_locus_poly(m).product.evaluate(point);
  if (out.product_value.is_zero()) out.member = true;
  return out;
}

}  // namespace weylgb
