#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace weylgb {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  std::vector<mpz_class> row(std::size_t r) const;
  std::vector<mpz_class> col(std::size_t c) const;

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Exact determinant (fraction-free elimination). Throws
  /// std::invalid_argument for a non-square matrix.
  mpz_class determinant() const;

  /// One row per line, entries separated by single spaces.
  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Z-basis of {v : A v = 0}, one basis vector per row of the result, from
/// an integer row echelon form of [A^T | I].
IntMatrix integer_kernel(const IntMatrix& A);

}  // namespace weylgb
