#include "weylgb/ahyp/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weylgb {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<mpz_class> IntMatrix::col(std::size_t c) const {
  std::vector<mpz_class> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return p;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix M(*this);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(M.at(k, c), M.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M.at(i, j) = v;
      }
      M.at(i, k) = 0;
    }
    prev = M.at(k, k);
  }
  return sign * M.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << "\n";
  }
  return os.str();
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const std::size_t r = A.rows(), n = A.cols();
  // Row i of W is (column i of A | e_i); unimodular row operations keep the
  // right block a change of basis of Z^n.
  IntMatrix W(n, r + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < r; ++k) W.at(i, k) = A.at(k, i);
    W.at(i, r + i) = 1;
  }
  auto sub_row = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t c = 0; c < r + n; ++c) W.at(dst, c) -= q * W.at(src, c);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < r + n; ++c) std::swap(W.at(a, c), W.at(b, c));
  };

  std::size_t pivot = 0;
  for (std::size_t col = 0; col < r && pivot < n; ++col) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = pivot; i < n; ++i)
        if (W.at(i, col) != 0 && (best == n || abs(W.at(i, col)) < abs(W.at(best, col)))) best = i;
      if (best == n) break;
      swap_rows(pivot, best);
      bool done = true;
      for (std::size_t i = pivot + 1; i < n; ++i) {
        if (W.at(i, col) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), W.at(i, col).get_mpz_t(), W.at(pivot, col).get_mpz_t());
        sub_row(i, pivot, q);
        if (W.at(i, col) != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }

  IntMatrix K(n - pivot, n);
  for (std::size_t i = pivot; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) K.at(i - pivot, c) = W.at(i, r + c);
  return K;
}

}  // namespace weylgb
