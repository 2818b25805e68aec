#include "weylgb/arith/monomial_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylgb {

MonomialOrder::MonomialOrder(std::size_t n_slots, std::vector<std::vector<int>> weights,
                             std::vector<std::size_t> priority)
    : n_(n_slots), weights_(std::move(weights)), priority_(std::move(priority)) {
  for (auto& w : weights_) {
    if (w.size() > n_) throw std::invalid_argument("MonomialOrder: weight vector longer than tuple");
    w.resize(n_, 0);
  }
  std::vector<bool> seen(n_, false);
  for (std::size_t s : priority_) {
    if (s >= n_ || seen[s]) throw std::invalid_argument("MonomialOrder: bad priority list");
    seen[s] = true;
  }
  for (std::size_t s = 0; s < n_; ++s)
    if (!seen[s]) priority_.push_back(s);
}

MonomialOrder MonomialOrder::lex(std::size_t n) { return MonomialOrder(n, {}, {}); }

MonomialOrder MonomialOrder::lex(std::size_t n, std::vector<std::size_t> priority) {
  return MonomialOrder(n, {}, std::move(priority));
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) {
  return degrevlex_last(n, n == 0 ? 0 : n - 1);
}

MonomialOrder MonomialOrder::degrevlex_last(std::size_t n, std::size_t last) {
  // Revlex as a matrix order: total degree, then -e_last, then -e for the
  // remaining variables from the back.
  std::vector<std::vector<int>> w;
  w.emplace_back(n, 1);
  std::vector<std::size_t> rev;
  if (n > 0) rev.push_back(last);
  for (std::size_t i = n; i-- > 0;)
    if (i != last) rev.push_back(i);
  for (std::size_t k = 0; k + 1 < rev.size(); ++k) {
    std::vector<int> row(n, 0);
    row[rev[k]] = -1;
    w.push_back(std::move(row));
  }
  return MonomialOrder(n, std::move(w), {});
}

long MonomialOrder::weight(std::size_t row, const Exponents& e) const {
  long s = 0;
  const auto& w = weights_[row];
  for (std::size_t i = 0; i < n_; ++i) s += static_cast<long>(w[i]) * e[i];
  return s;
}

std::strong_ordering MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  for (std::size_t r = 0; r < weights_.size(); ++r) {
    const long wa = weight(r, a), wb = weight(r, b);
    if (wa != wb) return wa <=> wb;
  }
  for (std::size_t s : priority_)
    if (a[s] != b[s]) return a[s] <=> b[s];
  return std::strong_ordering::equal;
}

}  // namespace weylgb
