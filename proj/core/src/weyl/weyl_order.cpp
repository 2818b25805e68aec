#include "weylgb/weyl/weyl_order.hpp"

#include "weylgb/errors.hpp"

namespace weylgb {

WeylOrder weyl_order_w(std::size_t n) {
  std::vector<int> dweight(2 * n + 1, 0), xweight(2 * n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    dweight[n + i] = 1;
    xweight[i] = 1;
  }
  std::vector<std::size_t> priority;
  for (std::size_t s = 0; s < 2 * n; ++s) priority.push_back(s);
  return WeylOrder(2 * n + 1, {dweight, xweight}, std::move(priority));
}

WeylOrder weyl_order_km(std::size_t n) {
  std::vector<int> km(2 * n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    km[i] = -1;
    km[n + i] = 1;
  }
  std::vector<std::size_t> priority;
  for (std::size_t i = 0; i < n; ++i) priority.push_back(n + i);
  for (std::size_t i = 0; i < n; ++i) priority.push_back(i);
  return WeylOrder(2 * n + 1, {km}, std::move(priority));
}

WeylOrder weyl_order_lex(std::size_t n) {
  std::vector<std::size_t> priority;
  for (std::size_t i = 0; i < n; ++i) priority.push_back(n + i);
  for (std::size_t i = 0; i < n; ++i) priority.push_back(i);
  return WeylOrder(2 * n + 1, {}, std::move(priority));
}

WeylOrder weyl_weight_order(std::span<const int> u, std::span<const int> v, std::vector<std::size_t> priority) {
  if (u.size() != v.size()) throw ContextMismatch("weight vectors u and v differ in length");
  const std::size_t n = u.size();
  std::vector<int> w(2 * n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = u[i];
    w[n + i] = v[i];
  }
  for (std::size_t s : priority)
    if (s >= 2 * n) throw InvalidOrder("tie-break may only name x and d slots");
  return WeylOrder(2 * n + 1, {w}, std::move(priority));
}

std::vector<int> first_weight(const WeylOrder& ord, std::size_t n) {
  if (ord.weights().empty()) return {};
  const auto& w = ord.weights().front();
  return std::vector<int>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(2 * n));
}

WeylTerm leading_term(const WeylElement& p, const WeylOrder& ord) {
  if (p.is_zero()) throw ZeroElement("leading term of the zero operator");
  if (ord.size() != p.context()->slots()) throw ContextMismatch("order does not match the Weyl algebra");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

}  // namespace weylgb
