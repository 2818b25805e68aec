#pragma once

#include <cstddef>
#include <vector>

namespace weylgb {

/// Dense exponent tuple. Its meaning (which slot is which variable) is fixed
/// by the owning context.
using Exponents = std::vector<int>;

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline int total_degree(const Exponents& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

}  // namespace weylgb
