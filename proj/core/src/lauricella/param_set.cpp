#include "weylgb/lauricella/param_set.hpp"

#include <random>
#include <stdexcept>

#include "weylgb/errors.hpp"

namespace weylgb {

ParamSet ParamSet::symbolic(std::size_t m) {
  if (m == 0) throw IndexOutOfRange("ParamSet needs m >= 1");
  ParamSet p;
  p.m = m;
  p.a = ParamScalar::a();
  p.b = ParamScalar::b();
  for (std::size_t k = 1; k <= m; ++k) p.c.push_back(ParamScalar::c(k));
  return p;
}

ParamSet ParamSet::rational(const Rational& a, const Rational& b, const std::vector<Rational>& c) {
  if (c.empty()) throw IndexOutOfRange("ParamSet needs m >= 1");
  ParamSet p;
  p.m = c.size();
  p.a = a;
  p.b = b;
  for (const Rational& v : c) p.c.emplace_back(v);
  return p;
}

ParamSet ParamSet::random(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  const Rational a = draw(), b = draw();
  std::vector<Rational> c;
  for (std::size_t k = 0; k < m; ++k) c.push_back(draw());
  return rational(a, b, c);
}

bool ParamSet::is_specialized() const {
  if (!a.is_constant() || !b.is_constant()) return false;
  for (const auto& v : c)
    if (!v.is_constant()) return false;
  return true;
}

ParamValues ParamSet::values() const {
  ParamValues v;
  v.a = a.constant_value();
  v.b = b.constant_value();
  for (const auto& ck : c) v.c.push_back(ck.constant_value());
  return v;
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("SignVector entries must be +1 or -1");
}

std::vector<SignVector> SignVector::all(std::size_t m) {
  std::vector<SignVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace weylgb
