#include "weylgb/ahyp/ahyp.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "weylgb/arith/cgroebner.hpp"
#include "weylgb/arith/monomial_ideal.hpp"
#include "weylgb/errors.hpp"

namespace weylgb {
namespace {

std::vector<std::string> signed_names(const std::string& prefix, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= m + 1; ++j) names.push_back(prefix + std::to_string(j));
  for (std::size_t j = 1; j <= m + 1; ++j) names.push_back(prefix + "-" + std::to_string(j));
  return names;
}

int to_int(const mpz_class& v) {
  if (!v.fits_sint_p()) throw std::overflow_error("lattice entry does not fit an exponent");
  return static_cast<int>(v.get_si());
}

Rational rational_of(const ParamScalar& s) {
  const auto v = s.constant_value();
  if (!v) throw UnspecializedParameter("parameter value " + s.str() + " is symbolic");
  return *v;
}

}  // namespace

IntMatrix build_A(std::size_t m) {
  const std::size_t n = m + 1;
  IntMatrix A(m + 2, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    A.at(j, j) = 1;
    A.at(j, n + j) = -1;
  }
  for (std::size_t c = 0; c < 2 * n; ++c) A.at(m + 1, c) = 1;
  return A;
}

PolyContextPtr toric_context(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, PolyContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = PolyContext::make(signed_names("d", m));
  return slot;
}

std::vector<CPoly> toric_ideal(const IntMatrix& A, PolyContextPtr ctx) {
  const std::size_t n = A.cols();
  if (!ctx) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
    ctx = PolyContext::make(std::move(names));
  }
  if (ctx->size() != n) throw ContextMismatch("toric ring has the wrong number of variables");

  const IntMatrix K = integer_kernel(A);
  std::vector<CPoly> binomials;
  bool homogeneous = true;
  for (std::size_t r = 0; r < K.rows(); ++r) {
    Exponents plus(n, 0), minus(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      const int v = to_int(K.at(r, c));
      (v > 0 ? plus : minus)[c] = v > 0 ? v : -v;
    }
    CPoly b = CPoly::monomial(ctx, plus) - CPoly::monomial(ctx, minus);
    homogeneous = homogeneous && b.is_homogeneous();
    binomials.push_back(std::move(b));
  }
  const MonomialOrder ord = MonomialOrder::degrevlex(n);
  if (binomials.empty()) return {};
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  if (homogeneous) return saturate_homogeneous(binomials, vars, ord);
  return cpoly_buchberger(saturate_by_elimination(binomials, vars), ord);
}

std::vector<CPoly> toric_generators_claimed(std::size_t m) {
  const auto ctx = toric_context(m);
  const std::size_t n = m + 1;
  Exponents last(2 * n, 0);
  last[m] = last[n + m] = 1;
  std::vector<CPoly> out;
  for (std::size_t j = 0; j < m; ++j) {
    Exponents e(2 * n, 0);
    e[j] = e[n + j] = 1;
    out.push_back(CPoly::monomial(ctx, e) - CPoly::monomial(ctx, last));
  }
  return out;
}

long rank_via_degree(std::size_t m) {
  const std::vector<CPoly> gb = toric_ideal(build_A(m), toric_context(m));
  const std::size_t n = 2 * (m + 1);
  const std::vector<Exponents> lts = leading_monomials(gb, MonomialOrder::degrevlex(n));
  return squarefree_ideal_degree(lts, n).degree;
}

BetaVector beta_vector(const ParamSet& P) {
  BetaVector beta;
  ParamScalar csum;
  for (std::size_t i = 0; i < P.m; ++i) {
    beta.push_back(ParamScalar(1) - P.c[i]);
    csum += P.c[i];
  }
  beta.push_back(P.b - P.a);
  beta.push_back(csum - P.a - P.b - ParamScalar(static_cast<long>(P.m)));
  return beta;
}

WeylContextPtr ahyp_context(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, WeylContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const WeylContext>(signed_names("u", m), signed_names("d", m), false);
  return slot;
}

std::vector<WeylElement> euler_operators(std::size_t m, const BetaVector& beta) {
  const IntMatrix A = build_A(m);
  if (beta.size() != A.rows()) throw IndexOutOfRange("beta must have m+2 entries");
  const auto ctx = ahyp_context(m);
  std::vector<WeylElement> ops;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    WeylElement E(ctx, -beta[i]);
    for (std::size_t k = 0; k < A.cols(); ++k)
      if (A.at(i, k) != 0) E += WeylElement::theta(ctx, k) * ParamScalar(to_int(A.at(i, k)));
    ops.push_back(std::move(E));
  }
  return ops;
}

SupportFunction::SupportFunction(std::size_t m, std::uint32_t mask) : m_(m), mask_(mask) {
  if (m + 1 >= 32 || mask >= (1U << (m + 1))) throw IndexOutOfRange("subset mask outside 1..m+1");
}

ParamScalar SupportFunction::operator()(const std::vector<ParamScalar>& s) const {
  if (s.size() != m_ + 2) throw IndexOutOfRange("support functions take m+2 coordinates");
  ParamScalar v = s[m_ + 1];
  for (std::size_t j = 1; j <= m_ + 1; ++j) v += contains(j) ? s[j - 1] : -s[j - 1];
  v /= Rational(2);
  return v;
}

Rational SupportFunction::operator()(const std::vector<Rational>& s) const {
  std::vector<ParamScalar> p(s.begin(), s.end());
  return rational_of((*this)(p));
}

std::string SupportFunction::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t j = 1; j <= m_ + 1; ++j)
    if (contains(j)) {
      os << (first ? "" : ",") << j;
      first = false;
    }
  os << "}";
  return os.str();
}

IrreducibilityReport irreducibility_check(const ParamSet& P) {
  const std::size_t m = P.m;
  std::vector<Rational> beta;
  for (const ParamScalar& b : beta_vector(P)) beta.push_back(rational_of(b));
  const Rational a = rational_of(P.a), b = rational_of(P.b);
  std::vector<Rational> c;
  Rational csum;
  for (const ParamScalar& ci : P.c) {
    c.push_back(rational_of(ci));
    csum += c.back();
  }

  IrreducibilityReport out;
  out.irreducible = true;
  out.display_irreducible = true;
  for (std::uint32_t mask = 0; mask < (1U << (m + 1)); ++mask) {
    const Rational v = SupportFunction(m, mask)(beta);
    out.support_values.push_back({mask, v, v.is_integer()});
    if (v.is_integer()) out.irreducible = false;

    Rational d = csum - a - b;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational term = Rational(2) * (Rational(1) - c[i]);
      d += ((mask >> i) & 1U) ? term : -term;
    }
    d += ((mask >> m) & 1U) ? a - b : b - a;
    d /= Rational(2);
    out.display_values.push_back({mask, d, d.is_integer()});
    if (d.is_integer()) out.display_irreducible = false;
  }
  return out;
}

IntMatrix euler_pushforward(const IntMatrix& B) {
  if (B.rows() != B.cols()) throw SingularChange("the change of variables needs as many z as u");
  if (B.determinant() == 0) throw SingularChange("the monomial change of variables is not invertible");
  const std::size_t n = B.rows();
  IntMatrix T(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    // u_i d_{u_i} u^e = e_i u^e, so z_k d_{z_k} picks up e_i.
    const std::vector<mpz_class> z = B.row(k);
    for (std::size_t i = 0; i < n; ++i) T.at(k, i) = z[i];
  }
  return T;
}

IntMatrix fc_change_matrix(std::size_t m) {
  const std::size_t n = m + 1;
  IntMatrix B(2 * n, 2 * n);
  for (std::size_t j = 0; j < m; ++j) {
    B.at(j, j) = 1;
    B.at(j, n + j) = 1;
    B.at(j, m) = -1;
    B.at(j, n + m) = -1;
    B.at(m + j, n + j) = -1;
  }
  B.at(2 * m, m) = -1;
  B.at(2 * m + 1, n + m) = -1;
  return B;
}

CheckList check_pushforward_identities(std::size_t m) {
  const std::size_t n = 2 * (m + 1);
  const IntMatrix T = euler_pushforward(fc_change_matrix(m));
  auto column_is = [&](std::size_t col, const std::vector<long>& expected) {
    for (std::size_t k = 0; k < n; ++k)
      if (T.at(k, col) != expected[k]) return false;
    return true;
  };
  auto column_str = [&](std::size_t col) {
    std::ostringstream os;
    for (std::size_t k = 0; k < n; ++k) os << (k ? " " : "") << T.at(k, col).get_str();
    return os.str();
  };
  CheckList out;
  for (std::size_t j = 1; j <= m; ++j) {
    std::vector<long> e(n, 0);
    e[j - 1] = 1;
    out.add("u" + std::to_string(j) + " d" + std::to_string(j) + " = z" + std::to_string(j) + " dz" + std::to_string(j),
            column_is(j - 1, e), column_str(j - 1));
    e[m + j - 1] = -1;
    out.add("u-" + std::to_string(j) + " d-" + std::to_string(j) + " = z" + std::to_string(j) + " dz" +
                std::to_string(j) + " - z" + std::to_string(m + j) + " dz" + std::to_string(m + j),
            column_is(m + j, e), column_str(m + j));
  }
  std::vector<long> top(n, 0), bottom(n, 0);
  for (std::size_t k = 0; k < m; ++k) top[k] = bottom[k] = -1;
  top[2 * m] = -1;
  bottom[2 * m + 1] = -1;
  out.add("u" + std::to_string(m + 1) + " d" + std::to_string(m + 1) + " = -sum zk dzk - z" + std::to_string(2 * m + 1) +
              " dz" + std::to_string(2 * m + 1),
          column_is(m, top), column_str(m));
  out.add("u-" + std::to_string(m + 1) + " d-" + std::to_string(m + 1) + " = -sum zk dzk - z" +
              std::to_string(2 * m + 2) + " dz" + std::to_string(2 * m + 2),
          column_is(2 * m + 1, bottom), column_str(2 * m + 1));
  return out;
}

}  // namespace weylgb
