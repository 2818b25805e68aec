#include <doctest.h>

#include <map>

#include "samples.hpp"
#include "weylgb/ahyp/ahyp.hpp"
#include "weylgb/arith/cgroebner.hpp"
#include "weylgb/errors.hpp"

using namespace weylgb;

namespace {

std::vector<long> image(const IntMatrix& A, const Exponents& u) {
  std::vector<long> out(A.rows(), 0);
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) out[r] += A.at(r, c).get_si() * u[c];
  return out;
}

void monomials_up_to(std::size_t n, int degree, Exponents& cur, std::size_t slot, std::vector<Exponents>& out) {
  if (slot == n) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (std::size_t s = 0; s < slot; ++s) used += cur[s];
  for (int e = 0; used + e <= degree; ++e) {
    cur[slot] = e;
    monomials_up_to(n, degree, cur, slot + 1, out);
  }
  cur[slot] = 0;
}

// Direct evaluation of P_J(beta) for every J from the parameters, without
// the library's beta vector.
bool irreducible_oracle(const Rational& a, const Rational& b, const std::vector<Rational>& c) {
  const std::size_t m = c.size();
  std::vector<Rational> beta;
  Rational csum(0);
  for (const Rational& ci : c) beta.push_back(Rational(1) - ci), csum += ci;
  beta.push_back(b - a);
  const Rational last = csum - a - b - Rational(static_cast<long>(m));
  for (std::uint32_t mask = 0; mask < (1U << (m + 1)); ++mask) {
    Rational v = last;
    for (std::size_t j = 0; j <= m; ++j) v += ((mask >> j) & 1U) ? beta[j] : -beta[j];
    if ((v / Rational(2)).is_integer()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("matrix A") {
  CHECK(build_A(1) == IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}, {1, 1, 1, 1}});
  CHECK(build_A(2) == IntMatrix{{1, 0, 0, -1, 0, 0}, {0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, 0, -1}, {1, 1, 1, 1, 1, 1}});
}

TEST_CASE("integer matrices") {
  const IntMatrix M{{2, 1}, {1, 1}};
  CHECK(M.determinant() == 1);
  CHECK(IntMatrix::identity(3).determinant() == 1);
  CHECK((M * IntMatrix::identity(2)) == M);
  CHECK(M.transpose() == IntMatrix{{2, 1}, {1, 1}});
  for (std::size_t m = 1; m <= 4; ++m) {
    const IntMatrix A = build_A(m);
    const IntMatrix K = integer_kernel(A);
    CHECK(K.rows() == A.cols() - A.rows());
    const IntMatrix prod = A * K.transpose();
    CHECK(prod == IntMatrix(A.rows(), K.rows()));
  }
}

TEST_CASE("toric ideals") {
  SUBCASE("one row") {
    const auto gb = toric_ideal(IntMatrix{{1, 1}});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].str() == "d1 - d2");
  }
  SUBCASE("equals the stated binomials") {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto gb = toric_ideal(build_A(m), toric_context(m));
      const auto drl = MonomialOrder::degrevlex(2 * (m + 1));
      const auto claimed = toric_generators_claimed(m);
      CHECK(ideal_contained(claimed, gb, drl));
      CHECK(ideal_contained(gb, cpoly_buchberger(claimed, drl), drl));
      CHECK(is_groebner_basis(claimed, drl));
    }
  }
  SUBCASE("every element is a binomial with Au = Av") {
    for (std::size_t m = 1; m <= 4; ++m) {
      const IntMatrix A = build_A(m);
      for (const CPoly& g : toric_ideal(A)) {
        REQUIRE(g.size() == 2);
        auto it = g.terms().begin();
        const Exponents u = it->first;
        const ParamScalar cu = it->second;
        ++it;
        CHECK(image(A, u) == image(A, it->first));
        CHECK((cu + it->second).is_zero());
      }
    }
  }
  SUBCASE("every binomial of degree <= 4 in the kernel reduces to 0") {
    for (std::size_t m = 1; m <= 2; ++m) {
      const IntMatrix A = build_A(m);
      const auto ctx = toric_context(m);
      const std::size_t n = 2 * (m + 1);
      const auto gb = toric_ideal(A, ctx);
      const auto drl = MonomialOrder::degrevlex(n);
      std::vector<Exponents> monos;
      Exponents cur(n, 0);
      monomials_up_to(n, 4, cur, 0, monos);
      std::map<std::vector<long>, std::vector<Exponents>> fibres;
      for (const Exponents& u : monos) fibres[image(A, u)].push_back(u);
      std::size_t tested = 0;
      for (const auto& [img, us] : fibres)
        for (std::size_t k = 1; k < us.size(); ++k) {
          const CPoly f = CPoly::monomial(ctx, us[0]) - CPoly::monomial(ctx, us[k]);
          CHECK(cpoly_normal_form(f, gb, drl).is_zero());
          ++tested;
        }
      CHECK(tested > 0);
    }
  }
  SUBCASE("reduction of d1 d-1 d2 d-2") {
    const auto ctx = toric_context(2);
    const auto gb = toric_ideal(build_A(2), ctx);
    const CPoly f = CPoly::monomial(ctx, {1, 1, 0, 1, 1, 0});
    CHECK(cpoly_normal_form(f, gb, MonomialOrder::degrevlex(6)) == CPoly::monomial(ctx, {0, 0, 2, 0, 0, 2}));
  }
}

TEST_CASE("holonomic rank by degree") {
  for (std::size_t m = 1; m <= 5; ++m) CHECK(rank_via_degree(m) == (1L << m));
}

TEST_CASE("Euler operators") {
  const ParamSet P = ParamSet::symbolic(2);
  const BetaVector beta = beta_vector(P);
  REQUIRE(beta.size() == 4);
  CHECK(beta[0] == ParamScalar(1) - P.c[0]);
  CHECK(beta[2] == P.b - P.a);
  CHECK(beta[3] == P.c[0] + P.c[1] - P.a - P.b - ParamScalar(2));

  const auto ctx = ahyp_context(2);
  const auto ops = euler_operators(2, beta);
  REQUIRE(ops.size() == 4);
  auto th = [&](std::size_t k) { return WeylElement::theta(ctx, k); };
  CHECK(ops[0] == th(0) - th(3) - WeylElement(ctx, beta[0]));
  WeylElement all(ctx, -beta[3]);
  for (std::size_t k = 0; k < 6; ++k) all += th(k);
  CHECK(ops[3] == all);

  const BetaVector zero(4, ParamScalar(0));
  for (const WeylElement& op : euler_operators(2, zero))
    for (const auto& [e, c] : op.terms()) CHECK(e != Exponents(13, 0));
}

TEST_CASE("support functions") {
  for (std::size_t m = 1; m <= 4; ++m) {
    const IntMatrix A = build_A(m);
    for (std::uint32_t mask = 0; mask < (1U << (m + 1)); ++mask) {
      const SupportFunction PJ(m, mask);
      for (std::size_t col = 0; col < A.cols(); ++col) {
        std::vector<Rational> s;
        for (std::size_t r = 0; r < A.rows(); ++r) s.push_back(Rational(A.at(r, col)));
        const Rational v = PJ(s);
        CHECK((v == Rational(0) || v == Rational(1)));
      }
    }
  }
  CHECK(SupportFunction(2, 0b101).str() == "{1,3}");
  CHECK(SupportFunction(2, 0).str() == "{}");
}

TEST_CASE("irreducibility") {
  SUBCASE("a = b = c_1 = 0 is reducible") {
    const auto r = irreducibility_check(ParamSet::rational(0, 0, {0}));
    CHECK_FALSE(r.irreducible);
    CHECK(r.support_values[0].value == Rational(-1));
    CHECK(r.support_values.size() == 4);
  }
  SUBCASE("no P_J value is an integer") {
    const auto r = irreducibility_check(ParamSet::rational(Rational(1, 2), Rational(1, 3), {Rational(1, 5)}));
    CHECK(r.irreducible);
    for (const SubsetValue& v : r.support_values) CHECK_FALSE(v.integral);
  }
  SUBCASE("m = 2 by enumeration") {
    const ParamSet P = ParamSet::rational(Rational(1, 3), Rational(1, 5), {Rational(1, 2), Rational(1, 2)});
    const auto r = irreducibility_check(P);
    CHECK(r.support_values.size() == 8);
    CHECK(r.irreducible == irreducible_oracle(Rational(1, 3), Rational(1, 5), {Rational(1, 2), Rational(1, 2)}));
  }
  SUBCASE("verdict matches the enumeration oracle") {
    test::Sampler rng(41);
    for (int k = 0; k < 200; ++k) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
      auto pick = [&] { return Rational(rng.integer(-6, 6), rng.integer(1, 3)); };
      const Rational a = pick(), b = pick();
      std::vector<Rational> c;
      for (std::size_t i = 0; i < m; ++i) c.push_back(pick());
      CHECK(irreducibility_check(ParamSet::rational(a, b, c)).irreducible == irreducible_oracle(a, b, c));
    }
  }
  CHECK_THROWS_AS(irreducibility_check(ParamSet::symbolic(1)), UnspecializedParameter);
}

TEST_CASE("Euler pushforward") {
  CHECK(euler_pushforward(IntMatrix::identity(4)) == IntMatrix::identity(4));
  CHECK_THROWS_AS(euler_pushforward(IntMatrix{{1, 1}, {2, 2}}), SingularChange);
  for (std::size_t m = 2; m <= 3; ++m) {
    const CheckList r = check_pushforward_identities(m);
    CHECK(r.checks.size() >= 4);
    for (const Check& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
  }
  const IntMatrix T = euler_pushforward(fc_change_matrix(2));
  // u_1 d_1 = z_1 dz_1; u_-1 d_-1 = z_1 dz_1 - z_3 dz_3.
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(T.at(k, 0) == (k == 0 ? 1 : 0));
    CHECK(T.at(k, 3) == (k == 0 ? 1 : k == 2 ? -1 : 0));
  }
}
