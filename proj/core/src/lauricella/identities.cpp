#include "weylgb/lauricella/identities.hpp"

#include <sstream>

#include "weylgb/errors.hpp"
#include "weylgb/lauricella/operators.hpp"

namespace weylgb {
namespace {

/// T_i (j == 0) or T_ij.
struct Gen {
  std::size_t i = 0;
  std::size_t j = 0;
};

std::string gen_name(const Gen& g) {
  if (g.j == 0) return "T(" + std::to_string(g.i) + ")";
  return "T(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

struct Term {
  WeylElement cof;
  Gen gen;
};
using Relation = std::vector<Term>;

struct SpairCase {
  std::string name;
  Gen f, g;
  Relation lhs, rhs;
  /// Representation of the S-pair itself that is certified.
  Relation standard;
  std::string note;
};

class Builder {
public:
  Builder(std::size_t m, const ParamSet& P) : m_(m), P_(P), ctx_(lauricella_h_context(m)) {}

  WeylElement X(std::size_t i) const { return WeylElement::x(ctx_, i - 1); }
  WeylElement D(std::size_t i) const { return WeylElement::d(ctx_, i - 1); }
  WeylElement H(unsigned k = 1) const { return WeylElement::h(ctx_).pow(k); }
  WeylElement th(std::size_t i) const { return WeylElement::theta(ctx_, i - 1); }
  WeylElement S(std::size_t i) const { return op_S(i, P_); }
  WeylElement Sab1() const { return op_S_ab(m_, P_.a - ParamScalar(1), P_.b - ParamScalar(1)); }
  const ParamScalar& c(std::size_t i) const { return P_.c[i - 1]; }

  WeylElement T(const Gen& g) const { return g.j == 0 ? op_T(g.i, P_) : op_T(g.i, g.j, P_); }
  WeylElement eval(const Relation& r) const {
    WeylElement sum(ctx_);
    for (const Term& t : r) sum += t.cof * T(t.gen);
    return sum;
  }

private:
  std::size_t m_;
  const ParamSet& P_;
  WeylContextPtr ctx_;
};

Gen T1(std::size_t i) { return {i, 0}; }
Gen T2(std::size_t i, std::size_t j) { return {i, j}; }

std::string sp_name(const Gen& f, const Gen& g) { return "sp(" + gen_name(f) + "," + gen_name(g) + ")"; }

std::vector<SpairCase> spair_cases(std::size_t m, const ParamSet& P, const SpairSuiteOptions& options) {
  const Builder b(m, P);
  const ParamScalar two(2);
  std::vector<SpairCase> out;

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      SpairCase tc{sp_name(T1(i), T1(j)), T1(i), T1(j),
                   {{b.S(j), T1(i)}, {-b.S(i), T1(j)}},
                   {{b.Sab1(), T2(i, j)}},
                   {},
                   "S_j T_i - S_i T_j differs from the S-pair by c_j h^2 theta_j T_i - c_i h^2 theta_i T_j"};
      tc.standard = tc.rhs;
      tc.standard.push_back({-(b.c(j) * b.H(2) * b.th(j)), T1(i)});
      tc.standard.push_back({b.c(i) * b.H(2) * b.th(i), T1(j)});
      out.push_back(std::move(tc));

      SpairCase ti{sp_name(T1(i), T2(i, j)), T1(i), T2(i, j),
                   {{b.X(j), T1(i)}, {-b.H(), T2(i, j)}},
                   {{b.X(i), T1(j)}},
                   {},
                   {}};
      ti.standard = ti.rhs;
      out.push_back(std::move(ti));

      const WeylElement xinv_sj = b.X(j) * b.D(j).pow(2) + b.c(j) * b.H(2) * b.D(j);
      SpairCase tj{sp_name(T1(j), T2(i, j)), T1(j), T2(i, j),
                   {{b.X(i).pow(2) * b.D(i).pow(2), T1(j)}, {-(b.H() * b.X(j) * b.D(j).pow(2)), T2(i, j)}},
                   {{b.X(i) * xinv_sj - b.c(i) * b.H(2) * b.th(i), T1(j)},
                    {-(two * b.H(2) * b.th(j) + b.c(j) * b.H(4)), T1(i)}},
                   {{b.X(i) * b.X(j) * b.D(j).pow(2) - b.c(i) * b.H(2) * b.th(i), T1(j)},
                    {(b.c(j) - two) * b.H(2) * b.th(j), T1(i)},
                    {-b.Sab1(), T2(i, j)}},
                   "certified with {x_i x_j d_j^2 - c_i h^2 theta_i} T_j + (c_j - 2) h^2 theta_j T_i - S_{a-1,b-1} T_ij"};
      out.push_back(std::move(tj));
    }

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = 1; k <= m; ++k) {
        if (k == i || k == j) continue;
        const WeylElement last = options.perturb_tk ? b.c(k) * b.H(2) * b.th(k) : b.c(k) * b.H(3) * b.th(k);
        SpairCase tk{sp_name(T1(k), T2(i, j)), T1(k), T2(i, j),
                     {{b.X(i).pow(2) * b.X(j) * b.D(i).pow(2), T1(k)}, {-(b.H() * b.X(k).pow(2) * b.D(k).pow(2)), T2(i, j)}},
                     {{b.H() * b.S(j), T2(k, i)},
                      {b.X(k) * b.S(i), T1(j)},
                      {-(b.c(i) * b.H(2) * b.X(j) * b.th(i)), T1(k)},
                      {last, T2(i, j)}},
                     {},
                     {}};
        tk.standard = tk.rhs;
        out.push_back(std::move(tk));
      }

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = i + 1; k <= m; ++k) {
        if (k == j) continue;
        SpairCase c{sp_name(T2(i, j), T2(i, k)), T2(i, j), T2(i, k),
                    {{b.X(k), T2(i, j)}, {-b.X(j), T2(i, k)}},
                    {{-b.X(i), T2(j, k)}},
                    {},
                    {}};
        c.standard = c.rhs;
        out.push_back(std::move(c));
      }

  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i < j; ++i)
      for (std::size_t k = 1; k < j; ++k) {
        if (k == i) continue;
        SpairCase c{sp_name(T2(i, j), T2(k, j)), T2(i, j), T2(k, j),
                    {{b.X(k).pow(2) * b.D(k).pow(2), T2(i, j)}, {-(b.X(i).pow(2) * b.D(i).pow(2)), T2(k, j)}},
                    {{b.S(j), T2(i, k)},
                     {-(b.c(k) * b.H(2) * b.th(k)), T2(i, j)},
                     {b.c(i) * b.H(2) * b.th(i), T2(k, j)}},
                    {},
                    {}};
        c.standard = c.rhs;
        out.push_back(std::move(c));
      }

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k) {
        const ParamScalar s = two - b.c(j);
        SpairCase c{sp_name(T2(i, j), T2(j, k)), T2(i, j), T2(j, k),
                    {{b.X(j) * b.X(k) * b.D(j).pow(2), T2(i, j)}, {-(b.X(i).pow(2) * b.D(i).pow(2)), T2(j, k)}},
                    {{b.S(k) + s * b.H(2) * b.X(k) * b.D(j), T2(i, j)},
                     {(b.c(j) - two) * b.H(4), T2(i, k)},
                     {s * b.H(2) * b.X(i) * b.D(j) + b.c(i) * b.H(2) * b.th(i) - b.X(i) * b.th(j) * b.D(j), T2(j, k)}},
                    {},
                    {}};
        c.standard = c.rhs;
        out.push_back(std::move(c));
      }

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t ip = 1; ip <= m; ++ip)
        for (std::size_t jp = ip + 1; jp <= m; ++jp) {
          if (ip == i || ip == j || jp == i || jp == j) continue;
          SpairCase c{sp_name(T2(i, j), T2(ip, jp)), T2(i, j), T2(ip, jp),
                      {{b.X(ip).pow(2) * b.X(jp) * b.D(ip).pow(2), T2(i, j)},
                       {-(b.X(i).pow(2) * b.X(j) * b.D(i).pow(2)), T2(ip, jp)}},
                      {{b.X(jp) * b.S(j), T2(i, ip)},
                       {-(b.X(ip) * b.S(i)), T2(j, jp)},
                       {-(b.c(ip) * b.H(2) * b.X(jp) * b.th(ip)), T2(i, j)},
                       {b.c(i) * b.H(2) * b.X(j) * b.th(i), T2(ip, jp)}},
                      {},
                      {}};
          c.standard = c.rhs;
          out.push_back(std::move(c));
        }
  return out;
}

std::string cofactor_list(const Relation& r) {
  std::ostringstream os;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) os << "; ";
    os << gen_name(r[k].gen) << ": " << r[k].cof.str();
  }
  return os.str();
}

}  // namespace

bool verify_commutation(std::size_t m, std::size_t i, std::size_t j, const ParamSet& P, CommutationForm form) {
  if (i == j) throw IndexOutOfRange("commutation needs distinct indices");
  const WeylElement li = ell_prime(i, P), lj = ell_prime(j, P);
  const auto ctx = lauricella_y_context(m);
  const WeylElement theta2 = ParamScalar(2) * WeylElement::theta_sum(ctx);
  const WeylElement ab(ctx, P.a + P.b);
  const WeylElement one(ctx, ParamScalar(1));
  WeylElement rhs(ctx);
  switch (form) {
    case CommutationForm::Displayed: rhs = -((theta2 - ab + one) * (li - lj)); break;
    case CommutationForm::Corrected: rhs = (theta2 - ab - one) * (li - lj); break;
    case CommutationForm::DropOne: rhs = -((theta2 - ab) * (li - lj)); break;
  }
  return li * lj - lj * li == rhs;
}

StandardRepCertificate verify_torus_spair(std::size_t m, std::size_t i, std::size_t j, const ParamSet& P,
                                          CommutationForm form) {
  if (i == j) throw IndexOutOfRange("S-pair needs distinct indices");
  const auto ctx = lauricella_y_context(m);
  const WeylElement li = ell_prime(i, P), lj = ell_prime(j, P);
  const long k = form == CommutationForm::Displayed ? 1 : (form == CommutationForm::Corrected ? -1 : 0);
  const WeylElement shift =
      ParamScalar(2) * WeylElement::theta_sum(ctx) + WeylElement(ctx, ParamScalar(k) - P.a - P.b);
  auto lead = [&](std::size_t n) {
    return WeylElement::x(ctx, n - 1).pow(3) * WeylElement::d(ctx, n - 1).pow(2);
  };
  const WeylOrder ord = weyl_order_w(m);
  const std::vector<RepTerm> terms{{lead(j) - lj - shift, li}, {-(lead(i) - li - shift), lj}};
  return check_standard_rep(weyl_spair(li, lj, ord), terms, ord);
}

CheckList verify_spair_suite(std::size_t m, const ParamSet& P, const SpairSuiteOptions& options) {
  const Builder b(m, P);
  const WeylOrder ord = weyl_order_km(m);
  CheckList out;
  for (const SpairCase& c : spair_cases(m, P, options)) {
    const WeylElement lhs = b.eval(c.lhs), rhs = b.eval(c.rhs);
    if (lhs == rhs)
      out.add(c.name + ": display identity", true, "holds");
    else
      out.add(c.name + ": display identity", false, "first difference: " + first_difference(lhs, rhs));

    std::vector<RepTerm> terms;
    for (const Term& t : c.standard) terms.push_back({t.cof, b.T(t.gen)});
    const StandardRepCertificate cert = check_standard_rep(weyl_spair(b.T(c.f), b.T(c.g), ord), terms, ord);
    std::string detail = cofactor_list(c.standard);
    if (!c.note.empty()) detail = c.note + "; " + detail;
    if (!cert.identity_holds) detail = "identity fails, " + cert.detail + "; " + detail;
    else if (cert.failing_index) detail = "term " + std::to_string(*cert.failing_index) + " exceeds in(sp); " + detail;
    out.add(c.name + ": standard representation", cert.ok, detail);
  }
  std::vector<WeylElement> G;
  for (std::size_t i = 1; i <= m; ++i) G.push_back(op_T(i, P));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) G.push_back(op_T(i, j, P));
  const bool gb = weyl_is_groebner_basis(G, ord);
  out.add("every S-pair of G reduces to 0", gb, gb ? "reduced by division" : "some S-pair has a nonzero remainder");
  return out;
}

CheckList syzygy_suite(std::size_t m, const ParamSet& P, bool flip_last) {
  const Builder b(m, P);
  const WeylOrder ord = weyl_order_km(m);
  const auto plain = lauricella_context(m);
  auto ell_of = [&](const Gen& g) { return g.j == 0 ? ell(g.i, P) : ell_pair(g.i, g.j, P); };
  CheckList out;

  for (const SpairCase& c : spair_cases(m, P, {})) {
    const auto [mf, mg] = weyl_spair_multipliers(b.T(c.f), b.T(c.g), ord);
    Relation rel{{mf, c.f}, {-mg, c.g}};
    for (const Term& t : c.standard) rel.push_back({-t.cof, t.gen});
    WeylElement sum(plain);
    for (const Term& t : rel) sum += dehomogenize(t.cof) * ell_of(t.gen);
    out.add("syzygy from " + c.name, sum.is_zero(), sum.is_zero() ? "zero" : "first term: " + first_difference(sum, WeylElement(plain)));
  }

  const WeylElement theta = WeylElement::theta_sum(plain);
  const ParamScalar sign = flip_last ? ParamScalar(-1) : ParamScalar(1);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      const std::string idx = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const WeylElement xi = WeylElement::x(plain, i - 1), xj = WeylElement::x(plain, j - 1);
      const WeylElement r1 = xj * ell(i, P) - sign * ell_pair(i, j, P) - xi * ell(j, P);
      out.add("x_j l_i - l_ij - x_i l_j = 0 " + idx, r1.is_zero(), r1.is_zero() ? "zero" : r1.str());

      auto euler = [&](std::size_t k) {
        const WeylElement t = WeylElement::theta(plain, k - 1);
        return t * (t - WeylElement(plain, ParamScalar(1))) + P.c[k - 1] * t;
      };
      const WeylElement shifted = (theta + WeylElement(plain, P.a - ParamScalar(1))) *
                                  (theta + WeylElement(plain, P.b - ParamScalar(1)));
      const WeylElement r2 = euler(j) * ell(i, P) - euler(i) * ell(j, P) - sign * (shifted * ell_pair(i, j, P));
      out.add("theta relation among l_i, l_j, l_ij " + idx, r2.is_zero(),
              r2.is_zero() ? "zero" : "first term: " + first_difference(r2, WeylElement(plain)));
    }
  return out;
}

}  // namespace weylgb
