#include "commands.hpp"

#include <CLI11.hpp>
#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "report.hpp"
#include "weylgb/ahyp/ahyp.hpp"
#include "weylgb/arith/cgroebner.hpp"
#include "weylgb/errors.hpp"
#include "weylgb/lauricella/characteristic.hpp"
#include "weylgb/lauricella/identities.hpp"
#include "weylgb/lauricella/operators.hpp"
#include "weylgb/lauricella/puiseux.hpp"
#include "weylgb/lauricella/singular_locus.hpp"
#include "weylgb/text/parser.hpp"
#include "weylgb/weyl/initial_form.hpp"
#include "weylgb/weyl/weyl_groebner.hpp"

namespace weylgb::cli {
namespace {

constexpr std::size_t kMaxC = 8;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t m = 2;
  std::string a, b, c;
  std::array<std::string, kMaxC> ci;
  std::string order;
  std::uint64_t seed = 1;
  std::string format = "text";

  std::string kind;
  std::size_t i = 1, j = 0;
  std::string system = "ell_prime";
  std::string point;
  std::string suite = "all";
  bool perturb = false;
  std::string expr;
  std::string coord;
  bool homogenized = false;
  bool m_given = false;
};

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = "\n") {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string sign_name(const SignVector& eps) {
  std::string s = "(";
  for (std::size_t k = 0; k < eps.size(); ++k) s += std::string(k ? "," : "") + (eps[k] > 0 ? "+" : "-");
  return s + ")";
}

ParamSet build_params(const Options& o, Report& r) {
  ParamSet P = ParamSet::symbolic(o.m);
  std::size_t given = 0;
  if (!o.a.empty()) P.a = parse_rational(o.a, "--a"), ++given;
  if (!o.b.empty()) P.b = parse_rational(o.b, "--b"), ++given;
  if (!o.c.empty()) {
    const auto items = split(o.c, ',');
    if (items.size() != o.m) throw UsageError("--c needs " + std::to_string(o.m) + " comma-separated values");
    for (std::size_t k = 0; k < o.m; ++k) P.c[k] = parse_rational(items[k], "--c");
    given += o.m;
  }
  for (std::size_t k = 0; k < kMaxC; ++k) {
    if (o.ci[k].empty()) continue;
    if (k >= o.m) throw UsageError("--c" + std::to_string(k + 1) + " exceeds m = " + std::to_string(o.m));
    P.c[k] = parse_rational(o.ci[k], "--c" + std::to_string(k + 1));
    ++given;
  }
  const bool all = P.is_specialized();
  r.meta("parameters", all ? "rational" : given == 0 ? "symbolic" : "mixed");
  std::vector<std::string> c;
  for (const ParamScalar& s : P.c) c.push_back(s.str());
  r.meta("a", P.a.str());
  r.meta("b", P.b.str());
  r.meta("c", join(c, ","));
  return P;
}

bool parameterized(const std::string& cmd) {
  return cmd == "generate" || cmd == "groebner" || cmd == "verify-identities" || cmd == "irreducible";
}

// ---- subcommands ----

void cmd_generate(const Options& o, const ParamSet& P, Report& r) {
  if (o.kind == "L" || o.kind == "L_prime") {
    const SymbolKind kind = o.kind == "L" ? SymbolKind::L : SymbolKind::LPrime;
    if (o.i < 1 || o.i > o.m) throw IndexOutOfRange("i must lie in 1.." + std::to_string(o.m));
    r.result("symbol", make_symbol(kind, o.i, o.m).str());
    return;
  }
  const OperatorKind kind = parse_operator_kind(o.kind);
  const WeylElement op = make_operator(kind, o.i, o.j, P);
  r.result("operator", op.str());
  switch (kind) {
    case OperatorKind::Ell:
      r.checks.add("principal symbol is L_" + std::to_string(o.i),
                   principal_symbol(op) == make_symbol(SymbolKind::L, o.i, o.m));
      break;
    case OperatorKind::EllPrime:
      r.checks.add("principal symbol is y_i(y_i xi_i)^2 - (sum y_j xi_j)^2",
                   principal_symbol(op) == make_symbol(SymbolKind::LPrime, o.i, o.m));
      break;
    case OperatorKind::T:
      r.checks.add("T_i at h = 1 is l_i", dehomogenize(op) == ell(o.i, P));
      break;
    case OperatorKind::TPair:
      r.checks.add("T_ij at h = 1 is x_j l_i - x_i l_j", dehomogenize(op) == ell_pair(o.i, o.j, P));
      break;
    default:
      break;
  }
}

void cmd_groebner(const Options& o, const ParamSet& P, Report& r) {
  std::vector<WeylElement> input;
  std::string default_order;
  if (o.system == "ell_prime") {
    for (std::size_t k = 1; k <= o.m; ++k) input.push_back(ell_prime(k, P));
    default_order = "w";
  } else if (o.system == "T") {
    for (std::size_t k = 1; k <= o.m; ++k) input.push_back(op_T(k, P));
    for (std::size_t i = 1; i <= o.m; ++i)
      for (std::size_t j = i + 1; j <= o.m; ++j) input.push_back(op_T(i, j, P));
    default_order = "km";
  } else if (o.system == "ell") {
    for (std::size_t k = 1; k <= o.m; ++k) input.push_back(ell(k, P));
    default_order = "w";
  } else {
    throw UsageError("--system must be ell_prime, T or ell");
  }
  const std::string order = o.order.empty() ? default_order : o.order;
  r.meta("system", o.system);
  r.meta("order", order);
  const std::size_t n = o.m;
  const WeylOrder ord = order == "w" ? weyl_order_w(n) : order == "km" ? weyl_order_km(n) : weyl_order_lex(n);

  const std::vector<WeylElement> basis = weyl_buchberger(input, ord);
  std::vector<std::string> lines;
  for (const WeylElement& g : basis) lines.push_back(g.str());
  r.result("size", std::to_string(basis.size()));
  r.result("basis", join(lines));
  const bool closed = basis.size() == input.size();
  r.result("input is Groebner", closed ? "yes" : "no");
  r.checks.add("every S-pair of the basis reduces to 0", weyl_is_groebner_basis(basis, ord));
  if (order == default_order && o.system != "ell")
    r.checks.add("the generators already form a Groebner basis", closed,
                 closed ? "" : std::to_string(basis.size() - input.size()) + " elements added");
}

void cmd_char_ideal(const Options& o, Report& r) {
  r.meta("seed", std::to_string(o.seed));
  const CharIdealTorus torus = char_ideal_torus(o.m);
  std::vector<std::string> lines;
  for (const CPoly& g : torus.generators) lines.push_back(g.str());
  r.result("torus generators", join(lines));
  r.checks.add("l'_1..l'_m is a Groebner basis under w", torus.input_is_groebner);
  for (std::size_t k = 0; k < o.m; ++k)
    r.checks.add("symbol " + std::to_string(k + 1) + " is y_i(y_i xi_i)^2 - (sum y_j xi_j)^2",
                 torus.generators[k] == make_symbol(SymbolKind::LPrime, k + 1, o.m), torus.generators[k].str());

  const CharDimension dim = char_dimension(o.m, o.seed);
  for (std::size_t k = 0; k < dim.seeds.size(); ++k) {
    const std::string tag = " (seed " + std::to_string(dim.seeds[k]) + ")";
    r.checks.add("dim in(<L_1..L_m>) = m" + tag, dim.dimension_l[k] == static_cast<int>(o.m),
                 "dimension " + std::to_string(dim.dimension_l[k]));
    r.checks.add("torus chart gives the same dimension" + tag, dim.dimension_torus[k] == dim.dimension_l[k],
                 "dimension " + std::to_string(dim.dimension_torus[k]));
  }
  r.result("dimension", std::to_string(dim.dimension()));
  if (o.m <= 2) r.checks.add("saturations by x_1...x_m agree on the torus", torus_agreement(o.m));
}

void det_checks(std::size_t m, CheckList& out) {
  for (const SignVector& eps : SignVector::all(m))
    out.add("det M(eps) = x_1...x_m(1 + sum eps_j sqrt(x_j)) for eps = " + sign_name(eps),
            coeff_matrix_det(m, eps) == det_closed_form(m, eps));
}

void cmd_sing_locus(const Options& o, Report& r) {
  const SingularLocusPoly poly = singular_locus_poly(o.m);
  r.result("product component", poly.product.str());
  r.result("coordinate component", poly.coordinate.str());
  det_checks(o.m, r.checks);
}

void cmd_point_test(const Options& o, Report& r) {
  if (o.point.empty()) throw UsageError("--point is required");
  std::vector<Rational> pt;
  for (const std::string& s : split(o.point, ',')) pt.push_back(parse_rational(s, "--point"));
  r.meta("point", o.point);
  const PointTest t = singular_point_test(o.m, pt);
  for (std::size_t k = 0; k < t.coordinate_zero.size(); ++k)
    r.result("x" + std::to_string(k + 1) + " = 0", t.coordinate_zero[k] ? "yes" : "no");
  r.result("product value", t.product_value.str());
  r.result("member", t.member ? "yes" : "no");
}

void commutation_checks(std::size_t m, const ParamSet& P, CheckList& out) {
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      const std::string ij = " " + pair_name(i, j);
      out.add("[l'_i, l'_j] = -(2 theta - a - b + 1)(l'_i - l'_j)" + ij,
              verify_commutation(m, i, j, P, CommutationForm::Displayed),
              "holds with (2 theta - a - b - 1) in place of -(2 theta - a - b + 1)");
      out.add("[l'_i, l'_j] = (2 theta - a - b - 1)(l'_i - l'_j)" + ij,
              verify_commutation(m, i, j, P, CommutationForm::Corrected));
      out.add("negative control: -(2 theta - a - b)(l'_i - l'_j) is rejected" + ij,
              !verify_commutation(m, i, j, P, CommutationForm::DropOne));
      const StandardRepCertificate shown = verify_torus_spair(m, i, j, P, CommutationForm::Displayed);
      out.add("sp(l'_i, l'_j) standard representation with k = 1" + ij, shown.ok, shown.detail);
      const StandardRepCertificate fixed = verify_torus_spair(m, i, j, P, CommutationForm::Corrected);
      out.add("sp(l'_i, l'_j) standard representation with k = -1" + ij, fixed.ok, fixed.detail);
    }
}

void cmd_verify(const Options& o, const ParamSet& P, Report& r) {
  static const std::vector<std::string> suites = {"commutation", "spair", "syzygy", "det", "pushforward",
                                                  "divisibility"};
  r.meta("suite", o.suite);
  auto wanted = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };
  if (o.suite != "all" && std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  if (wanted("commutation")) commutation_checks(o.m, P, r.checks);
  if (wanted("spair")) r.checks.append(verify_spair_suite(o.m, P, {.perturb_tk = o.perturb}));
  if (wanted("syzygy")) r.checks.append(syzygy_suite(o.m, P, o.perturb));
  if (wanted("det")) det_checks(o.m, r.checks);
  if (wanted("pushforward")) r.checks.append(check_pushforward_identities(o.m));
  if (wanted("divisibility"))
    r.checks.add("l_m lies in x_m D", left_divisible_by_var(ell(o.m, P), o.m - 1));
}

void cmd_rank(const Options& o, Report& r) {
  const auto ctx = toric_context(o.m);
  const std::vector<CPoly> gb = toric_ideal(build_A(o.m), ctx);
  std::vector<std::string> lines;
  for (const CPoly& g : gb) lines.push_back(g.str());
  r.result("toric ideal", join(lines));
  const long rank = rank_via_degree(o.m);
  r.result("rank", std::to_string(rank));
  r.checks.add("rank = 2^m", rank == (1L << o.m));

  const MonomialOrder drl = MonomialOrder::degrevlex(2 * (o.m + 1));
  const std::vector<CPoly> claimed = toric_generators_claimed(o.m);
  const std::vector<CPoly> claimed_gb = cpoly_buchberger(claimed, drl);
  r.checks.add("toric ideal = <d_j d_-j - d_(m+1) d_-(m+1)>",
               ideal_contained(claimed, gb, drl) && ideal_contained(gb, claimed_gb, drl));
}

void cmd_irreducible(const ParamSet& P, Report& r) {
  const IrreducibilityReport rep = irreducibility_check(P);
  std::vector<std::string> lines;
  for (const SubsetValue& v : rep.support_values)
    lines.push_back("P_" + SupportFunction(P.m, v.mask).str() + " = " + v.value.str() + (v.integral ? " (integer)" : ""));
  r.result("support values", join(lines));
  lines.clear();
  for (const SubsetValue& v : rep.display_values)
    lines.push_back("mask " + std::to_string(v.mask) + ": " + v.value.str() + (v.integral ? " (integer)" : ""));
  r.result("sign-vector values", join(lines));
  r.result("verdict", rep.irreducible ? "irreducible" : "reducible");
  r.checks.add("support-function and sign-vector verdicts agree", rep.verdicts_agree(),
               std::string("sign-vector form says ") + (rep.display_irreducible ? "irreducible" : "reducible"));
}

void cmd_parse(const Options& o, Report& r) {
  if (o.expr.empty()) throw UsageError("--expr is required");
  ParseOptions po;
  if (o.m_given) po.nvars = o.m;
  if (o.homogenized) po.homogenized = true;
  if (!o.coord.empty()) po.coord = o.coord;
  const WeylElement p = parse_operator(o.expr, po);
  const std::string text = format_operator(p);
  r.meta("expr", o.expr);
  r.result("normal form", text);
  r.checks.add("normal form reparses to the same element", parse_operator(text, p.context()) == p);
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  Report r;
  r.meta("command", cmd);
  if (cmd != "parse" || o.m_given) r.meta("m", std::to_string(o.m));
  std::optional<ParamSet> P;
  if (parameterized(cmd)) P = build_params(o, r);

  if (cmd == "generate") cmd_generate(o, *P, r);
  else if (cmd == "groebner") cmd_groebner(o, *P, r);
  else if (cmd == "char-ideal") cmd_char_ideal(o, r);
  else if (cmd == "sing-locus") cmd_sing_locus(o, r);
  else if (cmd == "point-test") cmd_point_test(o, r);
  else if (cmd == "verify-identities") cmd_verify(o, *P, r);
  else if (cmd == "rank") cmd_rank(o, r);
  else if (cmd == "irreducible") cmd_irreducible(*P, r);
  else if (cmd == "check-example") r.checks.append(check_example_solutions());
  else if (cmd == "parse") cmd_parse(o, r);

  out << r.render(o.format == "structured" ? Format::Structured : Format::Text);
  return r.passed() ? 0 : 1;
}

void add_common(CLI::App* sub, Options& o, bool params) {
  sub->add_option("--m", o.m, "number of variables")->check(CLI::Range(1, static_cast<int>(kMaxC)))
      ->each([&o](const std::string&) { o.m_given = true; });
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  if (!params) return;
  sub->add_option("--a", o.a, "parameter a (rational; symbolic when omitted)");
  sub->add_option("--b", o.b, "parameter b");
  sub->add_option("--c", o.c, "c_1..c_m as a comma-separated list");
  for (std::size_t k = 0; k < kMaxC; ++k)
    sub->add_option("--c" + std::to_string(k + 1), o.ci[k], "parameter c_" + std::to_string(k + 1));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Groebner bases and verification for the Lauricella F_C system", "weylgb"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "print an operator or principal symbol");
  add_common(gen, o, true);
  gen->add_option("--kind", o.kind, "ell, ell_prime, ell_ij, S_i, S_ab, T_i, T_ij, L, L_prime")->required();
  gen->add_option("--i", o.i, "first index (1-based)");
  gen->add_option("--j", o.j, "second index for pair kinds");

  auto* gb = app.add_subcommand("groebner", "run Buchberger on a generator system");
  add_common(gb, o, true);
  gb->add_option("--system", o.system, "ell_prime (order w), T (order km) or ell");
  gb->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"w", "km", "lex"}));

  auto* ch = app.add_subcommand("char-ideal", "characteristic ideal and its dimension");
  add_common(ch, o, false);
  ch->add_option("--seed", o.seed, "seed of the random parameter draws");

  auto* sl = app.add_subcommand("sing-locus", "singular locus polynomial");
  add_common(sl, o, false);

  auto* pt = app.add_subcommand("point-test", "membership of a rational point in the singular locus");
  add_common(pt, o, false);
  pt->add_option("--point", o.point, "comma-separated rational coordinates");

  auto* vi = app.add_subcommand("verify-identities", "verify operator identities");
  add_common(vi, o, true);
  vi->add_option("--suite", o.suite, "commutation, spair, syzygy, det, pushforward, divisibility or all");
  vi->add_flag("--perturb", o.perturb, "negative control: perturb the spair and syzygy inputs");

  auto* rk = app.add_subcommand("rank", "toric ideal and holonomic rank");
  add_common(rk, o, false);

  auto* ir = app.add_subcommand("irreducible", "irreducibility test for rational parameters");
  add_common(ir, o, true);

  auto* ce = app.add_subcommand("check-example", "check the explicit solutions at a = -1/2, b = -2, c = 1/2");
  add_common(ce, o, false);

  auto* pa = app.add_subcommand("parse", "parse an operator and print its normal form");
  add_common(pa, o, false);
  pa->add_option("--expr", o.expr, "operator text");
  pa->add_flag("--homogenized", o.homogenized, "parse into the homogenized algebra");
  pa->add_option("--coord", o.coord, "coordinate letter")->check(CLI::IsMember({"x", "y"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'weylgb --help' for usage\n";
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSymbol& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnspecializedParameter& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace weylgb::cli
