#include <doctest.h>

#include "samples.hpp"
#include "weylgb/errors.hpp"
#include "weylgb/lauricella/operators.hpp"
#include "weylgb/text/parser.hpp"

using namespace weylgb;

namespace {

std::size_t syntax_offset(const std::string& text) {
  try {
    parse_operator(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

std::size_t unknown_offset(const std::string& text, const ParseOptions& o = {}) {
  try {
    parse_operator(text, o);
  } catch (const UnknownSymbol& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_operator("d1*x1").str() == "x1*d1 + 1");
  CHECK(parse_operator("d1*x1", ParseOptions{.homogenized = true}).str() == "x1*d1 + h^2");
  CHECK(parse_operator("(x1 + 1/2)^2").str() == "x1^2 + x1 + 1/4");
  CHECK(parse_operator("-x1*-d1").str() == "x1*d1");
  CHECK(parse_operator("a*c2*x1").context()->nvars() == 1);
  CHECK(parse_operator("x1", ParseOptions{.nvars = 3}).context()->nvars() == 3);
  CHECK(parse_operator("y2*d1").context()->coord(0) == "y1");
}

TEST_CASE("parse errors carry offsets") {
  CHECK(syntax_offset("x1^") == 3);
  CHECK(syntax_offset("2x1") == 1);
  CHECK(syntax_offset("x1 + ") == 5);
  CHECK(syntax_offset("(x1") == 3);
  CHECK(unknown_offset("x1 $ d1") == 3);
  CHECK(syntax_offset("1/0") == 2);
  CHECK(unknown_offset("z1") == 0);
  CHECK(unknown_offset("x1 + y1") == 5);
  CHECK(unknown_offset("x1*h", ParseOptions{.homogenized = false}) == 3);
  CHECK(unknown_offset("x3", ParseOptions{.nvars = 2}) == 0);
}

TEST_CASE("round trip on the generator operators") {
  std::size_t count = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    const ParamSet P = ParamSet::symbolic(m);
    std::vector<WeylElement> ops{op_S_ab(m, P.a, P.b)};
    for (std::size_t i = 1; i <= m; ++i) {
      ops.push_back(ell(i, P));
      ops.push_back(ell_prime(i, P));
      ops.push_back(op_S(i, P));
      ops.push_back(op_T(i, P));
      for (std::size_t j = 1; j <= m; ++j)
        if (i != j) {
          ops.push_back(ell_pair(i, j, P));
          ops.push_back(op_T(i, j, P));
        }
    }
    for (const WeylElement& op : ops) {
      CHECK(parse_operator(format_operator(op), op.context()) == op);
      ++count;
    }
  }
  CHECK(count >= 50);
}

TEST_CASE("round trip on random elements") {
  test::Sampler rng(51);
  for (bool hom : {false, true})
    for (int k = 0; k < 40; ++k) {
      const auto ctx = WeylContext::make(static_cast<std::size_t>(rng.integer(1, 3)), hom);
      const WeylElement p = rng.weyl(ctx, 4);
      CHECK(parse_operator(format_operator(p), ctx) == p);
    }
}
