#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"

using weylgb::cli::run_command;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sing-locus prints both components") {
  const Run r = run({"sing-locus", "--m", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("product component: x1^2 - 2*x1*x2 + x2^2 - 2*x1 - 2*x2 + 1\n") != std::string::npos);
  CHECK(r.out.find("coordinate component: x1*x2\n") != std::string::npos);
}

TEST_CASE("rank prints 2^m") {
  const Run r = run({"rank", "--m", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("rank: 8\n") != std::string::npos);
}

TEST_CASE("structured reports") {
  const Run r = run({"verify-identities", "--m", "2", "--suite", "syzygy", "--format", "structured"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["run"]["command"] == "verify-identities");
  CHECK(doc["run"]["m"] == "2");
  CHECK(doc["run"]["parameters"] == "symbolic");
  CHECK(doc["status"] == "pass");
  REQUIRE(doc["checks"].is_array());
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c.contains("detail"));
  }
}

TEST_CASE("reports are byte-stable") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"char-ideal", "--m", "2", "--seed", "5", "--format", "structured"},
        std::vector<std::string>{"verify-identities", "--m", "3", "--a", "-1/2"},
        std::vector<std::string>{"groebner", "--m", "2", "--system", "T", "--format", "structured"}}) {
    const Run first = run(args), second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.status == second.status);
  }
  weylgb::cli::Report rep;
  rep.meta("command", "x");
  rep.result("value", "1\n2");
  rep.checks.add("ok", true);
  CHECK(rep.render(weylgb::cli::Format::Text) == "# command: x\nvalue:\n  1\n  2\n[pass] ok\n1/1 checks passed\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"check-example"}).status == 0);
  CHECK(run({"verify-identities", "--m", "2", "--suite", "commutation"}).status == 1);
  CHECK(run({"verify-identities", "--m", "4", "--suite", "spair"}).status == 1);
  CHECK(run({"verify-identities", "--m", "2", "--suite", "syzygy", "--perturb"}).status == 1);
  CHECK(run({}).status == 2);
  CHECK(run({"rank", "--m", "0"}).status == 2);
  CHECK(run({"rank", "--bogus"}).status == 2);
  CHECK(run({"verify-identities", "--suite", "nope"}).status == 2);
  CHECK(run({"irreducible", "--m", "1"}).status == 2);
  CHECK(run({"generate", "--kind", "ell", "--c3", "1", "--m", "2"}).status == 2);
  CHECK(run({"point-test", "--m", "2", "--point", "1"}).status == 2);
  const Run bad = run({"parse", "--expr", "x1^"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("offset 3") != std::string::npos);
}

TEST_CASE("parameters on the command line") {
  const Run r = run({"generate", "--kind", "ell", "--m", "1", "--a", "-1/2", "--b", "2", "--c1", "1/3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("# parameters: rational\n") != std::string::npos);
  CHECK(r.out.find("# a: -1/2\n") != std::string::npos);
  const Run mixed = run({"generate", "--kind", "T_i", "--m", "2", "--c", "1,2"});
  CHECK(mixed.out.find("# parameters: mixed\n") != std::string::npos);
  CHECK(run({"generate", "--kind", "T_i", "--m", "2", "--c", "1"}).status == 2);
}

TEST_CASE("commutation report names the corrected relation") {
  const Run r = run({"verify-identities", "--m", "2", "--suite", "commutation"});
  CHECK(r.out.find("[FAIL] [l'_i, l'_j] = -(2 theta - a - b + 1)(l'_i - l'_j) (1,2)") != std::string::npos);
  CHECK(r.out.find("[pass] [l'_i, l'_j] = (2 theta - a - b - 1)(l'_i - l'_j) (1,2)") != std::string::npos);
}

TEST_CASE("point test and irreducible") {
  const Run p = run({"point-test", "--m", "2", "--point", "1/4,1/4"});
  CHECK(p.out.find("member: yes") != std::string::npos);
  const Run q = run({"point-test", "--m", "2", "--point", "1,1"});
  CHECK(q.out.find("product value: -3") != std::string::npos);
  const Run ir = run({"irreducible", "--m", "1", "--a", "0", "--b", "0", "--c1", "0"});
  CHECK(ir.out.find("verdict: reducible") != std::string::npos);
}
