#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "sbrauer/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::string const& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = sbrauer::cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(std::string const& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("embed", "[cli]") {
  auto r = run({"embed", "+2 +1"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1 2)(3 4)\n");
  CHECK(run({"embed", "+1 -2"}).out == "(2 4)\n");
  CHECK(run({"embed", "+1 +2", "--format", "json"}).out == "{\"element\":\"+1 +2\",\"embedded\":\"e\"}\n");
}

TEST_CASE("mul", "[cli]") {
  auto r = run({"mul", "+2 +1", "-1 +2"});
  CHECK(r.code == 0);
  CHECK(r.out == "+2 -1\n(1 2 3 4)\n");
  auto j = run({"mul", "+2 +1", "-1 +2", "--format", "json"});
  CHECK(j.out == "{\"embedded\":\"(1 2 3 4)\",\"product\":\"+2 -1\"}\n");
  CHECK(run({"mul", "+1", "+1 +2"}).code == 2);
}

TEST_CASE("malformed elements point at the token", "[cli]") {
  auto r = run({"embed", "+1 +1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err == "error: window notation: not a bijection (1 repeated)\n  +1 +1\n     ^\n");
  CHECK(run({"embed", "+1 x2"}).code == 2);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--claim", "nope", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--claim", "thm_3_1", "--n", "3", "--oracle", "gap"}).code == 2);
  CHECK(run({"embed", "+1", "--format", "xml"}).code == 2);
  CHECK(run({"enumerate", "--n", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("decompose", "[cli]") {
  auto r = run({"decompose", "(1 7 3 9)(6 2 8 4)(5 10)", "--degree", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1 7 3 9)(2 8 4 6)(5 10)\ncycle_type=4,4,2\nparity=odd\n");
  CHECK(run({"decompose", "(1 7 3 9)(6 2 8 4)(5 10)", "--degree", "10", "--invert"}).out == "-2 -3 -4 -1 -5\n");
  CHECK(run({"decompose", "(1 2)", "--degree", "4", "--invert"}).code == 2);
  CHECK(run({"decompose", "(1 2", "--degree", "4"}).code == 2);
}

TEST_CASE("embed then decompose --invert round-trips for n <= 4", "[cli][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& s : sbrauer::enumerate_signed(n)) {
      auto window = sbrauer::format_signed(s);
      auto cyc = run({"embed", window}).out;
      cyc.pop_back();
      auto back = run({"decompose", cyc, "--degree", std::to_string(2 * n), "--invert"});
      REQUIRE(back.code == 0);
      REQUIRE(back.out == window + "\n");
    }
  }
}

TEST_CASE("enumerate", "[cli]") {
  CHECK(lines(run({"enumerate", "--even", "--n", "3"}).out) == 24);
  CHECK(lines(run({"enumerate", "--n", "3"}).out) == 48);
  CHECK(run({"enumerate", "--n", "1"}).out == "+1\n-1\n");
  CHECK(run({"enumerate", "--n", "3"}).out == run({"enumerate", "--n", "3"}).out);
}

TEST_CASE("verify", "[cli]") {
  auto r = run({"verify", "--claim", "thm_3_1", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "claim=thm_3_1 n=4 checked=384 failures=0\n");

  auto all = run({"verify", "--all", "--n", "6", "--jobs", "2"});
  CHECK(all.code == 0);
  CHECK(lines(all.out) == 11);

  auto oracle = run({"verify", "--claim", "thm_3_2_order", "--n", "5", "--oracle=bsgs"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out == "claim=thm_3_2_order n=5 checked=1921 failures=0\n");

  auto json = run({"verify", "--claim", "thm_3_2_intersection", "--n", "3", "--format", "json"});
  auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed[0]["measured"] == 24);
  CHECK(parsed[0]["failures"] == 0);
}

TEST_CASE("valuation", "[cli]") {
  auto r = run({"valuation", "--limit", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "claim=cor_3_4 n=10 checked=9 failures=0\nclaim=divisibility n=10 checked=9 failures=0\n");
  CHECK(run({"valuation", "--limit", "1000", "--exact-limit", "100"}).code == 0);
}

TEST_CASE("render", "[cli]") {
  auto dot = run({"render", "--format", "dot"}, "n=2; 1-2:+; 3-4:-\n");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph signed_diagram {", 0) == 0);
  auto ascii = run({"render"}, "n=2; 1-3:+; 2-4:+\n");
  CHECK(ascii.code == 0);
  CHECK(sbrauer::parse_diagram(ascii.out) == sbrauer::identity_diagram(2));
  auto j = run({"render", "--format", "json"}, "n=2; 1-3:+; 2-4:+");
  CHECK(nlohmann::json::parse(j.out)["vertical"] == true);

  auto bad = run({"render"}, "n=2; 1-3:+; 1-4:+\n");
  CHECK(bad.code == 2);
  CHECK(run({"render", "--format", "svg"}, "n=1; 1-2:+").code == 2);
}
