#include <doctest.h>

#include <sstream>

#include "ordfree/cli.hpp"
#include "ordfree/io.hpp"

using namespace ordfree;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compare prints the verdict symbol") {
  auto r = run({"compare", "--group", "Z*Z", "--order", "default", "--lhs",
                "x1", "--rhs", "x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "LHS > RHS\n");

  r = run({"compare", "--group", "Z*Z", "--lhs", "1", "--rhs",
           "x1*x2*x1^-1*x2^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "LHS < RHS\n");

  r = run({"compare", "--group", "Z*Z", "--lhs", "x1", "--rhs", "x1"});
  CHECK(r.out == "LHS = RHS\n");
}

TEST_CASE("compare can emit a replayable certificate") {
  auto r = run({"compare", "--group", "Z*Z", "--lhs", "x1", "--rhs", "x2",
                "--certificate", "-"});
  CHECK(r.code == 0);
  REQUIRE(r.out.rfind("LHS > RHS\n", 0) == 0);
  std::string json = r.out.substr(std::string("LHS > RHS\n").size());
  Group g = parse_group("Z*Z");
  Ordering o = Ordering::standard(g);
  Certificate cert = certificate_from_json(json, o, g);
  CHECK(replay(cert, o, g, parse_element("x1", g), parse_element("x2", g)) ==
        Verdict::Greater);
}

TEST_CASE("sign reports the position against the identity") {
  auto r = run({"sign", "--group", "Z*Z", "--elem", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "POSITIVE\n");
  CHECK(run({"sign", "--group", "Z*Z", "--elem", "x1^-1"}).out ==
        "NEGATIVE\n");
  CHECK(run({"sign", "--group", "Z*Z", "--elem", "x2*x2^-1"}).out ==
        "ZERO\n");
}

TEST_CASE("alpha prints the tuple image") {
  auto r = run({"alpha", "--group", "Z*Z", "--elem", "x1*x2*x1^-1*x2^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1, 1)\n");
  CHECK(run({"alpha", "--group", "Z*Z", "--elem", "x1*x2*x1^-1"}).out ==
        "(1, x2)\n");
}

TEST_CASE("rho prints the matrix rows") {
  auto r = run({"rho", "--group", "Z*Z", "--elem", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(x1, 1)") != std::string::npos);
  CHECK(run({"rho", "--group", "Z*Z*Z", "--elem", "x1"}).code == 1);
}

TEST_CASE("braid subcommands") {
  auto r = run({"braid-act", "--strands", "2", "--braid", "s1", "--elem",
                "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1*x2*x1^-1\n");

  r = run({"braid-check", "--strands", "2", "--braid", "s1", "--order",
           "default"});
  CHECK(r.code == 3);
  CHECK(r.out.find("COUNTEREXAMPLE x2 < x1") != std::string::npos);

  r = run({"braid-check", "--strands", "2", "--braid", "s1 s1",
           "--max-syllables", "2", "--exp-bound", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("witness finds a separating element or reports NONE") {
  auto r = run({"witness", "--group", "Z*Z", "--order", "bergman(std,std)",
                "--order", "bergman(rev,std)"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1\n");

  r = run({"witness", "--group", "Z*Z", "--order", "default", "--order",
           "default"});
  CHECK(r.code == 0);
  CHECK(r.out == "NONE\n");
}

TEST_CASE("json output is parseable") {
  auto r = run({"compare", "--group", "Z*Z", "--lhs", "x1", "--rhs", "x2",
                "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"Greater\"") != std::string::npos);
}

TEST_CASE("parse and validation failures exit with code 1") {
  CHECK(run({"compare", "--group", "Z*", "--lhs", "x1", "--rhs", "x2"}).code ==
        1);
  CHECK(run({"compare", "--group", "Z*Z", "--lhs", "x9", "--rhs", "x2"})
            .code == 1);
  CHECK(run({"compare", "--group", "ZxZ", "--order", "veclex[[1,1]]",
             "--lhs", "x1", "--rhs", "x2"})
            .code == 1);
  CHECK(run({"witness", "--group", "Z*Z", "--order", "default"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
}
