#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kempe/cli.hpp"

using namespace kempe;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::ofstream f(name);
  f << content;
  return name;
}

}  // namespace

TEST_CASE("count on family pseudo-URLs") {
  Run r = cli({"count", "family://k33"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(cli({"count", "family://theta"}).out == "1\n");
  CHECK(cli({"count", "family://k33", "--method", "raw"}).out == "2\n");
  CHECK(cli({"count", "family://moebius_ladder?k=4"}).out == "1\n");
}

TEST_CASE("classes emits a JSON report, or DOT on request") {
  Run r = cli({"classes", "family://k33"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["k_prime"] == 2);
  CHECK(j["n"] == 3);
  CHECK(j["coloring_count"] == 2);
  CHECK(j["representatives"].size() == 2);
  CHECK(j["graph"].is_string());

  Run dot = cli({"classes", "family://k33", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph kempe {") == 0);
}

TEST_CASE("chains and switch operate on files") {
  write_temp("cli_theta.txt", "vertices 2\nedge 0 1\nedge 0 1\nedge 0 1\n");
  write_temp("cli_coloring.txt", "0 1 2\n");
  Run chains = cli({"chains", "cli_theta.txt", "cli_coloring.txt", "--pair", "0,1"});
  CHECK(chains.code == 0);
  CHECK(chains.out.find("1 chains") == 0);
  CHECK(chains.out.find("chain 0: 0 1 (cycle)") != std::string::npos);

  Run sw = cli({"switch", "cli_theta.txt", "cli_coloring.txt", "--pair", "0,1",
                "--seed", "0"});
  CHECK(sw.code == 0);
  CHECK(sw.out == "1 0 2\n");
}

TEST_CASE("compose and decompose round trip through the CLI") {
  Run composed = cli({"compose", "--op", "h", "family://theta", "family://theta"});
  REQUIRE(composed.code == 0);
  CHECK(composed.out.find("vertices 4") == 0);
  write_temp("cli_tht.txt", composed.out);

  Run tree = cli({"decompose", "cli_tht.txt"});
  REQUIRE(tree.code == 0);
  auto j = nlohmann::json::parse(tree.out);
  CHECK(j["leaf"] == false);
  CHECK(j["children"].size() == 2);
  CHECK(j["children"][0]["leaf"] == true);

  Run y = cli({"compose", "--op", "y", "family://k33", "family://k33"});
  CHECK(y.out.find("vertices 10") == 0);

  Run planned = cli({"compose", "--op", "y", "family://k33", "family://k33",
                     "--plan", "y 0 0 0:0 1:1 2:2"});
  CHECK(planned.code == 0);
  CHECK(planned.out == y.out);
}

TEST_CASE("family and census output") {
  Run pr = cli({"family", "prism", "--k", "4"});
  CHECK(pr.code == 0);
  CHECK(pr.out.find("vertices 8") == 0);
  Run g6 = cli({"family", "k33", "--graph6"});
  CHECK(g6.code == 0);
  CHECK(g6.out == "EFz_\n");  // K33 in the generator's labeling

  write_temp("cli_k33.g6", "EFz_\n");
  Run yp = cli({"family", "y_power_of", "--k", "2", "--base", "cli_k33.g6"});
  CHECK(yp.code == 0);
  CHECK(yp.out.find("vertices 10") == 0);

  Run c = cli({"census", "--max-n", "6"});
  CHECK(c.code == 0);
  std::istringstream lines(c.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  CHECK(count == 3);

  Run guard = cli({"census", "--max-n", "16"});
  CHECK(guard.code == 2);
}

TEST_CASE("verify subcommands succeed on theorem instances") {
  Run mult = cli({"verify", "multiplicativity", "family://k33", "family://k33",
                  "--op", "y"});
  CHECK(mult.code == 0);
  CHECK(mult.out.find("K'(composed)=4") != std::string::npos);

  CHECK(cli({"verify", "parity", "family://prism?k=3"}).code == 0);
  CHECK(cli({"verify", "fix", "family://k33", "--trials", "5"}).code == 0);
  CHECK(cli({"verify", "families", "--max-k", "4"}).code == 0);
}

TEST_CASE("spectrum JSON") {
  Run r = cli({"spectrum", "--max-n", "6"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["max_n"] == 6);
  REQUIRE(j["spectrum"].size() == 2);
  CHECK(j["spectrum"][0]["k_prime"] == 1);
  CHECK(j["spectrum"][1]["k_prime"] == 2);
}

TEST_CASE("usage and format errors exit with code 2") {
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"count"}).code == 2);                       // missing graph
  CHECK(cli({"count", "missing_file.txt"}).code == 2);   // unreadable
  CHECK(cli({"count", "family://nope"}).code == 2);      // unknown family
  write_temp("cli_bad.txt", "vertices 2\nedge 0 0\n");
  CHECK(cli({"count", "cli_bad.txt"}).code == 2);        // loop rejected
  write_temp("cli_p2.txt", "vertices 2\nedge 0 1\n");
  Run sw = cli({"switch", "cli_theta.txt", "cli_coloring.txt", "--pair", "0,0",
                "--seed", "0"});
  CHECK(sw.code == 2);                                   // bad pair
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("deterministic output: same invocation, same bytes") {
  Run a = cli({"classes", "family://prism?k=4"});
  Run b = cli({"classes", "family://prism?k=4"});
  CHECK(a.out == b.out);
}
