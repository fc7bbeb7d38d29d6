#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "frogs/cli.hpp"
#include "frogs/json_io.hpp"

using namespace frogs;

namespace {

struct RunCapture {
  int code;
  std::string out;
  std::string err;
};

RunCapture run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("count subcommand prints the triangle row", "[cli]") {
  RunCapture r = run_cli({"count", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("f(4,2) = 7") != std::string::npos);
  CHECK(r.out.find("f(4,4) = 3") != std::string::npos);
  CHECK(r.err.empty());

  RunCapture csv = run_cli({"count", "--k", "2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "n,m,f");
  CHECK(rows[3] == "4,2,7");
}

TEST_CASE("gamma subcommand prints the exact constant", "[cli]") {
  RunCapture r = run_cli({"gamma", "--k", "2", "--sigma", "2", "--rho", "1"});
  REQUIRE(r.code == 0);
  CHECK(lines_of(r.out).front() == "m=2 equality=false gamma=11/14 ≈ 0.785714");

  RunCapture csv = run_cli({"gamma", "--k", "2", "--sigma", "2", "--rho", "1",
                            "--format", "csv"});
  auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "k,sigma,rho,m,equality,gamma,decimal");
  CHECK(rows[1] == "2,2,1,2,false,11/14,0.785714");

  // rho accepts fractions and decimals
  RunCapture frac = run_cli({"gamma", "--k", "2", "--sigma", "2", "--rho", "5/3"});
  CHECK(frac.out.find("equality=true") != std::string::npos);
  RunCapture dec = run_cli({"gamma", "--k", "2", "--sigma", "2", "--rho", "0.25"});
  CHECK(dec.out.find("m=0") != std::string::npos);
}

TEST_CASE("exact speeds table", "[cli]") {
  RunCapture csv = run_cli({"speeds", "--exact", "--k", "2", "--sigma", "2",
                            "--format", "csv"});
  REQUIRE(csv.code == 0);
  auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "k,sigma,m,speed,decimal");
  CHECK(rows[1] == "2,2,1,1/2,0.500000");
  CHECK(rows[2] == "2,2,2,9/14,0.642857");
  CHECK(rows[3] == "2,2,3,25/21,1.190476");
  CHECK(rows[4] == "2,2,4,5/3,1.666667");
}

TEST_CASE("monte carlo speeds emit the run schema", "[cli]") {
  RunCapture csv = run_cli({"speeds", "--mc", "--k", "2", "--sigma", "2", "--n", "2000",
                            "--format", "csv"});
  REQUIRE(csv.code == 0);
  auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 5);  // header + one row per frog
  CHECK(rows[0] == "run_id,k,sigma,rho,n,samples,statistic,value,stderr,seed");
  CHECK(rows[1].rfind("speeds-zigzag-k2,2,2,,2000,30,cum_rate[1],", 0) == 0);
  CHECK(rows[4].rfind("speeds-zigzag-k2,2,2,,2000,30,cum_rate[4],", 0) == 0);
}

TEST_CASE("enumerated arrangements round-trip through json", "[cli]") {
  RunCapture r = run_cli({"enumerate", "--process", "hatted", "--k", "2", "--m", "2",
                          "--format", "json"});
  REQUIRE(r.code == 0);
  json parsed = json::parse(r.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 7);
  std::set<HattedArrangement> seen;
  for (const json& j : parsed) {
    HattedArrangement a = hatted_from_json(j);
    REQUIRE(hatted_valid(a));
    seen.insert(a);
  }
  auto all = enumerate_hatted(2, 2);
  CHECK(seen == std::set<HattedArrangement>(all.begin(), all.end()));
}

TEST_CASE("crowned and blind enumeration summaries", "[cli]") {
  RunCapture crowned = run_cli({"enumerate", "--process", "crowned", "--k", "2",
                                "--m", "2"});
  REQUIRE(crowned.code == 0);
  CHECK(lines_of(crowned.out).back() == "26 arrangements");

  RunCapture blind = run_cli({"enumerate", "--process", "blind", "--k", "2", "--m", "2"});
  REQUIRE(blind.code == 0);
  CHECK(lines_of(blind.out).size() == 7);  // six pad sets plus the summary
  CHECK(lines_of(blind.out).front() == "{0,1}");
}

TEST_CASE("transition graph edges in csv", "[cli]") {
  RunCapture r = run_cli({"graph", "--process", "hatted", "--k", "2", "--m", "2",
                          "--format", "csv"});
  REQUIRE(r.code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 1 + 7 * 2);
  CHECK(rows[0] == "from,letter,to");
}

TEST_CASE("verification suites report success", "[cli]") {
  RunCapture r = run_cli({"verify", "corner", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  RunCapture fibers = run_cli({"verify", "fibers", "--k", "2"});
  REQUIRE(fibers.code == 0);
}

TEST_CASE("bad invocations exit with usage errors", "[cli]") {
  RunCapture unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());

  RunCapture badwhat = run_cli({"verify", "bogus"});
  CHECK(badwhat.code == 2);

  RunCapture badk = run_cli({"count", "--k", "99"});
  CHECK(badk.code == 2);

  RunCapture help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("output redirects to a file", "[cli]") {
  std::string path = "/tmp/frogs_cli_out_test.csv";
  std::remove(path.c_str());
  RunCapture r = run_cli({"count", "--k", "2", "--format", "csv", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first == "n,m,f");
  in.close();
  std::remove(path.c_str());
}
