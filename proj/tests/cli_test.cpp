#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out; /* stdout and stderr combined */
};

/* Run the CLI through the shell, capturing combined output in a temp file. */
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  std::string tmp = "cli_capture_" + std::to_string(counter++) + ".txt";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += "\"" QSIEVE_CLI "\" " + args + " > " + tmp + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
#ifdef __unix__
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
  r.exit_code = raw;
#endif
  std::ifstream in(tmp, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  std::remove(tmp.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check reports both transitivity ceilings") {
  auto r = run_cli("check 12 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order (12,4): 637 points, 245 lines"));
  CHECK(contains(r.out, "not point-transitive"));
  CHECK(contains(r.out, "lhs 84 > rhs 64"));
  CHECK(contains(r.out, "least fixed-line count 11, interval n 1, family q=4 n=1"));

  auto d = run_cli("check 4 12");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "order (4,12): 245 points, 637 lines"));
  CHECK(contains(d.out, "line transitivity (via dual (12,4)): lhs 84 > rhs 64"));
  CHECK(contains(d.out, "not line-transitive"));
}

TEST_CASE("check rejects degenerate parameters and the csv format") {
  CHECK(run_cli("check 0 4").exit_code == 2);
  CHECK(run_cli("check 12 4 --format csv").exit_code == 2);
}

TEST_CASE("check emits parseable json") {
  auto r = run_cli("check 12 4 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["primal"]["laws"]["feasible"] == true);
  CHECK(j["primal"]["point_transitivity"]["lhs"] == 84);
  CHECK(j["primal"]["point_transitivity"]["rhs"] == 64);
  CHECK(j["primal"]["point_transitivity"]["verdict"] == "not point-transitive");
  CHECK(j["primal"]["point_transitivity"]["interval_n"] == 1);
  CHECK(j["primal"]["point_transitivity"]["family"]["q"] == 4);
  CHECK(j["dual"]["line_transitivity"]["verdict"] == "not line-transitive");
  CHECK(j["dual"]["point_transitivity"]["hypotheses_met"] == false);
}

TEST_CASE("scan csv output is exact") {
  auto r = run_cli("scan --t-max 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6,3,1,30,27\n12,4,1,84,64\n");
}

TEST_CASE("scan text output summarizes the row count") {
  auto r = run_cli("scan --t-max 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "4 excluded orders"));
  CHECK(contains(r.out, "***"));
}

TEST_CASE("scan json output parses and keeps untagged rows null") {
  auto r = run_cli("scan --t-max 6 --format json");
  REQUIRE(r.exit_code == 0);
  auto arr = nlohmann::ordered_json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 4);
  CHECK(arr[0]["s"] == 6);
  CHECK(arr[0]["family_n"] == 1);
  CHECK(arr[2]["s"] == 22);
  CHECK(arr[2]["family_n"].is_null());
  CHECK(arr[3]["lhs"] == 330);
  CHECK(arr[3]["rhs"] == 216);
}

TEST_CASE("scan rejects a trivial range") {
  CHECK(run_cli("scan --t-max 1").exit_code == 2);
}

TEST_CASE("raw golden comparison reports the documented defects") {
  std::string golden = std::string(QSIEVE_DATA_DIR) + "/reference_table.csv";
  auto r = run_cli("scan --t-max 100 --golden " + golden, "QSIEVE_THREADS=1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "golden comparison: MISMATCH"));
  CHECK(contains(r.out, "missing from golden: (6,3) lhs=30 rhs=27 tag=***"));
  CHECK(contains(r.out, "missing from golden: (2926,77) lhs=336490 rhs=231231"));
  CHECK(contains(r.out, "tag mismatch: (9900,100) golden stars=2"));
  CHECK(contains(r.out, "tag mismatch: (1900,100) golden stars=3"));
  CHECK(contains(r.out, "duplicate golden row: (4240,80)"));
}

TEST_CASE("normalized golden comparison matches") {
  std::string golden = std::string(QSIEVE_DATA_DIR) + "/reference_table.csv";
  auto r = run_cli("scan --t-max 100 --golden " + golden + " --normalize",
                   "QSIEVE_THREADS=1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "golden comparison: MATCH (237 rows)\n");
}

TEST_CASE("scan output is stable across repeated runs") {
  auto a = run_cli("scan --t-max 30 --format csv");
  auto b = run_cli("scan --t-max 30 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("types prints per-type verdicts and the admissible set") {
  auto r = run_cli("types 4 12 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order (4,12), prime 7"));
  CHECK(contains(r.out, "admissible: T0 (alpha0=0 forced)"));

  auto none = run_cli("types 4 12 11");
  CHECK(none.exit_code == 0);
  CHECK(contains(none.out, "admissible: none"));

  auto t4 = run_cli("types 4 12 3");
  CHECK(t4.exit_code == 0);
  CHECK(contains(t4.out,
                 "subquadrangle candidates: (1,3) (1,6) (1,9) (1,12) (4,3) "
                 "(4,6) (4,9)"));
}

TEST_CASE("types requires a prime order") {
  auto r = run_cli("types 4 12 4");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "error: "));
}

TEST_CASE("types json lists every verdict with a reason") {
  auto r = run_cli("types 4 12 5 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["admissible"] == nlohmann::ordered_json::array({"T1d"}));
  CHECK(j["alpha0_zero_forced"] == true);
  REQUIRE(j["verdicts"].size() == 8);
  for (const auto& v : j["verdicts"]) {
    CHECK(v.contains("tag"));
    CHECK_FALSE(v["reason"].get<std::string>().empty());
  }
}

TEST_CASE("case412 prints the verified chain") {
  auto r = run_cli("case412");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "[ok]    allowed-primes"));
  CHECK(contains(r.out, "[axiom] quasiprimitive-reduction"));
  CHECK(contains(r.out, "Praeger"));
  CHECK(contains(r.out, "Huppert"));
  CHECK(contains(r.out, "Isaacs"));
  CHECK(contains(
      r.out,
      "VERDICT: not point-transitive; not line-transitive (3 axiom steps)"));
}

TEST_CASE("case412 fault injection fails loudly") {
  auto r = run_cli("case412 --readmit-13");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "[FAIL]  allowed-primes"));
  CHECK(contains(r.out, "VERDICT: chain unverified"));
}

TEST_CASE("case412 json is the serialized chain") {
  auto r = run_cli("case412 --format json");
  REQUIRE(r.exit_code == 0);
  auto arr = nlohmann::ordered_json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 10);
  CHECK(arr[9]["status"] == "verified");
}

TEST_CASE("witness verify-all covers the full automorphism groups") {
  auto doily = run_cli("witness --model doily --verify-all");
  CHECK(doily.exit_code == 0);
  CHECK(contains(doily.out, "720/720 automorphisms pass"));

  auto grid = run_cli("witness --model grid --s 2 --verify-all");
  CHECK(grid.exit_code == 0);
  CHECK(contains(grid.out, "72/72 automorphisms pass"));

  auto dual = run_cli("witness --model dual-grid --verify-all");
  CHECK(dual.exit_code == 2);
  CHECK(contains(dual.out, "error: --verify-all supports the doily and grid models"));
}

TEST_CASE("witness verify-all json summary") {
  auto r = run_cli("witness --model doily --verify-all --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["model"] == "doily");
  CHECK(j["axioms_ok"] == true);
  CHECK(j["total"] == 720);
  CHECK(j["passed"] == 720);
  CHECK(j["failures"].empty());
}

TEST_CASE("witness dump emits the model as json") {
  auto r = run_cli("witness --model doily --dump");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["kind"] == "doily");
  CHECK(j["points"].size() == 15);
  CHECK(j["lines"].size() == 15);
}

TEST_CASE("witness default reports axioms") {
  auto r = run_cli("witness");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "model doily: 15 points, 15 lines"));
  CHECK(contains(r.out, "axioms: ok"));

  auto g = run_cli("witness --model grid --s 5");
  CHECK(g.exit_code == 0);
  CHECK(contains(g.out, "model grid: 36 points, 12 lines"));
}

TEST_CASE("witness rejects a degenerate grid") {
  CHECK(run_cli("witness --model grid --s 0").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2, help with 0") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("scan").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);

  auto sub = run_cli("scan --help");
  CHECK(sub.exit_code == 0);
  CHECK(contains(sub.out, "--t-max"));
}
