/* Acceptance harness: one PASS/FAIL line per criterion, exit 0 iff all pass. */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

#include "qsieve/autlaws.hpp"
#include "qsieve/case412.hpp"
#include "qsieve/exactmath.hpp"
#include "qsieve/obstruction.hpp"
#include "qsieve/params.hpp"
#include "qsieve/scan.hpp"
#include "qsieve/witness.hpp"

using namespace qsieve;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& cmd_base) {
  const char* tmp = "acceptance_capture.txt";
  std::string cmd = cmd_base + " > " + tmp + " 2>&1";
  int raw = std::system(cmd.c_str());
  CmdResult r;
#ifdef __unix__
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
  r.exit_code = raw;
#endif
  std::ifstream in(tmp, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  std::remove(tmp);
  return r;
}

/* ---- criterion 1: the published exclusion table reproduces ---- */

void criterion_reference_list(Outcome& o) {
  std::string cmd = "QSIEVE_THREADS=1 \"" QSIEVE_CLI "\" scan --t-max 100"
                    " --golden \"" QSIEVE_DATA_DIR "/reference_table.csv\""
                    " --normalize";
  auto start = Clock::now();
  CmdResult r = run_cmd(cmd);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                  start)
                .count();
  o.expect(r.exit_code == 0,
           "CLI exited " + std::to_string(r.exit_code) + ": " + r.out);
  o.expect(r.out == "golden comparison: MATCH (237 rows)\n",
           "unexpected output: " + r.out);
  o.expect(ms < 10000,
           "single-threaded scan took " + std::to_string(ms) + " ms");
}

/* ---- criterion 2: spot values on named orders ---- */

void criterion_spot_values(Outcome& o) {
  auto rows = scan(100);
  auto find = [&rows](Nat s, Nat t) -> const ScanRow* {
    for (const auto& r : rows)
      if (r.s == s && r.t == t) return &r;
    return nullptr;
  };

  const ScanRow* r124 = find(12, 4);
  o.expect(r124 != nullptr, "(12,4) missing from the scan");
  if (r124) {
    o.expect(r124->family_n && *r124->family_n == 1, "(12,4) family tag != 1");
    o.expect(r124->lhs == 84 && r124->rhs == 64, "(12,4) sides != 84/64");
  }

  const ScanRow* r226 = find(22, 6);
  o.expect(r226 != nullptr, "(22,6) missing from the scan");
  if (r226) o.expect(!r226->family_n, "(22,6) unexpectedly tagged");

  const ScanRow* r306 = find(30, 6);
  o.expect(r306 != nullptr, "(30,6) missing from the scan");
  if (r306) o.expect(r306->family_n.has_value(), "(30,6) missing its tag");

  o.expect(find(16, 4) == nullptr, "(16,4) wrongly excluded");
  Inequality eq = main_inequality(GqOrder(16, 4));
  o.expect(eq.holds && eq.lhs == 80 && eq.rhs == 80,
           "(16,4) boundary case is not the equality 80 = 80");
}

/* ---- criterion 3: the (4,12) deduction chain ---- */

void criterion_case412(Outcome& o) {
  auto start = Clock::now();
  o.expect(allowed_primes_412() == std::set<Nat>{2, 3, 5, 7},
           "prime survivors != {2,3,5,7}");
  auto [b7, b5] = semiregular_sylow_bounds();
  o.expect(b7 == 49 && b5 == 5, "Sylow bounds != (49, 5)");

  ObstructionReport dual = check_line_transitivity(GqOrder(4, 12));
  o.expect(dual.hypotheses_met && dual.lhs == 84 && dual.rhs == 64 &&
               !dual.inequality_holds,
           "dual ceiling sides != 84 vs 64");

  Nat residue = crt_pair(0, 35, 1, 16);
  o.expect(residue == 385, "CRT residue != 385");
  o.expect(residue > point_count(GqOrder(4, 12)),
           "CRT residue does not exceed the 245 points");

  auto chain = run_412_chain();
  o.expect(chain_verified(chain), "chain does not verify");
  o.expect(chain_axiom_count(chain) == 3,
           "axiom steps != 3 (" + std::to_string(chain_axiom_count(chain)) +
               ")");
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                  start)
                .count();
  o.expect(ms < 1000, "chain took " + std::to_string(ms) + " ms");
}

/* ---- criterion 4: exhaustive witness law suite plus negative control ---- */

void criterion_witness(Outcome& o) {
  auto start = Clock::now();
  VerifySummary sum = verify_all_doily();
  o.expect(sum.total == 720,
           "automorphism count != 720 (" + std::to_string(sum.total) + ")");
  o.expect(sum.passed == sum.total,
           std::to_string(sum.total - sum.passed) + " automorphisms fail: " +
               (sum.failures.empty() ? std::string() : sum.failures.front()));

  IncidenceModel bad = corrupt_incidence(build_doily());
  o.expect(!check_gq_axioms(bad).empty(),
           "corrupted model still satisfies the axioms");
  bool threw = false;
  try {
    induced_doily_automorphism(bad, {0, 2, 1, 3, 4, 5});
  } catch (const std::exception&) {
    threw = true;
  }
  o.expect(threw, "corrupted model still induces the symbol swap 1<->2");
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                  start)
                .count();
  o.expect(ms < 5000, "witness suite took " + std::to_string(ms) + " ms");
}

/* ---- criterion 5: independent inequality oracle ---- */

bool naive_prime(Nat n) {
  if (n < 2) return false;
  for (Nat d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/* Brute-force reimplementation with remainder-based ceilings, kept separate
 * from the production nested-ceiling code on purpose. */
struct OracleResult {
  bool hypotheses_met = false;
  Nat lhs = 0, rhs = 0;
  bool holds = false;
};

OracleResult oracle_inequality(Nat s, Nat t) {
  OracleResult r;
  if (s <= 1 || t <= 1 || s <= t || !naive_prime(s + 1)) return r;
  r.hypotheses_met = true;
  auto ceil_q = [](Wide a, Wide b) { return a / b + (a % b != 0 ? 1 : 0); };
  Wide inner = ceil_q(Wide(t) * t, Wide(s) + 1);
  Wide outer = ceil_q(inner * (Wide(s) + 1), Wide(t));
  Wide lhs = Wide(s) * outer;
  Wide rhs = Wide(t) * (Wide(s) + Wide(t));
  r.lhs = static_cast<Nat>(lhs);
  r.rhs = static_cast<Nat>(rhs);
  r.holds = lhs <= rhs;
  return r;
}

void criterion_oracle(Outcome& o) {
  Nat checked = 0;
  for (Nat t = 1; t <= 100; ++t) {
    for (Nat s = 1; s <= t * t; ++s) {
      GqOrder ord(s, t);
      ObstructionReport prod = check_point_transitivity(ord);
      OracleResult ref = oracle_inequality(s, t);
      if (prod.hypotheses_met != ref.hypotheses_met) {
        o.fail("hypothesis disagreement at (" + std::to_string(s) + "," +
               std::to_string(t) + ")");
        return;
      }
      if (ref.hypotheses_met) {
        Inequality eq = main_inequality(ord);
        if (eq.lhs != ref.lhs || eq.rhs != ref.rhs || eq.holds != ref.holds ||
            prod.lhs != ref.lhs || prod.rhs != ref.rhs ||
            prod.inequality_holds != ref.holds) {
          o.fail("value disagreement at (" + std::to_string(s) + "," +
                 std::to_string(t) + ")");
          return;
        }
        ++checked;
      }
    }
  }
  o.expect(checked > 1000, "suspiciously few hypothesis-met pairs: " +
                               std::to_string(checked));
}

/* ---- criterion 6: implication and admissibility sweeps ---- */

void criterion_sweeps(Outcome& o) {
  /* interval criterion => inequality fails; family => inequality fails */
  for (Nat t = 2; t <= 100; ++t) {
    for (Nat s = t + 1; s <= t * t; ++s) {
      if (!is_prime(s + 1)) continue;
      GqOrder ord(s, t);
      Inequality eq = main_inequality(ord);
      if (interval_criterion_n(ord) && eq.holds) {
        o.fail("interval criterion met but inequality holds at (" +
               std::to_string(s) + "," + std::to_string(t) + ")");
        return;
      }
      if (family_tag(ord) && eq.holds) {
        o.fail("family member but inequality holds at (" + std::to_string(s) +
               "," + std::to_string(t) + ")");
        return;
      }
    }
  }

  /* s > t, s+1 prime => the admissible set for p = s+1 is exactly {T1d} */
  for (Nat s = 3; s <= 10000; ++s) {
    if (!is_prime(s + 1)) continue;
    for (Nat t = 2; t < s; ++t) {
      auto adm = type_admissible(GqOrder(s, t), s + 1).admissible();
      if (adm != std::vector<FixedTypeTag>{FixedTypeTag::T1d}) {
        o.fail("admissible set != {T1d} at (" + std::to_string(s) + "," +
               std::to_string(t) + ")");
        return;
      }
    }
  }
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> fn;
  };
  const std::vector<Criterion> criteria{
      {"reference reproduction: normalized golden scan matches, single-threaded"
       " under 10 s",
       criterion_reference_list},
      {"spot values: (12,4) n=1, (22,6) untagged, (30,6) tagged, (16,4) kept"
       " at 80 = 80",
       criterion_spot_values},
      {"deduction chain: {2,3,5,7}, Sylow (49,5), 84 vs 64, CRT 385 mod 560 >"
       " 245, 3 axioms, under 1 s",
       criterion_case412},
      {"witness laws: 720/720 pass and the corrupted model is caught, under"
       " 5 s",
       criterion_witness},
      {"oracle equivalence: remainder-ceiling reimplementation agrees for all"
       " t <= 100, s <= t^2",
       criterion_oracle},
      {"property sweeps: interval/family imply failure; p = s+1 admits only"
       " T1d up to s = 10^4",
       criterion_sweeps},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    auto start = Clock::now();
    criteria[i].fn(out);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  Clock::now() - start)
                  .count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1
              << ": " << criteria[i].name << " (" << ms << " ms)\n";
    for (const auto& d : out.details) std::cout << "       " << d << "\n";
    if (!out.pass) ++failures;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size()
            << " acceptance criteria pass\n";
  return failures == 0 ? 0 : 1;
}
