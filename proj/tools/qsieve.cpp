#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsieve/autlaws.hpp"
#include "qsieve/case412.hpp"
#include "qsieve/obstruction.hpp"
#include "qsieve/params.hpp"
#include "qsieve/scan.hpp"
#include "qsieve/witness.hpp"

namespace {

using namespace qsieve;
using nlohmann::ordered_json;

std::string order_text(GqOrder o) {
  return "(" + std::to_string(o.s) + "," + std::to_string(o.t) + ")";
}

ordered_json basic_json(const BasicLawReport& r) {
  ordered_json j;
  j["s"] = r.order.s;
  j["t"] = r.order.t;
  j["points"] = r.points;
  j["lines"] = r.lines;
  j["divisibility_ok"] = r.divisibility_ok;
  j["higman_ok"] = r.higman_ok;
  j["interval_ok"] = r.interval_ok;
  j["feasible"] = r.feasible;
  return j;
}

ordered_json obstruction_json(const ObstructionReport& r) {
  ordered_json j;
  j["s"] = r.order.s;
  j["t"] = r.order.t;
  j["hypotheses_met"] = r.hypotheses_met;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["inequality_holds"] = r.inequality_holds;
  j["beta0_min"] = r.beta0_min;
  if (r.interval_n)
    j["interval_n"] = *r.interval_n;
  else
    j["interval_n"] = nullptr;
  if (r.family) {
    j["family"]["q"] = r.family->q;
    j["family"]["n"] = r.family->n;
  } else {
    j["family"] = nullptr;
  }
  j["verdict"] = to_string(r.verdict);
  return j;
}

void basic_text(std::ostream& os, const BasicLawReport& r) {
  auto word = [](bool b) { return b ? "ok" : "VIOLATED"; };
  os << "  divisibility " << word(r.divisibility_ok) << "; upper bounds "
     << word(r.higman_ok) << "; interval " << word(r.interval_ok) << " -> "
     << (r.feasible ? "feasible" : "infeasible") << "\n";
}

void obstruction_text(std::ostream& os, const std::string& label,
                      const ObstructionReport& r) {
  os << "  " << label << ": ";
  if (!r.hypotheses_met) {
    os << "hypotheses not met (needs thick, s > t, s+1 prime)\n";
    return;
  }
  os << "lhs " << r.lhs << (r.inequality_holds ? " <= rhs " : " > rhs ")
     << r.rhs << " -> " << to_string(r.verdict) << "\n";
  os << "    least fixed-line count " << r.beta0_min;
  if (r.interval_n) os << ", interval n " << *r.interval_n;
  if (r.family) os << ", family q=" << r.family->q << " n=" << r.family->n;
  os << "\n";
}

int run_check(Nat s, Nat t, const std::string& fmt) {
  GqOrder o(s, t);
  GqOrder d = o.dual();
  BasicLawReport b = basic_laws(o), bd = basic_laws(d);
  ObstructionReport pt = check_point_transitivity(o);
  ObstructionReport lt = check_line_transitivity(o);
  ObstructionReport ptd = check_point_transitivity(d);
  ObstructionReport ltd = check_line_transitivity(d);
  if (fmt == "json") {
    ordered_json j;
    j["primal"]["laws"] = basic_json(b);
    j["primal"]["point_transitivity"] = obstruction_json(pt);
    j["primal"]["line_transitivity"] = obstruction_json(lt);
    j["dual"]["laws"] = basic_json(bd);
    j["dual"]["point_transitivity"] = obstruction_json(ptd);
    j["dual"]["line_transitivity"] = obstruction_json(ltd);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "order " << order_text(o) << ": " << b.points << " points, "
            << b.lines << " lines\n";
  basic_text(std::cout, b);
  obstruction_text(std::cout, "point transitivity", pt);
  obstruction_text(std::cout,
                   "line transitivity (via dual " + order_text(d) + ")", lt);
  std::cout << "dual order " << order_text(d) << ": " << bd.points
            << " points, " << bd.lines << " lines\n";
  basic_text(std::cout, bd);
  obstruction_text(std::cout, "point transitivity", ptd);
  obstruction_text(std::cout,
                   "line transitivity (via dual " + order_text(o) + ")", ltd);
  return 0;
}

int run_scan(Nat t_max, const std::string& fmt, const std::string& golden,
             bool normalize) {
  auto rows = scan(t_max);
  if (!golden.empty()) {
    DiffReport diff = compare_to_golden(rows, golden, normalize);
    if (diff.empty()) {
      std::cout << "golden comparison: MATCH (" << rows.size() << " rows)\n";
      return 0;
    }
    std::cout << "golden comparison: MISMATCH\n";
    for (const auto& r : diff.missing)
      std::cout << "  missing from golden: (" << r.s << "," << r.t
                << ") lhs=" << r.lhs << " rhs=" << r.rhs
                << (r.family_n ? " tag=***" : "") << "\n";
    for (const auto& g : diff.extra)
      std::cout << "  extra in golden: (" << g.s << "," << g.t
                << ") stars=" << g.stars << "\n";
    for (const auto& g : diff.tag_mismatch)
      std::cout << "  tag mismatch: (" << g.s << "," << g.t
                << ") golden stars=" << g.stars << "\n";
    for (const auto& g : diff.duplicate_golden_rows)
      std::cout << "  duplicate golden row: (" << g.s << "," << g.t << ")\n";
    return 1;
  }
  if (fmt == "csv") {
    std::cout << scan_rows_to_csv(rows);
  } else if (fmt == "json") {
    std::cout << scan_rows_to_json(rows);
  } else {
    std::cout << "     s      t  tag          lhs          rhs\n";
    for (const auto& r : rows)
      std::cout << std::setw(6) << r.s << " " << std::setw(6) << r.t << "  "
                << std::setw(3) << (r.family_n ? "***" : "") << " "
                << std::setw(12) << r.lhs << " " << std::setw(12) << r.rhs
                << "\n";
    std::cout << rows.size() << " excluded orders\n";
  }
  return 0;
}

int run_types(Nat s, Nat t, Nat p, const std::string& fmt) {
  GqOrder o(s, t);
  TypeAdmissibility ta = type_admissible(o, p);
  auto adm = ta.admissible();
  if (fmt == "json") {
    ordered_json j;
    j["s"] = s;
    j["t"] = t;
    j["p"] = p;
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : ta.verdicts) {
      ordered_json vj;
      vj["tag"] = to_string(v.tag);
      vj["admissible"] = v.admissible;
      vj["reason"] = v.reason;
      verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = verdicts;
    ordered_json cand = ordered_json::array();
    for (const auto& c : ta.type4_candidates)
      cand.push_back(ordered_json::array({c.s_prime, c.t_prime}));
    j["subquadrangle_candidates"] = cand;
    ordered_json admj = ordered_json::array();
    for (auto tag : adm) admj.push_back(to_string(tag));
    j["admissible"] = admj;
    j["alpha0_zero_forced"] = ta.alpha0_zero_forced();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "order " << order_text(o) << ", prime " << p << "\n";
  for (const auto& v : ta.verdicts)
    std::cout << "  " << std::setw(3) << to_string(v.tag) << ": "
              << (v.admissible ? "admissible" : "excluded  ") << " (" << v.reason
              << ")\n";
  if (!ta.type4_candidates.empty()) {
    std::cout << "  subquadrangle candidates:";
    for (const auto& c : ta.type4_candidates)
      std::cout << " (" << c.s_prime << "," << c.t_prime << ")";
    std::cout << "\n";
  }
  std::cout << "admissible: ";
  if (adm.empty()) {
    std::cout << "none";
  } else {
    for (std::size_t i = 0; i < adm.size(); ++i)
      std::cout << (i ? ", " : "") << to_string(adm[i]);
  }
  if (ta.alpha0_zero_forced()) std::cout << " (alpha0=0 forced)";
  std::cout << "\n";
  return 0;
}

int run_case412(bool readmit13, const std::string& fmt) {
  auto chain = run_412_chain(Chain412Options{readmit13});
  bool ok = chain_verified(chain);
  if (fmt == "json") {
    std::cout << chain_to_json(chain);
  } else {
    for (const auto& st : chain) {
      const char* mark = st.status == StepStatus::Verified ? "[ok]   "
                         : st.status == StepStatus::Axiom  ? "[axiom]"
                                                           : "[FAIL] ";
      std::cout << mark << " " << st.name << ": " << st.claim;
      if (st.status == StepStatus::Axiom && st.evidence.contains("citation"))
        std::cout << " (" << st.evidence["citation"].get<std::string>() <<
            ")";
      std::cout << "\n";
    }
    if (ok)
      std::cout << "VERDICT: not point-transitive; not line-transitive ("
                << chain_axiom_count(chain) << " axiom steps)\n";
    else
      std::cout << "VERDICT: chain unverified\n";
  }
  return ok ? 0 : 1;
}

int run_witness(const std::string& model, Nat s, bool verify_all, bool dump,
                const std::string& fmt) {
  IncidenceModel m = model == "doily"  ? build_doily()
                     : model == "grid" ? build_grid(s)
                                       : build_dual_grid(s);
  if (dump) {
    std::cout << m.dump_json();
    return 0;
  }
  auto violations = check_gq_axioms(m);
  if (verify_all) {
    if (model == "dual-grid") {
      std::cerr << "error: --verify-all supports the doily and grid models\n";
      return 2;
    }
    VerifySummary sum = model == "doily" ? verify_all_doily()
                                         : verify_all_grid(s);
    bool ok = violations.empty() && sum.passed == sum.total;
    if (fmt == "json") {
      ordered_json j;
      j["model"] = m.kind;
      j["axioms_ok"] = violations.empty();
      j["axiom_violations"] = violations;
      j["total"] = sum.total;
      j["passed"] = sum.passed;
      j["failures"] = sum.failures;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& v : violations)
        std::cout << "axiom violation: " << v << "\n";
      for (const auto& f : sum.failures)
        std::cout << "law violation: " << f << "\n";
      std::cout << sum.passed << "/" << sum.total << " automorphisms pass\n";
    }
    return ok ? 0 : 1;
  }
  if (fmt == "json") {
    ordered_json j;
    j["model"] = m.kind;
    j["points"] = m.num_points();
    j["lines"] = m.num_lines();
    j["axioms_ok"] = violations.empty();
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "model " << m.kind << ": " << m.num_points() << " points, "
              << m.num_lines() << " lines\n";
    for (const auto& v : violations)
      std::cout << "axiom violation: " << v << "\n";
    std::cout << (violations.empty() ? "axioms: ok" : "axioms: VIOLATED")
              << "\n";
  }
  return violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-integer feasibility laws, automorphism obstructions, and small "
      "witness models for generalized quadrangles"};
  app.require_subcommand(1);

  Nat cs = 0, ct = 0;
  std::string fmt_check = "text";
  auto* c_check = app.add_subcommand(
      "check", "Feasibility laws and transitivity ceilings for one order");
  c_check->add_option("s", cs, "points per line minus one")->required();
  c_check->add_option("t", ct, "lines per point minus one")->required();
  c_check->add_option("--format", fmt_check, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  Nat t_max = 0;
  std::string golden;
  bool normalize = false;
  std::string fmt_scan = "text";
  auto* c_scan = app.add_subcommand(
      "scan", "Enumerate every excluded order (s,t) with t <= t-max");
  c_scan->add_option("--t-max", t_max, "largest t to scan")->required();
  auto* gopt =
      c_scan->add_option("--golden", golden, "reference list to compare against");
  c_scan
      ->add_flag("--normalize", normalize,
                 "correct the documented reference-list defects before comparing")
      ->needs(gopt);
  c_scan->add_option("--format", fmt_scan, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  Nat ts = 0, tt = 0, tp = 0;
  std::string fmt_types = "text";
  auto* c_types = app.add_subcommand(
      "types", "Admissible fixed-substructure types for a prime element order");
  c_types->add_option("s", ts, "points per line minus one")->required();
  c_types->add_option("t", tt, "lines per point minus one")->required();
  c_types->add_option("p", tp, "prime element order")->required();
  c_types->add_option("--format", fmt_types, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  bool readmit13 = false;
  std::string fmt_case = "text";
  auto* c_case = app.add_subcommand(
      "case412", "Deduction chain for a hypothetical order-(4,12) quadrangle");
  c_case->add_flag("--readmit-13", readmit13,
                   "fault injection: skip the order-13 elimination");
  c_case->add_option("--format", fmt_case, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string model = "doily";
  Nat ws = 2;
  bool verify_all = false, dump = false;
  std::string fmt_witness = "text";
  auto* c_witness =
      app.add_subcommand("witness", "Build and verify explicit small models");
  c_witness->add_option("--model", model, "which model to build")
      ->check(CLI::IsMember({"doily", "grid", "dual-grid"}));
  c_witness->add_option("--s", ws, "grid side parameter");
  c_witness->add_flag("--verify-all", verify_all,
                      "run every law against every iterated automorphism");
  c_witness->add_flag("--dump", dump, "print the model as JSON");
  c_witness->add_option("--format", fmt_witness, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_check)) return run_check(cs, ct, fmt_check);
    if (app.got_subcommand(c_scan))
      return run_scan(t_max, fmt_scan, golden, normalize);
    if (app.got_subcommand(c_types)) return run_types(ts, tt, tp, fmt_types);
    if (app.got_subcommand(c_case)) return run_case412(readmit13, fmt_case);
    if (app.got_subcommand(c_witness))
      return run_witness(model, ws, verify_all, dump, fmt_witness);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
