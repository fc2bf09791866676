#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsieve/obstruction.hpp"

namespace qsieve {

/* Axiom marks a group-theoretic input taken from the literature and not
 * recomputed; Inconclusive appears only in the generic chain, where the
 * special-cased group theory is unavailable. */
enum class StepStatus { Verified, Failed, Axiom, Inconclusive };

const char* to_string(StepStatus s);

struct DeductionStep {
  std::string name;
  std::string claim;
  StepStatus status = StepStatus::Failed;
  nlohmann::ordered_json evidence; /* residues, bounds, divisor splits */
};

/* Prime element orders surviving both eliminations for a hypothetical
 * order-(4,12) quadrangle: starts from prime_order_bound, removes 13 via
 * the dual ceiling comparison, removes 11 because no fixed-substructure
 * type is admissible.  Returns {2,3,5,7}. */
std::set<Nat> allowed_primes_412();

/* With alpha0 = 0 forced for element orders 7 and 5, those Sylow subgroups
 * act semiregularly on the 245 points, so their orders divide 245 = 5*7^2:
 * returns (49, 5). */
std::pair<Nat, Nat> semiregular_sylow_bounds();

/* Factorizations 245 = k*m with both factors proper: (5,49), (7,35),
 * (35,7), (49,5) as (orbit_count, orbit_size). */
std::vector<std::pair<Nat, Nat>> orbit_case_analysis();

/* alpha1 of a hypothetical order-35 element is 0 mod 35 (its fifth and
 * seventh powers act semiregularly) and st+1 mod s+t = 1 mod 16 (counting
 * residue with alpha0 = 0); the combined residue 385 mod 560 exceeds the
 * 245 available points. */
DeductionStep order35_contradiction();

struct Chain412Options {
  bool readmit_13 = false; /* fault injection: skip the order-13 elimination */
};

/* The deduction chain for a hypothetical order-(4,12) quadrangle with a
 * point- or line-transitive automorphism group.  Every computational step
 * recomputes its own evidence; exactly three group-theoretic inputs are
 * flagged Axiom with literature citations and never computed. */
std::vector<DeductionStep> run_412_chain(const Chain412Options& opt = {});

/* True iff no step is Failed or Inconclusive (Axiom steps are accepted). */
bool chain_verified(const std::vector<DeductionStep>& chain);

/* Number of Axiom-flagged steps. */
Nat chain_axiom_count(const std::vector<DeductionStep>& chain);

/* JSON array of {name, claim, status, evidence}. */
std::string chain_to_json(const std::vector<DeductionStep>& chain);

/* Generic computable sub-steps for any order: prime bound, both ceiling
 * comparisons, per-prime admissibility; ends Inconclusive where the
 * special-cased group theory would be needed. */
std::vector<DeductionStep> transitivity_chain(GqOrder o);

} // namespace qsieve
