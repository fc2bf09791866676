#pragma once

#include <optional>

#include "qsieve/params.hpp"

namespace qsieve {

/* Result of the transitivity ceiling comparison: holds means lhs <= rhs,
 * i.e. the order survives the test. */
struct Inequality {
  Nat lhs = 0;
  Nat rhs = 0;
  bool holds = true;
};

/* Ceiling comparison for a thick order with s > t and s+1 prime:
 * lhs = s * ceil(ceil(t^2/(s+1)) * (s+1) / t), rhs = t*(s+t).
 * Throws std::invalid_argument naming the violated hypothesis. */
Inequality main_inequality(GqOrder o);

/* Least admissible fixed-line count behind the ceiling comparison:
 * ceil(t^2/(s+1))*(s+1) - (t^2 - 1).  Same hypotheses as main_inequality;
 * the value is always >= 1. */
Nat beta0_lower_bound(GqOrder o);

enum class Verdict { NoConstraint, NotPointTransitive, NotLineTransitive };

const char* to_string(Verdict v);

/* Orders of the shape s = q^2 - nq, t = q with n >= 1, 2n < q and s+1
 * prime. */
struct FamilyTag {
  Nat q = 0;
  Nat n = 0;
  bool operator==(const FamilyTag&) const = default;
};

std::optional<FamilyTag> family_tag(GqOrder o);

/* The unique n in [1, t^2] with t^2 + t(n+1) <= (s+1)(n+1) and
 * (s+1)n < t^2, when one exists.  Requires a thick order with s+1 prime. */
std::optional<Nat> interval_criterion_n(GqOrder o);

struct ObstructionReport {
  GqOrder order;
  bool hypotheses_met = false; /* thick, s > t, s+1 prime */
  Nat lhs = 0;
  Nat rhs = 0;
  bool inequality_holds = true; /* vacuously true when hypotheses fail */
  Nat beta0_min = 0;
  std::optional<Nat> interval_n;
  std::optional<FamilyTag> family;
  Verdict verdict = Verdict::NoConstraint;
};

/* Applies the ceiling test to o itself; a failed comparison rules out a
 * point-transitive automorphism group of o.  When the hypotheses do not
 * apply the report carries zeros and NoConstraint. */
ObstructionReport check_point_transitivity(GqOrder o);

/* Same test on the dual order; a failed comparison there rules out a
 * line-transitive group on o.  The report's order field is o's dual. */
ObstructionReport check_line_transitivity(GqOrder o);

} // namespace qsieve
