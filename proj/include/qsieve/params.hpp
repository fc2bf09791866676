#pragma once

/*
 * Generalized-quadrangle orders and the classical feasibility laws:
 * element counts, the (s+t) divisibility law, the square inequalities
 * t <= s^2 / s <= t^2, and the refined interval bound s <= t^2 - t for
 * 1 < s < t^2 (and its dual).  Only arithmetic feasibility is modeled
 * here; no table of known quadrangles is consulted.
 */

#include "qsieve/exactmath.hpp"

namespace qsieve {

struct GqOrder {
  Nat s, t;
  GqOrder(Nat s_, Nat t_);            /* throws unless s >= 1 and t >= 1 */
  bool thick() const { return s > 1 && t > 1; }
  GqOrder dual() const { return GqOrder(t, s); }
  friend bool operator==(const GqOrder&, const GqOrder&) = default;
};

/* (s+1)(st+1) and (t+1)(st+1); overflow is an error. */
Nat point_count(GqOrder o);
Nat line_count(GqOrder o);

struct BasicLawReport {
  GqOrder order;
  Nat points = 0, lines = 0;
  bool divisibility_ok = false; /* s+t | st(s+1)(t+1)                   */
  bool higman_ok = false;       /* t <= s^2 and s <= t^2 (thick only)   */
  bool interval_ok = false;     /* 1 < s < t^2 => s <= t^2 - t, dually  */
  bool feasible = false;        /* conjunction of the three             */
};

/* Thin orders skip the square/interval laws (reported true). */
BasicLawReport basic_laws(GqOrder o);

/* For disjoint pairwise-noncollinear point sets X (|X| = m) inside the
 * perp of Y (|Y| = n, pairwise noncollinear): (m-1)(n-1) <= s^2, or
 * <= t^2 for the dual (line-side) form.  Requires m, n >= 1 and s > 1
 * (dual: t > 1). */
bool payne_bound_ok(Nat m, Nat n, GqOrder o, bool dual_side);

} // namespace qsieve
