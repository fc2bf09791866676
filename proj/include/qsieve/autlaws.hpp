#pragma once

/*
 * Laws obeyed by automorphisms of a generalized quadrangle.
 *
 * For an automorphism x, alpha0/alpha1/alpha2 count points that are
 * fixed / moved to a collinear point / moved to a noncollinear point;
 * beta0/beta1/beta2 are the line-side analogues (fixed / moved to a
 * concurrent line / moved to a nonconcurrent line).
 *
 * The residue law: (t+1)*alpha0 + alpha1 = st+1 (mod s+t).
 * The count relation: (1+t)*alpha0 + alpha1 = (1+s)*beta0 + beta1.
 * For prime-order x, all orbit counts satisfy congruences mod p, and the
 * fixed substructure falls into one of eight shapes (T0..T4 below), each
 * eliminable by an arithmetic condition on (s, t, p).
 */

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsieve/params.hpp"

namespace qsieve {

/* Measured stats are always nonnegative.  Formula-derived stats (see
 * type4_stats) stay exact in Z and may be negative when the shape they
 * describe cannot exist; the sum identities hold in Z either way. */
struct AutStats {
  Int alpha0 = 0, alpha1 = 0, alpha2 = 0;
  Int beta0 = 0, beta1 = 0, beta2 = 0;
  friend bool operator==(const AutStats&, const AutStats&) = default;
};

/* (t+1)*alpha0 + alpha1 = st+1 (mod s+t). */
bool benson_residue(GqOrder o, Int alpha0, Int alpha1);

/* (1+t)*alpha0 + alpha1 == (1+s)*beta0 + beta1 (exact, not modular). */
bool count_relation(GqOrder o, const AutStats& st);

struct CensusReport {
  bool alpha0_ok, alpha1_ok, alpha2_ok;
  bool beta0_ok, beta1_ok, beta2_ok;
  bool all_ok;
};

/* Orbit-count congruences mod p for a prime-order automorphism:
 * alpha1 = alpha2 = beta1 = beta2 = 0, alpha0 = (s+1)(st+1),
 * beta0 = (t+1)(st+1) (mod p).  p must be prime. */
CensusReport orbit_census_congruences(GqOrder o, Nat p, const AutStats& st);

/* The eight shapes a fixed substructure can take:
 *   T0  - no fixed point, no fixed line
 *   T1  - fixed points (pairwise noncollinear), no fixed line
 *   T1d - fixed lines (pairwise nonconcurrent), no fixed point
 *   T2  - a fixed point P collinear with every fixed point; >= 1 fixed
 *         line, all through P
 *   T2d - dual of T2
 *   T3  - fixed structure is a grid with side sizes s1 < s2
 *   T3d - dual grid with t1 < t2
 *   T4  - fixed structure is a subquadrangle of order (s', t')       */
enum class FixedTypeTag { T0, T1, T1d, T2, T2d, T3, T3d, T4 };
const char* to_string(FixedTypeTag tag);
constexpr std::array<FixedTypeTag, 8> kAllTypeTags = {
    FixedTypeTag::T0, FixedTypeTag::T1, FixedTypeTag::T1d, FixedTypeTag::T2,
    FixedTypeTag::T2d, FixedTypeTag::T3, FixedTypeTag::T3d, FixedTypeTag::T4};

struct TypeVerdict {
  FixedTypeTag tag;
  bool admissible = false;
  std::string reason; /* the one check that passed or failed */
};

struct SubquadShape {
  Nat s_prime, t_prime;
  friend bool operator==(const SubquadShape&, const SubquadShape&) = default;
};

struct TypeAdmissibility {
  GqOrder order;
  Nat p;
  std::array<TypeVerdict, 8> verdicts; /* indexed in kAllTypeTags order */
  std::vector<SubquadShape> type4_candidates;
  std::vector<FixedTypeTag> admissible() const;
  const TypeVerdict& verdict(FixedTypeTag tag) const;
  /* Every admissible shape has alpha0 == 0 (set nonempty, within {T0, T1d}):
   * order-p elements are then fixed-point-free on points. */
  bool alpha0_zero_forced() const;
};

/* Which of the eight shapes survive the arithmetic eliminations for a
 * prime p on a thick order.  Throws std::invalid_argument otherwise. */
TypeAdmissibility type_admissible(GqOrder o, Nat p);

/* For a T2 configuration: alpha0 = 1 + s*beta0 (mod p);
 * dual (T2d): beta0 = 1 + t*alpha0 (mod p).  p must be prime. */
bool type2_fixed_relation(GqOrder o, Nat p, Int alpha0, Int beta0, bool dual_side);

/* Exact orbit stats forced by a fixed subquadrangle of order (s, t'),
 * 1 <= t' < t.  Evaluated in Z: shapes that cannot exist yield negative
 * entries while both sum identities still hold. */
AutStats type4_stats(GqOrder o, Nat t_prime);

/* Primes p that can divide the order of an automorphism group:
 * p <= max(s+1, t+1) or p | st+1. */
std::set<Nat> prime_order_bound(GqOrder o);

} // namespace qsieve
