#include "qsieve/autlaws.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsieve {

const char* to_string(FixedTypeTag tag) {
  switch (tag) {
    case FixedTypeTag::T0: return "T0";
    case FixedTypeTag::T1: return "T1";
    case FixedTypeTag::T1d: return "T1d";
    case FixedTypeTag::T2: return "T2";
    case FixedTypeTag::T2d: return "T2d";
    case FixedTypeTag::T3: return "T3";
    case FixedTypeTag::T3d: return "T3d";
    case FixedTypeTag::T4: return "T4";
  }
  return "?";
}

bool benson_residue(GqOrder o, Int alpha0, Int alpha1) {
  const Nat m = o.s + o.t;
  Int lhs = static_cast<Int>(o.t + 1) * alpha0 + alpha1;
  Int rhs = static_cast<Int>(o.s * o.t + 1);
  return congruent(lhs, rhs, m);
}

bool count_relation(GqOrder o, const AutStats& st) {
  Int lhs = static_cast<Int>(1 + o.t) * st.alpha0 + st.alpha1;
  Int rhs = static_cast<Int>(1 + o.s) * st.beta0 + st.beta1;
  return lhs == rhs;
}

CensusReport orbit_census_congruences(GqOrder o, Nat p, const AutStats& st) {
  if (!is_prime(p))
    throw std::invalid_argument("orbit_census_congruences: p must be prime");
  CensusReport r{};
  Int pts = static_cast<Int>(point_count(o));
  Int lns = static_cast<Int>(line_count(o));
  r.alpha0_ok = congruent(st.alpha0, pts, p);
  r.alpha1_ok = congruent(st.alpha1, 0, p);
  r.alpha2_ok = congruent(st.alpha2, 0, p);
  r.beta0_ok = congruent(st.beta0, lns, p);
  r.beta1_ok = congruent(st.beta1, 0, p);
  r.beta2_ok = congruent(st.beta2, 0, p);
  r.all_ok = r.alpha0_ok && r.alpha1_ok && r.alpha2_ok && r.beta0_ok &&
             r.beta1_ok && r.beta2_ok;
  return r;
}

std::vector<FixedTypeTag> TypeAdmissibility::admissible() const {
  std::vector<FixedTypeTag> out;
  for (const auto& v : verdicts)
    if (v.admissible) out.push_back(v.tag);
  return out;
}

const TypeVerdict& TypeAdmissibility::verdict(FixedTypeTag tag) const {
  for (const auto& v : verdicts)
    if (v.tag == tag) return v;
  throw std::logic_error("TypeAdmissibility: unknown tag");
}

bool TypeAdmissibility::alpha0_zero_forced() const {
  bool any = false;
  for (const auto& v : verdicts) {
    if (!v.admissible) continue;
    any = true;
    if (v.tag != FixedTypeTag::T0 && v.tag != FixedTypeTag::T1d) return false;
  }
  return any;
}

namespace {

bool div_mod(Nat p, Nat value) { return value % p == 0; }

} // namespace

TypeAdmissibility type_admissible(GqOrder o, Nat p) {
  if (!is_prime(p))
    throw std::invalid_argument("type_admissible: p must be prime");
  if (!o.thick())
    throw std::invalid_argument("type_admissible: order must be thick");

  const Nat s = o.s, t = o.t;
  TypeAdmissibility out{o, p, {}, {}};
  auto& v = out.verdicts;
  for (std::size_t i = 0; i < kAllTypeTags.size(); ++i) v[i].tag = kAllTypeTags[i];

  /* T0: p | s+1 and p | t+1, or p | st+1. */
  {
    bool both = div_mod(p, s + 1) && div_mod(p, t + 1);
    bool prod = div_mod(p, checked_add(checked_mul(s, t), 1));
    v[0].admissible = both || prod;
    v[0].reason = v[0].admissible
                      ? (both ? "p divides both s+1 and t+1" : "p divides st+1")
                      : "p divides neither st+1 nor both of s+1, t+1";
  }

  /* T1: every point orbit off the fixed set has size p, so p | t+1. */
  v[1].admissible = div_mod(p, t + 1);
  v[1].reason = v[1].admissible ? "p divides t+1" : "p does not divide t+1";

  /* T1d: dual of T1. */
  v[2].admissible = div_mod(p, s + 1);
  v[2].reason = v[2].admissible ? "p divides s+1" : "p does not divide s+1";

  /* T2: with one fixed point, s+1 = 1 (mod p); with more, t+1 = 1 (mod p).
   * The two branches are alternatives, so either congruence admits. */
  {
    bool b1 = (s + 1) % p == 1 % p;
    bool b2 = (t + 1) % p == 1 % p;
    v[3].admissible = b1 || b2;
    v[3].reason = v[3].admissible
                      ? (b1 ? "s+1 = 1 (mod p), single-fixed-point branch"
                            : "t+1 = 1 (mod p), multi-fixed-point branch")
                      : "neither s+1 nor t+1 is 1 (mod p)";
  }

  /* T2d: dual branches (beta0 = 1 forces t+1 = 1; beta0 >= 2 forces s+1 = 1). */
  {
    bool b1 = (t + 1) % p == 1 % p;
    bool b2 = (s + 1) % p == 1 % p;
    v[4].admissible = b1 || b2;
    v[4].reason = v[4].admissible
                      ? (b1 ? "t+1 = 1 (mod p), single-fixed-line branch"
                            : "s+1 = 1 (mod p), multi-fixed-line branch")
                      : "neither s+1 nor t+1 is 1 (mod p)";
  }

  /* T3: a fixed grid with sides s1 < s2 <= s, both = s (mod p), s1 >= 1,
   * forces t+1 = 2 (mod p); on a thick order it further forces
   * p < min(s, t).  Given p < s the side pair (s-p, s) always exists. */
  {
    bool cong = (t + 1) % p == 2 % p;
    bool bound = p < s && p < t;
    v[5].admissible = cong && bound;
    v[5].reason = !cong ? "t+1 is not 2 (mod p)"
                 : !bound ? "thick grid shape needs p < min(s, t)"
                          : "t+1 = 2 (mod p) and p < min(s, t)";
  }

  /* T3d: dual of T3. */
  {
    bool cong = (s + 1) % p == 2 % p;
    bool bound = p < s && p < t;
    v[6].admissible = cong && bound;
    v[6].reason = !cong ? "s+1 is not 2 (mod p)"
                 : !bound ? "thick dual-grid shape needs p < min(s, t)"
                          : "s+1 = 2 (mod p) and p < min(s, t)";
  }

  /* T4: a proper fixed subquadrangle of order (s', t') with s' = s and
   * t' = t (mod p), 1 <= s' <= s, 1 <= t' <= t, (s', t') != (s, t).
   * When p >= s the subquadrangle keeps every line full (s' = s), t' < t,
   * and s+t must divide s*t'*(st+1); candidates are enumerated.  When
   * p < s only the congruence existence is required. */
  {
    if (p >= s) {
      Nat st1 = checked_add(checked_mul(s, t), 1);
      for (Nat tp = t; tp > p;) {
        tp -= p;
        /* tp = t (mod p), 1 <= tp < t */
        if (divides(s + t, wide_mul(s, tp) * st1))
          out.type4_candidates.push_back({s, tp});
      }
      std::reverse(out.type4_candidates.begin(), out.type4_candidates.end());
      v[7].admissible = !out.type4_candidates.empty();
      v[7].reason = v[7].admissible
                        ? "a full-line subquadrangle order survives the s+t divisibility"
                        : "no t' < t with t' = t (mod p) and s+t | s*t'*(st+1)";
    } else {
      /* s' = s - p >= 1 with t' = t always qualifies. */
      v[7].admissible = true;
      v[7].reason = "p < s, so a smaller congruent order pair exists";
      for (Nat sp = s; sp >= 1; sp = (sp > p ? sp - p : 0)) {
        for (Nat tp = t; tp >= 1; tp = (tp > p ? tp - p : 0)) {
          if (!(sp == s && tp == t)) out.type4_candidates.push_back({sp, tp});
          if (tp <= p) break;
        }
        if (sp <= p) break;
      }
      std::sort(out.type4_candidates.begin(), out.type4_candidates.end(),
                [](const SubquadShape& a, const SubquadShape& b) {
                  return a.s_prime != b.s_prime ? a.s_prime < b.s_prime
                                                : a.t_prime < b.t_prime;
                });
    }
  }

  return out;
}

bool type2_fixed_relation(GqOrder o, Nat p, Int alpha0, Int beta0, bool dual_side) {
  if (!is_prime(p))
    throw std::invalid_argument("type2_fixed_relation: p must be prime");
  if (dual_side)
    return congruent(beta0, 1 + static_cast<Int>(o.t) * alpha0, p);
  return congruent(alpha0, 1 + static_cast<Int>(o.s) * beta0, p);
}

AutStats type4_stats(GqOrder o, Nat t_prime) {
  if (t_prime < 1 || t_prime >= o.t)
    throw std::invalid_argument("type4_stats: need 1 <= t' < t");
  const Int s = static_cast<Int>(o.s), t = static_cast<Int>(o.t),
            tp = static_cast<Int>(t_prime);
  AutStats r;
  Int stp1 = s * tp + 1;
  r.alpha0 = (s + 1) * stp1;
  r.alpha1 = 0;
  r.alpha2 = s * (s + 1) * (t - tp);
  r.beta0 = (tp + 1) * stp1;
  r.beta1 = (t - tp) * (s + 1) * stp1;
  r.beta2 = (t + 1) * (s * t + 1) - (t * (s + 1) - s * tp + 1) * stp1;
  return r;
}

std::set<Nat> prime_order_bound(GqOrder o) {
  Nat cap = std::max(o.s + 1, o.t + 1);
  std::set<Nat> out;
  for (Nat p : primes_up_to(cap)) out.insert(p);
  for (Nat p : prime_factors(checked_add(checked_mul(o.s, o.t), 1))) out.insert(p);
  return out;
}

} // namespace qsieve
