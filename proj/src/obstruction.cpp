#include "qsieve/obstruction.hpp"

#include <stdexcept>
#include <string>

namespace qsieve {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NoConstraint: return "no constraint";
    case Verdict::NotPointTransitive: return "not point-transitive";
    case Verdict::NotLineTransitive: return "not line-transitive";
  }
  return "?";
}

namespace {

void require_hypotheses(GqOrder o, const char* who) {
  if (!o.thick())
    throw std::invalid_argument(std::string(who) + ": order must be thick");
  if (!(o.s > o.t))
    throw std::invalid_argument(std::string(who) + ": need s > t");
  if (!is_prime(o.s + 1))
    throw std::invalid_argument(std::string(who) + ": need s+1 prime");
}

} // namespace

Inequality main_inequality(GqOrder o) {
  require_hypotheses(o, "main_inequality");
  Nat t2 = checked_mul(o.t, o.t);
  Nat rounded = checked_mul(ceil_div(t2, o.s + 1), o.s + 1); /* >= t^2 */
  Inequality r;
  r.lhs = checked_mul(o.s, ceil_div(rounded, o.t));
  r.rhs = checked_mul(o.t, checked_add(o.s, o.t));
  r.holds = r.lhs <= r.rhs;
  return r;
}

Nat beta0_lower_bound(GqOrder o) {
  require_hypotheses(o, "beta0_lower_bound");
  Nat t2 = checked_mul(o.t, o.t);
  Nat rounded = checked_mul(ceil_div(t2, o.s + 1), o.s + 1);
  return rounded - (t2 - 1);
}

std::optional<FamilyTag> family_tag(GqOrder o) {
  const Nat q = o.t;
  if (!is_prime(checked_add(o.s, 1))) return std::nullopt;
  Nat q2 = checked_mul(q, q);
  if (o.s >= q2) return std::nullopt;
  if ((q2 - o.s) % q != 0) return std::nullopt;
  Nat n = (q2 - o.s) / q;
  if (n < 1 || n > (q - 1) / 2) return std::nullopt; /* need 2n < q */
  return FamilyTag{q, n};
}

std::optional<Nat> interval_criterion_n(GqOrder o) {
  if (!o.thick())
    throw std::invalid_argument("interval_criterion_n: order must be thick");
  if (!is_prime(checked_add(o.s, 1)))
    throw std::invalid_argument("interval_criterion_n: need s+1 prime");
  Wide t2 = wide_mul(o.t, o.t);
  for (Nat n = 1; static_cast<Wide>(n) <= t2; ++n) {
    if (wide_mul(o.s + 1, n) >= t2) break; /* fails for every larger n too */
    Wide lhs = t2 + wide_mul(o.t, n + 1);
    Wide rhs = wide_mul(o.s + 1, n + 1);
    if (lhs <= rhs) return n;
  }
  return std::nullopt;
}

ObstructionReport check_point_transitivity(GqOrder o) {
  ObstructionReport r{o, false, 0, 0, true, 0, std::nullopt, std::nullopt,
                      Verdict::NoConstraint};
  if (!(o.thick() && o.s > o.t && is_prime(checked_add(o.s, 1)))) return r;
  r.hypotheses_met = true;
  Inequality ineq = main_inequality(o);
  r.lhs = ineq.lhs;
  r.rhs = ineq.rhs;
  r.inequality_holds = ineq.holds;
  r.beta0_min = beta0_lower_bound(o);
  r.interval_n = interval_criterion_n(o);
  r.family = family_tag(o);
  r.verdict = ineq.holds ? Verdict::NoConstraint : Verdict::NotPointTransitive;
  return r;
}

ObstructionReport check_line_transitivity(GqOrder o) {
  ObstructionReport r = check_point_transitivity(o.dual());
  if (r.verdict == Verdict::NotPointTransitive)
    r.verdict = Verdict::NotLineTransitive;
  return r;
}

} // namespace qsieve
