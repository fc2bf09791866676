#include "qsieve/params.hpp"

#include <stdexcept>

namespace qsieve {

GqOrder::GqOrder(Nat s_, Nat t_) : s(s_), t(t_) {
  if (s == 0 || t == 0)
    throw std::invalid_argument("GqOrder: both parameters must be >= 1");
}

Nat point_count(GqOrder o) {
  return checked_mul(o.s + 1, checked_add(checked_mul(o.s, o.t), 1));
}

Nat line_count(GqOrder o) {
  return checked_mul(o.t + 1, checked_add(checked_mul(o.s, o.t), 1));
}

BasicLawReport basic_laws(GqOrder o) {
  BasicLawReport r{o};
  const Nat s = o.s, t = o.t;
  r.points = point_count(o);
  r.lines = line_count(o);

  /* s+t | st(s+1)(t+1); the product is taken wide before reduction. */
  Wide prod = wide_mul(s, t) * (s + 1) * (t + 1);
  r.divisibility_ok = divides(s + t, prod);

  if (!o.thick()) {
    r.higman_ok = true;
    r.interval_ok = true;
  } else {
    r.higman_ok = wide_mul(s, s) >= t && wide_mul(t, t) >= s;
    bool iv_point = true, iv_line = true;
    if (s > 1 && wide_mul(t, t) > s) iv_point = wide_mul(t, t) - t >= s;
    if (t > 1 && wide_mul(s, s) > t) iv_line = wide_mul(s, s) - s >= t;
    r.interval_ok = iv_point && iv_line;
  }
  r.feasible = r.divisibility_ok && r.higman_ok && r.interval_ok;
  return r;
}

bool payne_bound_ok(Nat m, Nat n, GqOrder o, bool dual_side) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("payne_bound_ok: set sizes must be >= 1");
  Nat side = dual_side ? o.t : o.s;
  if (side <= 1)
    throw std::invalid_argument(dual_side ? "payne_bound_ok: dual form requires t > 1"
                                          : "payne_bound_ok: requires s > 1");
  return wide_mul(m - 1, n - 1) <= wide_mul(side, side);
}

} // namespace qsieve
