#include "qsieve/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace qsieve {

bool IncidenceModel::on_line(Nat p, Nat l) const {
  const auto& v = lines[l];
  return std::binary_search(v.begin(), v.end(), p);
}

bool IncidenceModel::collinear(Nat p, Nat q) const {
  if (p == q) return true;
  for (Nat l : lines_of_point[p])
    if (on_line(q, l)) return true;
  return false;
}

bool IncidenceModel::concurrent(Nat l, Nat m) const {
  if (l == m) return true;
  const auto& a = lines[l];
  const auto& b = lines[m];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

std::optional<Nat> IncidenceModel::line_through(Nat p, Nat q) const {
  if (p == q) return std::nullopt;
  for (Nat l : lines_of_point[p])
    if (on_line(q, l)) return l;
  return std::nullopt;
}

std::string IncidenceModel::dump_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["order"]["s"] = order.s;
  j["order"]["t"] = order.t;
  j["points"] = point_names;
  j["line_names"] = line_names;
  j["lines"] = lines;
  return j.dump(2) + "\n";
}

namespace {

void finalize(IncidenceModel& m) {
  for (auto& l : m.lines) std::sort(l.begin(), l.end());
  m.lines_of_point.assign(m.point_names.size(), {});
  for (Nat l = 0; l < m.lines.size(); ++l)
    for (Nat p : m.lines[l]) {
      if (p >= m.point_names.size())
        throw std::logic_error("model construction: point index out of range");
      m.lines_of_point[p].push_back(l);
    }
}

} // namespace

IncidenceModel build_grid(Nat s) {
  if (s < 1) throw std::invalid_argument("build_grid: need s >= 1");
  IncidenceModel m{"grid", GqOrder(s, 1), {}, {}, {}, {}};
  const Nat n = s + 1;
  for (Nat i = 0; i < n; ++i)
    for (Nat j = 0; j < n; ++j)
      m.point_names.push_back("(" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
  for (Nat i = 0; i < n; ++i) {
    std::vector<Nat> row;
    for (Nat j = 0; j < n; ++j) row.push_back(i * n + j);
    m.lines.push_back(std::move(row));
    m.line_names.push_back("row " + std::to_string(i));
  }
  for (Nat j = 0; j < n; ++j) {
    std::vector<Nat> col;
    for (Nat i = 0; i < n; ++i) col.push_back(i * n + j);
    m.lines.push_back(std::move(col));
    m.line_names.push_back("col " + std::to_string(j));
  }
  finalize(m);
  return m;
}

IncidenceModel dualize(const IncidenceModel& m) {
  IncidenceModel d{"dual:" + m.kind, m.order.dual(),
                   m.line_names,     m.point_names,
                   m.lines_of_point, {}};
  finalize(d);
  return d;
}

IncidenceModel build_dual_grid(Nat t) {
  if (t < 1) throw std::invalid_argument("build_dual_grid: need t >= 1");
  IncidenceModel d = dualize(build_grid(t));
  d.kind = "dual-grid";
  return d;
}

IncidenceModel build_doily() {
  IncidenceModel m{"doily", GqOrder(2, 2), {}, {}, {}, {}};
  Nat idx[6][6] = {};
  Nat next = 0;
  for (Nat a = 0; a < 6; ++a)
    for (Nat b = a + 1; b < 6; ++b) {
      idx[a][b] = next++;
      m.point_names.push_back("{" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
    }
  auto duad = [&](Nat a, Nat b) { return a < b ? idx[a][b] : idx[b][a]; };
  /* Every syntheme holds exactly one duad through symbol 0; enumerate by
   * that duad's partner x and the pairing of the remaining four symbols. */
  for (Nat x = 1; x <= 5; ++x) {
    std::vector<Nat> rest;
    for (Nat c = 1; c <= 5; ++c)
      if (c != x) rest.push_back(c);
    const Nat r0 = rest[0], r1 = rest[1], r2 = rest[2], r3 = rest[3];
    const Nat pair[3][4] = {
        {r0, r1, r2, r3}, {r0, r2, r1, r3}, {r0, r3, r1, r2}};
    for (const auto& pr : pair) {
      m.lines.push_back({duad(0, x), duad(pr[0], pr[1]), duad(pr[2], pr[3])});
      m.line_names.push_back("{0," + std::to_string(x) + "}|{" +
                             std::to_string(pr[0]) + "," +
                             std::to_string(pr[1]) + "}|{" +
                             std::to_string(pr[2]) + "," +
                             std::to_string(pr[3]) + "}");
    }
  }
  finalize(m);
  return m;
}

IncidenceModel corrupt_incidence(const IncidenceModel& m) {
  IncidenceModel c = m;
  c.kind = "corrupted:" + m.kind;
  auto& l0 = c.lines.at(0);
  auto it = std::find(l0.begin(), l0.end(), Nat{0});
  if (it != l0.end())
    l0.erase(it);
  else
    l0.insert(l0.begin(), 0);
  finalize(c);
  return c;
}

std::vector<std::string> check_gq_axioms(const IncidenceModel& m) {
  std::vector<std::string> bad;
  const Nat s = m.order.s, t = m.order.t;
  const Nat P = m.num_points(), L = m.num_lines();
  if (P != point_count(m.order))
    bad.push_back("point total " + std::to_string(P) + " != expected " +
                  std::to_string(point_count(m.order)));
  if (L != line_count(m.order))
    bad.push_back("line total " + std::to_string(L) + " != expected " +
                  std::to_string(line_count(m.order)));
  for (Nat l = 0; l < L; ++l) {
    const auto& v = m.lines[l];
    bool clean = std::is_sorted(v.begin(), v.end()) &&
                 std::adjacent_find(v.begin(), v.end()) == v.end() &&
                 (v.empty() || v.back() < P);
    if (!clean)
      bad.push_back("line " + std::to_string(l) +
                    " has unsorted, repeated, or out-of-range points");
    if (v.size() != s + 1)
      bad.push_back("line " + std::to_string(l) + " has " +
                    std::to_string(v.size()) + " points, expected " +
                    std::to_string(s + 1));
  }
  for (Nat p = 0; p < P && p < m.lines_of_point.size(); ++p)
    if (m.lines_of_point[p].size() != t + 1)
      bad.push_back("point " + std::to_string(p) + " lies on " +
                    std::to_string(m.lines_of_point[p].size()) +
                    " lines, expected " + std::to_string(t + 1));
  for (Nat l = 0; l < L; ++l)
    for (Nat k = l + 1; k < L; ++k) {
      const auto& a = m.lines[l];
      const auto& b = m.lines[k];
      std::size_t i = 0, j = 0;
      Nat common = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) ++common, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
      }
      if (common >= 2)
        bad.push_back("lines " + std::to_string(l) + " and " +
                      std::to_string(k) + " share " + std::to_string(common) +
                      " points");
    }
  /* Unique-flag axiom: a non-incident point-line pair admits exactly one
   * joining flag. */
  for (Nat p = 0; p < P; ++p)
    for (Nat l = 0; l < L; ++l) {
      if (m.on_line(p, l)) continue;
      Nat cnt = 0;
      for (Nat q : m.lines[l])
        if (m.collinear(p, q)) ++cnt;
      if (cnt != 1)
        bad.push_back("point " + std::to_string(p) + " off line " +
                      std::to_string(l) + " sees " + std::to_string(cnt) +
                      " joining flags, expected 1");
    }
  return bad;
}

Automorphism automorphism_from_point_map(const IncidenceModel& m,
                                         const std::vector<Nat>& point_map) {
  const Nat P = m.num_points();
  if (point_map.size() != P)
    throw std::invalid_argument("automorphism: point map size mismatch");
  std::vector<char> seen(P, 0);
  for (Nat v : point_map) {
    if (v >= P || seen[v])
      throw std::invalid_argument("automorphism: point map is not a permutation");
    seen[v] = 1;
  }
  std::map<std::vector<Nat>, Nat> line_index;
  for (Nat l = 0; l < m.num_lines(); ++l) line_index.emplace(m.lines[l], l);
  Automorphism a;
  a.point_map = point_map;
  a.line_map.resize(m.num_lines());
  std::vector<char> hit(m.num_lines(), 0);
  for (Nat l = 0; l < m.num_lines(); ++l) {
    std::vector<Nat> img;
    img.reserve(m.lines[l].size());
    for (Nat p : m.lines[l]) img.push_back(point_map[p]);
    std::sort(img.begin(), img.end());
    auto it = line_index.find(img);
    if (it == line_index.end() || hit[it->second])
      throw std::invalid_argument(
          "automorphism: point map does not preserve incidence (line " +
          std::to_string(l) + ")");
    hit[it->second] = 1;
    a.line_map[l] = it->second;
  }
  return a;
}

Automorphism induced_doily_automorphism(const IncidenceModel& m,
                                        const std::array<Nat, 6>& sigma) {
  std::array<char, 6> seen{};
  for (Nat v : sigma) {
    if (v >= 6 || seen[v])
      throw std::invalid_argument(
          "doily automorphism: not a permutation of the six symbols");
    seen[v] = 1;
  }
  if (m.num_points() != 15 || m.num_lines() != 15)
    throw std::invalid_argument("doily automorphism: unexpected model shape");
  Nat idx[6][6] = {};
  Nat next = 0;
  for (Nat a = 0; a < 6; ++a)
    for (Nat b = a + 1; b < 6; ++b) idx[a][b] = next++;
  auto duad = [&](Nat a, Nat b) { return a < b ? idx[a][b] : idx[b][a]; };
  std::vector<Nat> pm(15);
  for (Nat a = 0; a < 6; ++a)
    for (Nat b = a + 1; b < 6; ++b)
      pm[idx[a][b]] = duad(sigma[a], sigma[b]);
  return automorphism_from_point_map(m, pm);
}

Automorphism induced_grid_automorphism(const IncidenceModel& m,
                                       const std::vector<Nat>& row_perm,
                                       const std::vector<Nat>& col_perm,
                                       bool swap_axes) {
  const Nat n = m.order.s + 1;
  if (m.num_points() != checked_mul(n, n) || m.num_lines() != 2 * n)
    throw std::invalid_argument("grid automorphism: model is not a square grid");
  auto check_perm = [n](const std::vector<Nat>& perm, const char* which) {
    if (perm.size() != n)
      throw std::invalid_argument(std::string("grid automorphism: ") + which +
                                  " permutation has wrong size");
    std::vector<char> seen(n, 0);
    for (Nat v : perm) {
      if (v >= n || seen[v])
        throw std::invalid_argument(std::string("grid automorphism: ") + which +
                                    " map is not a permutation");
      seen[v] = 1;
    }
  };
  check_perm(row_perm, "row");
  check_perm(col_perm, "column");
  std::vector<Nat> pm(n * n);
  for (Nat i = 0; i < n; ++i)
    for (Nat j = 0; j < n; ++j) {
      Nat a = swap_axes ? j : i;
      Nat b = swap_axes ? i : j;
      pm[i * n + j] = row_perm[a] * n + col_perm[b];
    }
  return automorphism_from_point_map(m, pm);
}

Nat automorphism_order(const Automorphism& a) {
  const auto& pm = a.point_map;
  std::vector<char> vis(pm.size(), 0);
  Nat ord = 1;
  for (Nat i = 0; i < pm.size(); ++i) {
    if (vis[i]) continue;
    Nat len = 0, j = i;
    while (!vis[j]) {
      vis[j] = 1;
      j = pm[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

AutStats measure_stats(const IncidenceModel& m, const Automorphism& a) {
  AutStats st{};
  for (Nat p = 0; p < m.num_points(); ++p) {
    Nat q = a.point_map[p];
    if (q == p) ++st.alpha0;
    else if (m.collinear(p, q)) ++st.alpha1;
    else ++st.alpha2;
  }
  for (Nat l = 0; l < m.num_lines(); ++l) {
    Nat k = a.line_map[l];
    if (k == l) ++st.beta0;
    else if (m.concurrent(l, k)) ++st.beta1;
    else ++st.beta2;
  }
  return st;
}

FixedType classify_fixed_substructure(const IncidenceModel& m,
                                      const Automorphism& a) {
  std::vector<Nat> FP, FL;
  for (Nat p = 0; p < m.num_points(); ++p)
    if (a.point_map[p] == p) FP.push_back(p);
  for (Nat l = 0; l < m.num_lines(); ++l)
    if (a.line_map[l] == l) FL.push_back(l);

  if (FP.empty() && FL.empty()) return {FixedTypeTag::T0, {}, {}};

  if (FL.empty()) {
    for (std::size_t i = 0; i < FP.size(); ++i)
      for (std::size_t j = i + 1; j < FP.size(); ++j)
        if (m.collinear(FP[i], FP[j]))
          throw std::logic_error(
              "fixed points without fixed lines must be pairwise noncollinear");
    return {FixedTypeTag::T1, {}, {}};
  }
  if (FP.empty()) {
    for (std::size_t i = 0; i < FL.size(); ++i)
      for (std::size_t j = i + 1; j < FL.size(); ++j)
        if (m.concurrent(FL[i], FL[j]))
          throw std::logic_error(
              "fixed lines without fixed points must be pairwise nonconcurrent");
    return {FixedTypeTag::T1d, {}, {}};
  }

  std::set<Nat> FPset(FP.begin(), FP.end());
  std::set<Nat> FLset(FL.begin(), FL.end());

  /* Centered shape: one fixed point on every fixed line, collinear with
   * every fixed point. */
  for (Nat c : FP) {
    bool ok = true;
    for (Nat l : FL)
      if (!m.on_line(c, l)) { ok = false; break; }
    if (ok)
      for (Nat q : FP)
        if (!m.collinear(c, q)) { ok = false; break; }
    if (ok) return {FixedTypeTag::T2, {}, {}};
  }
  /* Dual centered shape. */
  for (Nat c : FL) {
    bool ok = true;
    for (Nat p : FP)
      if (!m.on_line(p, c)) { ok = false; break; }
    if (ok)
      for (Nat l : FL)
        if (!m.concurrent(c, l)) { ok = false; break; }
    if (ok) return {FixedTypeTag::T2d, {}, {}};
  }

  std::vector<Nat> line_sz; /* fixed points on each fixed line */
  for (Nat l : FL) {
    Nat c = 0;
    for (Nat p : m.lines[l])
      if (FPset.count(p)) ++c;
    line_sz.push_back(c);
  }
  std::vector<Nat> deg; /* fixed lines through each fixed point */
  for (Nat p : FP) {
    Nat c = 0;
    for (Nat l : m.lines_of_point[p])
      if (FLset.count(l)) ++c;
    deg.push_back(c);
  }

  /* Subquadrangle: uniform line size and point degree >= 2 and the
   * unique-flag axiom inside the fixed structure. */
  {
    auto [lmin, lmax] = std::minmax_element(line_sz.begin(), line_sz.end());
    auto [dmin, dmax] = std::minmax_element(deg.begin(), deg.end());
    if (*lmin == *lmax && *lmin >= 2 && *dmin == *dmax && *dmin >= 2) {
      bool ok = true;
      for (Nat p : FP) {
        for (Nat l : FL) {
          if (m.on_line(p, l)) continue;
          Nat cnt = 0;
          for (Nat q : m.lines[l]) {
            if (!FPset.count(q)) continue;
            auto join = m.line_through(p, q);
            if (join && FLset.count(*join)) ++cnt;
          }
          if (cnt != 1) { ok = false; break; }
        }
        if (!ok) break;
      }
      if (ok) return {FixedTypeTag::T4, {}, SubquadShape{*lmin - 1, *dmin - 1}};
    }
  }

  /* Grid: every fixed point on exactly 2 fixed lines, line sizes in two
   * classes a1 < a2 with a2 lines of the small size and a1 of the large,
   * (a1)(a2) fixed points, both sides >= 2, and each cross pair meeting in
   * exactly one fixed point. */
  if (std::all_of(deg.begin(), deg.end(), [](Nat d) { return d == 2; })) {
    std::set<Nat> sizes(line_sz.begin(), line_sz.end());
    if (sizes.size() == 2) {
      Nat a1 = *sizes.begin(), a2 = *std::next(sizes.begin());
      Nat c1 = std::count(line_sz.begin(), line_sz.end(), a1);
      Nat c2 = std::count(line_sz.begin(), line_sz.end(), a2);
      if (a1 >= 2 && c2 == a1 && c1 == a2 &&
          FP.size() == checked_mul(a1, a2)) {
        bool ok = true;
        for (std::size_t x = 0; x < FL.size() && ok; ++x)
          for (std::size_t y = 0; y < FL.size() && ok; ++y) {
            if (line_sz[x] != a2 || line_sz[y] != a1) continue;
            Nat meet = 0;
            for (Nat q : m.lines[FL[x]])
              if (FPset.count(q) && m.on_line(q, FL[y])) ++meet;
            if (meet != 1) ok = false;
          }
        if (ok)
          return {FixedTypeTag::T3, std::make_pair(a1 - 1, a2 - 1), {}};
      }
    }
  }

  /* Dual grid. */
  if (std::all_of(line_sz.begin(), line_sz.end(),
                  [](Nat c) { return c == 2; })) {
    std::set<Nat> degs(deg.begin(), deg.end());
    if (degs.size() == 2) {
      Nat b1 = *degs.begin(), b2 = *std::next(degs.begin());
      Nat c1 = std::count(deg.begin(), deg.end(), b1);
      Nat c2 = std::count(deg.begin(), deg.end(), b2);
      if (b1 >= 2 && c2 == b1 && c1 == b2 &&
          FL.size() == checked_mul(b1, b2)) {
        bool ok = true;
        for (std::size_t x = 0; x < FP.size() && ok; ++x)
          for (std::size_t y = 0; y < FP.size() && ok; ++y) {
            if (deg[x] != b2 || deg[y] != b1) continue;
            Nat meet = 0;
            for (Nat l : m.lines_of_point[FP[x]])
              if (FLset.count(l) && m.on_line(FP[y], l)) ++meet;
            if (meet != 1) ok = false;
          }
        if (ok)
          return {FixedTypeTag::T3d, std::make_pair(b1 - 1, b2 - 1), {}};
      }
    }
  }

  throw std::logic_error("fixed substructure matches no admissible shape");
}

namespace {

std::string doily_label(const std::array<Nat, 6>& sigma) {
  std::string s = "doily perm [";
  for (Nat i = 0; i < 6; ++i) {
    if (i) s += ' ';
    s += std::to_string(sigma[i]);
  }
  return s + "]";
}

std::string perm_text(const std::vector<Nat>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

} // namespace

VerifySummary verify_all_doily() {
  const IncidenceModel m = build_doily();
  const GqOrder o = m.order;
  VerifySummary sum;
  std::vector<Nat> perm{0, 1, 2, 3, 4, 5};
  do {
    std::array<Nat, 6> sigma;
    std::copy(perm.begin(), perm.end(), sigma.begin());
    ++sum.total;
    std::vector<std::string> bad;
    const std::string who = doily_label(sigma);
    try {
      Automorphism a = induced_doily_automorphism(m, sigma);
      AutStats st = measure_stats(m, a);
      if (st.alpha0 + st.alpha1 + st.alpha2 != 15)
        bad.push_back(who + ": point counts do not sum to 15");
      if (st.beta0 + st.beta1 + st.beta2 != 15)
        bad.push_back(who + ": line counts do not sum to 15");
      if (!benson_residue(o, st.alpha0, st.alpha1))
        bad.push_back(who + ": counting residue violated");
      if (!count_relation(o, st))
        bad.push_back(who + ": exact count relation violated");
      Nat k = automorphism_order(a);
      if (is_prime(k)) {
        if (!orbit_census_congruences(o, k, st).all_ok)
          bad.push_back(who + ": orbit census congruence violated");
        FixedType ft = classify_fixed_substructure(m, a);
        TypeAdmissibility ta = type_admissible(o, k);
        if (!ta.verdict(ft.tag).admissible)
          bad.push_back(who + ": fixed type " + std::string(to_string(ft.tag)) +
                        " not admissible for p=" + std::to_string(k));
        if (ft.tag == FixedTypeTag::T2 &&
            !type2_fixed_relation(o, k, st.alpha0, st.beta0, false))
          bad.push_back(who + ": centered fixed-count relation violated");
        if (ft.tag == FixedTypeTag::T2d &&
            !type2_fixed_relation(o, k, st.alpha0, st.beta0, true))
          bad.push_back(who + ": dual centered fixed-count relation violated");
      }
    } catch (const std::exception& e) {
      bad.push_back(who + ": " + e.what());
    }
    if (bad.empty())
      ++sum.passed;
    else
      sum.failures.insert(sum.failures.end(), bad.begin(), bad.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

VerifySummary verify_all_grid(Nat s) {
  const IncidenceModel m = build_grid(s);
  const GqOrder o = m.order;
  const Int pts = static_cast<Int>(point_count(o));
  const Int lns = static_cast<Int>(line_count(o));
  VerifySummary sum;
  const Nat n = s + 1;
  auto run_one = [&](const std::vector<Nat>& rho, const std::vector<Nat>& kappa,
                     bool swap_axes) {
    ++sum.total;
    std::vector<std::string> bad;
    const std::string who = "grid s=" + std::to_string(s) +
                            " rows=" + perm_text(rho) +
                            " cols=" + perm_text(kappa) +
                            " swap=" + (swap_axes ? "1" : "0");
    try {
      Automorphism a = induced_grid_automorphism(m, rho, kappa, swap_axes);
      AutStats st = measure_stats(m, a);
      if (st.alpha0 + st.alpha1 + st.alpha2 != pts)
        bad.push_back(who + ": point counts do not sum to the point total");
      if (st.beta0 + st.beta1 + st.beta2 != lns)
        bad.push_back(who + ": line counts do not sum to the line total");
      if (!benson_residue(o, st.alpha0, st.alpha1))
        bad.push_back(who + ": counting residue violated");
      if (!count_relation(o, st))
        bad.push_back(who + ": exact count relation violated");
      Nat k = automorphism_order(a);
      if (is_prime(k) && !orbit_census_congruences(o, k, st).all_ok)
        bad.push_back(who + ": orbit census congruence violated");
    } catch (const std::exception& e) {
      bad.push_back(who + ": " + e.what());
    }
    if (bad.empty())
      ++sum.passed;
    else
      sum.failures.insert(sum.failures.end(), bad.begin(), bad.end());
  };

  std::vector<Nat> rho(n), kappa(n);
  if (s <= 3) {
    std::iota(rho.begin(), rho.end(), Nat{0});
    do {
      std::iota(kappa.begin(), kappa.end(), Nat{0});
      do {
        run_one(rho, kappa, false);
        run_one(rho, kappa, true);
      } while (std::next_permutation(kappa.begin(), kappa.end()));
    } while (std::next_permutation(rho.begin(), rho.end()));
  } else {
    std::mt19937_64 rng(0x0051D5EEDULL + s);
    std::iota(rho.begin(), rho.end(), Nat{0});
    std::iota(kappa.begin(), kappa.end(), Nat{0});
    for (int i = 0; i < 1000; ++i) {
      std::shuffle(rho.begin(), rho.end(), rng);
      std::shuffle(kappa.begin(), kappa.end(), rng);
      run_one(rho, kappa, (rng() & 1) != 0);
    }
  }
  return sum;
}

} // namespace qsieve
