#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsieve/autlaws.hpp"

namespace qsieve {

/* Explicit point-line incidence structure; lines are sorted point-index
 * vectors.  Models are immutable after construction. */
struct IncidenceModel {
  std::string kind; /* "grid", "dual-grid", "doily", "dual:...", "corrupted:..." */
  GqOrder order;
  std::vector<std::string> point_names;
  std::vector<std::string> line_names;
  std::vector<std::vector<Nat>> lines;          /* sorted point indices */
  std::vector<std::vector<Nat>> lines_of_point; /* sorted line indices */

  Nat num_points() const { return point_names.size(); }
  Nat num_lines() const { return lines.size(); }
  bool on_line(Nat p, Nat l) const;
  /* Convention: a point is collinear with itself, a line concurrent with
   * itself. */
  bool collinear(Nat p, Nat q) const;
  bool concurrent(Nat l, Nat m) const;
  /* The unique joining line of two distinct collinear points. */
  std::optional<Nat> line_through(Nat p, Nat q) const;
  /* Deterministic JSON dump: kind, order, point names, line names, lines
   * as point-index arrays. */
  std::string dump_json() const;
};

/* (s+1) x (s+1) grid of order (s,1): rows and columns as lines. */
IncidenceModel build_grid(Nat s);

/* Point-line dual of build_grid(t); order (1,t). */
IncidenceModel build_dual_grid(Nat t);

/* Order-(2,2) model: points are the 2-subsets (duads) of {0..5}, lines the
 * perfect matchings (synthemes), incidence is membership. */
IncidenceModel build_doily();

/* Swaps the roles of points and lines. */
IncidenceModel dualize(const IncidenceModel& m);

/* Returns a copy with one incidence toggled (point 0 on line 0), for
 * negative controls. */
IncidenceModel corrupt_incidence(const IncidenceModel& m);

/* Empty iff the model satisfies all defining axioms: line sizes s+1, point
 * degrees t+1, expected point/line totals, no two points on two common
 * lines, and the unique-flag axiom for every non-incident point-line pair. */
std::vector<std::string> check_gq_axioms(const IncidenceModel& m);

struct Automorphism {
  std::vector<Nat> point_map;
  std::vector<Nat> line_map; /* determined by point_map */
};

/* Validates that point_map is a permutation carrying every line onto a
 * line, and derives line_map.  Throws std::invalid_argument otherwise. */
Automorphism automorphism_from_point_map(const IncidenceModel& m,
                                         const std::vector<Nat>& point_map);

/* The automorphism induced by a permutation of the six underlying symbols
 * of the duad/syntheme model. */
Automorphism induced_doily_automorphism(const IncidenceModel& m,
                                        const std::array<Nat, 6>& sigma);

/* The grid automorphism (i,j) -> (rho(i), kappa(j)), with the two axes
 * swapped first when swap_axes is set. */
Automorphism induced_grid_automorphism(const IncidenceModel& m,
                                       const std::vector<Nat>& row_perm,
                                       const std::vector<Nat>& col_perm,
                                       bool swap_axes);

/* Order of the permutation pair (= order of point_map). */
Nat automorphism_order(const Automorphism& a);

/* Counts fixed / moved-to-collinear / moved-to-noncollinear points and the
 * line analogues. */
AutStats measure_stats(const IncidenceModel& m, const Automorphism& a);

/* Fixed-substructure classification result.  grid_sides carries (s1, s2)
 * for tag T3 and the dual pair for T3d; subquad carries (s', t') for T4. */
struct FixedType {
  FixedTypeTag tag;
  std::optional<std::pair<Nat, Nat>> grid_sides;
  std::optional<SubquadShape> subquad;
};

/* Matches the fixed points and lines of a against the eight admissible
 * shapes, trying the pointed shapes before the grid shapes (a structure
 * matching both a center and its dual reads as the center).  Intended for
 * thick models; throws std::logic_error if nothing matches. */
FixedType classify_fixed_substructure(const IncidenceModel& m,
                                      const Automorphism& a);

struct VerifySummary {
  Nat total = 0;
  Nat passed = 0;
  std::vector<std::string> failures; /* one entry per violated law */
};

/* Runs every law against all 720 symbol-permutation automorphisms of the
 * duad/syntheme model: counting residues and the exact count relation for
 * all of them; for prime-order elements also the orbit census congruences,
 * membership of the classified fixed type in the admissible set, and the
 * fixed-count relation for centered types. */
VerifySummary verify_all_doily();

/* Grid law suite: counting residues, exact count relation, and prime-order
 * census over row/column/swap automorphisms — the full group (order
 * 2((s+1)!)^2) for s <= 3, a seeded 1000-sample subset for larger s.
 * Thick-only laws do not apply and are skipped. */
VerifySummary verify_all_grid(Nat s);

} // namespace qsieve
