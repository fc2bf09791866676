#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsieve/obstruction.hpp"

namespace qsieve {

/* One excluded order: feasible, thick, s > t, s+1 prime, ceiling comparison
 * failed.  family_n is set when the order lies in the tagged family
 * s = q^2 - nq, t = q (rendered as three asterisks in the reference list). */
struct ScanRow {
  Nat s = 0;
  Nat t = 0;
  std::optional<Nat> family_n;
  Nat lhs = 0;
  Nat rhs = 0;
  bool operator==(const ScanRow&) const = default;
};

/* All excluded orders with 2 <= t <= t_max, t < s <= t^2, sorted by (t, s).
 * threads = 0 reads QSIEVE_THREADS (default 1); the result is identical for
 * any thread count.  Throws std::invalid_argument unless t_max >= 2. */
std::vector<ScanRow> scan(Nat t_max, unsigned threads = 0);

struct GoldenRow {
  Nat s = 0;
  Nat t = 0;
  unsigned stars = 0; /* 0 = untagged, 3 = family; 2 survives one known typo */
  bool operator==(const GoldenRow&) const = default;
};

/* Parses "s,t,stars" lines; '#' starts a comment line.  Throws
 * std::runtime_error naming the 1-based line number on malformed input. */
std::vector<GoldenRow> parse_golden(const std::string& path);

struct DiffReport {
  std::vector<ScanRow> missing;        /* computed but absent from golden */
  std::vector<GoldenRow> extra;        /* golden rows no computation produced */
  std::vector<GoldenRow> tag_mismatch; /* star count disagrees (golden side) */
  std::vector<GoldenRow> duplicate_golden_rows;
  bool empty() const {
    return missing.empty() && extra.empty() && tag_mismatch.empty() &&
           duplicate_golden_rows.empty();
  }
};

/* Compares scan output against a reference list on disk.  With normalize
 * set, the documented defects of the shipped reference list are corrected
 * before comparing (see normalize_golden). */
DiffReport compare_to_golden(const std::vector<ScanRow>& rows,
                             const std::string& golden_path, bool normalize);

/* The documented reference-list corrections: deduplicate the repeated
 * (4240,80) row, fix the two mistagged t = 100 rows, append the two orders
 * the list omits.  Exposed for direct inspection and tests. */
std::vector<GoldenRow> normalize_golden(std::vector<GoldenRow> rows);

/* CSV rows "s,t,n_or_blank,lhs,rhs", no header, one trailing newline each. */
std::string scan_rows_to_csv(const std::vector<ScanRow>& rows);
std::vector<ScanRow> scan_rows_from_csv(const std::string& csv);

/* JSON array of row objects with keys s, t, family_n (null when untagged),
 * lhs, rhs, in that order. */
std::string scan_rows_to_json(const std::vector<ScanRow>& rows);
std::vector<ScanRow> scan_rows_from_json(const std::string& json_text);

} // namespace qsieve
