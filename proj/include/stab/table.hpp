// table.hpp — s-tables, row-equivalence classes, and the weight dictionary.
//
// An STable stores the geometric filling: rows top to bottom, boxes left to
// right.  Skew symmetry places -x in the box centrally symmetric to the box
// holding x, i.e. row -i reversed and negated equals row i; validate_skew
// checks exactly that and reports offending boxes.  Construction does not
// enforce it (the validator must be able to ingest inconsistent input).
//
// A RowClass is the row-equivalence class of an STable, stored as the
// canonical representative with every row sorted by the canonical key.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stab/entry.hpp"
#include "stab/frame.hpp"

namespace stab {

struct STable {
  SFrame frame;
  std::vector<Row> rows;  // rows.size() == frame.rows(), lengths match

  int pairs() const { return frame.pairs(); }

  friend bool operator==(const STable&, const STable&) = default;
};

STable table_from_rows(std::vector<Row> rows);

// Weight <-> table dictionary for a pyramid P with coordinate pyramid K:
// entry a_i goes to the box holding i in K, -a_i to the box holding -i.
STable table_from_weight(const Pyramid& p, const std::vector<CosetEntry>& weight);
std::vector<CosetEntry> weight_from_table(const STable& a);

struct SkewViolation {
  int row_label = 0;  // row of the offending box
  int box = 0;        // 0-based position within the row
  CosetEntry expected, found;
};

// Empty result means the stored filling is skew symmetric.
std::vector<SkewViolation> validate_skew(const STable& a);

// A_z (mode single) and A_{+-z} (mode pm); keeps 2r rows, possibly empty,
// and preserves the within-row order of the surviving boxes.
STable restrict_single(const STable& a, const CosetClass& z);
STable restrict_pm(const STable& a, const PmClass& z);

// Distinct classes present, in canonical order.
std::vector<CosetClass> classes_present(const STable& a);
std::vector<PmClass> pm_classes_present(const STable& a);

// Rowwise concatenation; throws RowCountMismatch.
STable concatenate(const STable& a, const STable& b);

// A+: one box per row, entry i-1 appended to row i, -(i-1) to row -i (kept
// centrally symmetric by prepending in the lower half).
STable plus_table(const STable& a);

// Removes rows 1..k and -k..-1; throws BadDepth unless 0 < k < r.
STable strip_outer(const STable& a, int k);

// Subtables in the upper / lower half-plane, as plain row lists.
std::vector<Row> upper_half(const STable& a);
std::vector<Row> lower_half(const STable& a);

std::vector<int> row_lengths(const std::vector<Row>& rows);

// Whole-table entry multiset, canonically sorted.
Row entry_multiset(const STable& a);

struct RowClass {
  STable table;  // rows sorted by canonical key

  friend bool operator==(const RowClass&, const RowClass&) = default;
  bool operator<(const RowClass& o) const { return key() < o.key(); }
  std::string key() const;
};

RowClass row_class(const STable& a);
Row sorted_row(Row r);

// word(A) restricted to rows with non-decreasing arrangement: canonical rows
// concatenated top to bottom, empty rows skipped.
std::vector<CosetEntry> word_of(const std::vector<Row>& rows);
std::vector<CosetEntry> word_of(const RowClass& a);

std::string to_string(const STable& a);

}  // namespace stab
