// rs.hpp — generalized Robinson-Schensted over coset numbers, subsequence
// statistics, column-strictness tests.
//
// The tableau is stored bottom row first (the insertion row).  Inserting x:
// if x is not < any entry of the bottom row, append it; otherwise x bumps
// the leftmost entry strictly greater than it, which is inserted into the
// rows above.  Incomparable entries never bump.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stab/table.hpp"

namespace stab {

struct Tableau {
  std::vector<Row> rows;  // bottom row first; each row non-decreasing

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct PartitionShape {
  std::vector<int> parts;  // weakly decreasing, positive

  PartitionShape transpose() const;
  int total() const;
  // Sum of the first k parts (k past the end saturates).
  int prefix(int k) const;

  friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
};

Tableau rs_insert(Tableau t, const CosetEntry& x);
Tableau rs_word(std::span<const CosetEntry> w);
PartitionShape shape_of(const Tableau& t);
PartitionShape shape_of_word(std::span<const CosetEntry> w);

// ell(w,k): max total length of k disjoint non-decreasing subsequences,
// via the shape of RS(w); ctc(w,k) likewise for strictly decreasing
// subsequences via the transpose.  Independent oracles live in oracles.hpp.
int ell(std::span<const CosetEntry> w, int k);
int ctc(std::span<const CosetEntry> w, int k);

// RS of a row class: RS(word(B)) for any representative B with
// non-decreasing rows; the canonical representative is used and the output
// rows are canonically sorted, so equal classes give equal tableaux.
Tableau rs_class(const RowClass& a);
PartitionShape rs_class_shape(const RowClass& a);

// Column strictness of a justified diagram: consecutive boxes of each column
// strictly decrease downward (comparability required).
bool is_column_strict(const std::vector<Row>& justified_rows);

// Exhaustive search for a column-strict rearrangement of the justified rows;
// returns a witness arrangement if one exists.
std::optional<std::vector<Row>> jre_cs_witness(const std::vector<Row>& rows);
bool jre_cs_backtracking(const std::vector<Row>& rows);

// Justified row equivalent to column strict.  On convex frames this is
// decided by shape(RS) = part(F); otherwise by backtracking.
bool is_jre_cs(const std::vector<Row>& rows);
bool is_jre_cs(const RowClass& a);

}  // namespace stab
