#include "stab/rs.hpp"

#include <algorithm>

namespace stab {

PartitionShape PartitionShape::transpose() const {
  PartitionShape t;
  if (parts.empty()) return t;
  t.parts.assign(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++t.parts[j];
  return t;
}

int PartitionShape::total() const {
  int n = 0;
  for (int p : parts) n += p;
  return n;
}

int PartitionShape::prefix(int k) const {
  int s = 0;
  for (int i = 0; i < k && i < static_cast<int>(parts.size()); ++i) s += parts[i];
  return s;
}

Tableau rs_insert(Tableau t, const CosetEntry& x) {
  CosetEntry cur = x;
  for (std::size_t level = 0;; ++level) {
    if (level == t.rows.size()) {
      t.rows.push_back({cur});
      return t;
    }
    Row& row = t.rows[level];
    std::size_t j = 0;
    while (j < row.size() && !less_than(cur, row[j])) ++j;
    if (j == row.size()) {
      row.push_back(cur);
      return t;
    }
    std::swap(cur, row[j]);  // cur bumps row[j] into the row above
  }
}

Tableau rs_word(std::span<const CosetEntry> w) {
  Tableau t;
  for (const CosetEntry& x : w) t = rs_insert(std::move(t), x);
  return t;
}

PartitionShape shape_of(const Tableau& t) {
  PartitionShape s;
  s.parts.reserve(t.rows.size());
  for (const Row& r : t.rows) s.parts.push_back(static_cast<int>(r.size()));
  return s;
}

PartitionShape shape_of_word(std::span<const CosetEntry> w) {
  return shape_of(rs_word(w));
}

int ell(std::span<const CosetEntry> w, int k) {
  return shape_of_word(w).prefix(k);
}

int ctc(std::span<const CosetEntry> w, int k) {
  return shape_of_word(w).transpose().prefix(k);
}

Tableau rs_class(const RowClass& a) {
  std::vector<CosetEntry> w = word_of(a);
  Tableau t = rs_word(w);
  for (Row& r : t.rows) std::sort(r.begin(), r.end(), key_less);
  return t;
}

PartitionShape rs_class_shape(const RowClass& a) {
  std::vector<CosetEntry> w = word_of(a);
  return shape_of_word(w);
}

bool is_column_strict(const std::vector<Row>& rows) {
  std::size_t width = 0;
  for (const Row& r : rows) width = std::max(width, r.size());
  for (std::size_t j = 0; j < width; ++j) {
    const CosetEntry* above = nullptr;
    for (const Row& r : rows) {
      if (j >= r.size()) continue;
      if (above && !greater_than(*above, r[j])) return false;
      above = &r[j];
    }
  }
  return true;
}

namespace {

// Depth-first search over per-row arrangements, top row first.  above[j]
// holds the entry currently at the bottom of column j; a candidate for
// column j must be strictly below it.  Duplicate entries within a row are
// deduplicated at each branching point.
struct CsSearch {
  const std::vector<Row>& rows;
  std::vector<Row> chosen;
  std::vector<const CosetEntry*> above;

  explicit CsSearch(const std::vector<Row>& rs) : rows(rs) {
    std::size_t width = 0;
    for (const Row& r : rows) width = std::max(width, r.size());
    above.assign(width, nullptr);
  }

  bool fill_row(std::size_t i, std::size_t j, Row& remaining) {
    if (j == rows[i].size()) return place_row(i + 1);
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (c > 0 && remaining[c] == remaining[c - 1]) continue;
      if (above[j] && !greater_than(*above[j], remaining[c])) continue;
      CosetEntry e = remaining[c];
      chosen[i].push_back(e);
      remaining.erase(remaining.begin() + c);
      const CosetEntry* saved = above[j];
      above[j] = &chosen[i].back();
      if (fill_row(i, j + 1, remaining)) return true;
      above[j] = saved;
      remaining.insert(remaining.begin() + c, e);
      chosen[i].pop_back();
    }
    return false;
  }

  bool place_row(std::size_t i) {
    if (i == rows.size()) return true;
    Row remaining = sorted_row(rows[i]);
    chosen[i].clear();
    chosen[i].reserve(rows[i].size());
    // The `above` slots touched by this row are restored on backtrack by
    // fill_row; slots for columns this row does not reach keep their state.
    return fill_row(i, 0, remaining);
  }

  std::optional<std::vector<Row>> run() {
    chosen.assign(rows.size(), {});
    if (place_row(0)) return chosen;
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<Row>> jre_cs_witness(const std::vector<Row>& rows) {
  CsSearch s(rows);
  return s.run();
}

bool jre_cs_backtracking(const std::vector<Row>& rows) {
  return jre_cs_witness(rows).has_value();
}

bool is_jre_cs(const std::vector<Row>& rows) {
  std::vector<int> lengths = row_lengths(rows);
  if (is_convex(lengths)) {
    PartitionShape want{frame_partition(lengths)};
    std::vector<CosetEntry> w = word_of(rows);
    return shape_of_word(w) == want;
  }
  return jre_cs_backtracking(rows);
}

bool is_jre_cs(const RowClass& a) { return is_jre_cs(a.table.rows); }

}  // namespace stab
