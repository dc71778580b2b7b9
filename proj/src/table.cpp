#include "stab/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stab {

STable table_from_rows(std::vector<Row> rows) {
  if (rows.empty() || rows.size() % 2 != 0)
    throw Error("RowCountMismatch", "an s-table needs 2r rows");
  SFrame f;
  f.len.reserve(rows.size());
  for (const Row& r : rows) f.len.push_back(static_cast<int>(r.size()));
  return STable{std::move(f), std::move(rows)};
}

STable table_from_weight(const Pyramid& p, const std::vector<CosetEntry>& weight) {
  const int n = p.boxes() / 2;
  if (static_cast<int>(weight.size()) != n)
    throw Error("RowCountMismatch", "weight length must match half the box count");
  STable a;
  a.frame = p.frame;
  a.rows.assign(p.frame.rows(), {});
  const auto coords = coordinate_pyramid(p);
  for (int k = 0; k < p.frame.rows(); ++k) {
    a.rows[k].reserve(coords[k].size());
    for (int c : coords[k])
      a.rows[k].push_back(c > 0 ? weight[c - 1] : negate(weight[-c - 1]));
  }
  return a;
}

std::vector<CosetEntry> weight_from_table(const STable& a) {
  // K numbers 1..n fill exactly the upper half, so the weight is the upper
  // rows read across.
  std::vector<CosetEntry> w;
  for (int k = 0; k < a.pairs(); ++k)
    w.insert(w.end(), a.rows[k].begin(), a.rows[k].end());
  return w;
}

std::vector<SkewViolation> validate_skew(const STable& a) {
  std::vector<SkewViolation> out;
  const int rows = a.frame.rows();
  for (int k = 0; k < a.pairs(); ++k) {
    const int m = a.frame.mirror(k);
    const Row& top = a.rows[k];
    const Row& bot = a.rows[m];
    if (top.size() != bot.size()) {
      out.push_back({a.frame.label_of(m), 0, {}, {}});
      continue;
    }
    const int L = static_cast<int>(top.size());
    for (int j = 0; j < L; ++j) {
      CosetEntry expected = negate(top[j]);
      const CosetEntry& found = bot[L - 1 - j];
      if (!(expected == found))
        out.push_back({a.frame.label_of(m), L - 1 - j, expected, found});
    }
  }
  (void)rows;
  return out;
}

static STable restrict_by(const STable& a, const std::function<bool(const CosetEntry&)>& keep) {
  STable out;
  out.rows.reserve(a.rows.size());
  for (const Row& r : a.rows) {
    Row kept;
    for (const CosetEntry& e : r)
      if (keep(e)) kept.push_back(e);
    out.rows.push_back(std::move(kept));
  }
  out.frame.len.reserve(out.rows.size());
  for (const Row& r : out.rows) out.frame.len.push_back(static_cast<int>(r.size()));
  return out;
}

STable restrict_single(const STable& a, const CosetClass& z) {
  return restrict_by(a, [&](const CosetEntry& e) { return thread_of(e) == z; });
}

STable restrict_pm(const STable& a, const PmClass& z) {
  return restrict_by(a, [&](const CosetEntry& e) { return pm_of(e) == z; });
}

std::vector<CosetClass> classes_present(const STable& a) {
  std::set<CosetClass> s;
  for (const Row& r : a.rows)
    for (const CosetEntry& e : r) s.insert(thread_of(e));
  return {s.begin(), s.end()};
}

std::vector<PmClass> pm_classes_present(const STable& a) {
  std::set<PmClass> s;
  for (const Row& r : a.rows)
    for (const CosetEntry& e : r) s.insert(pm_of(e));
  return {s.begin(), s.end()};
}

STable concatenate(const STable& a, const STable& b) {
  if (a.rows.size() != b.rows.size())
    throw Error("RowCountMismatch", "concatenation needs equal row counts");
  STable out = a;
  for (std::size_t k = 0; k < out.rows.size(); ++k) {
    out.rows[k].insert(out.rows[k].end(), b.rows[k].begin(), b.rows[k].end());
    out.frame.len[k] += b.frame.len[k];
  }
  return out;
}

STable plus_table(const STable& a) {
  STable out = a;
  const int r = a.pairs();
  for (int k = 0; k < a.frame.rows(); ++k) {
    const int label = a.frame.label_of(k);
    CosetEntry added = int_entry(label > 0 ? label - 1 : label + 1);
    if (label > 0)
      out.rows[k].push_back(added);
    else
      out.rows[k].insert(out.rows[k].begin(), added);
    ++out.frame.len[k];
  }
  (void)r;
  return out;
}

STable strip_outer(const STable& a, int k) {
  const int r = a.pairs();
  if (k <= 0 || k >= r) throw Error("BadDepth", "strip depth must satisfy 0 < k < r");
  STable out;
  out.rows.assign(a.rows.begin() + k, a.rows.end() - k);
  out.frame.len.assign(a.frame.len.begin() + k, a.frame.len.end() - k);
  return out;
}

std::vector<Row> upper_half(const STable& a) {
  return {a.rows.begin(), a.rows.begin() + a.pairs()};
}

std::vector<Row> lower_half(const STable& a) {
  return {a.rows.begin() + a.pairs(), a.rows.end()};
}

std::vector<int> row_lengths(const std::vector<Row>& rows) {
  std::vector<int> l;
  l.reserve(rows.size());
  for (const Row& r : rows) l.push_back(static_cast<int>(r.size()));
  return l;
}

Row entry_multiset(const STable& a) {
  Row all;
  for (const Row& r : a.rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end(), key_less);
  return all;
}

Row sorted_row(Row r) {
  std::sort(r.begin(), r.end(), key_less);
  return r;
}

RowClass row_class(const STable& a) {
  RowClass c{a};
  for (Row& r : c.table.rows) std::sort(r.begin(), r.end(), key_less);
  return c;
}

std::string RowClass::key() const { return to_string(table); }

std::vector<CosetEntry> word_of(const std::vector<Row>& rows) {
  std::vector<CosetEntry> w;
  for (const Row& r : rows) {
    Row s = sorted_row(r);
    w.insert(w.end(), s.begin(), s.end());
  }
  return w;
}

std::vector<CosetEntry> word_of(const RowClass& a) { return word_of(a.table.rows); }

std::string to_string(const STable& a) {
  std::ostringstream os;
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    if (k) os << " | ";
    for (std::size_t j = 0; j < a.rows[k].size(); ++j) {
      if (j) os << ",";
      os << to_string(a.rows[k][j]);
    }
  }
  return os.str();
}

}  // namespace stab
