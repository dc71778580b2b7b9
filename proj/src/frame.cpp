#include "stab/frame.hpp"

#include <algorithm>

namespace stab {

Pyramid pyramid_from_rows(const std::vector<int>& upper) {
  if (upper.empty()) throw Error("NonMonotone", "pyramid needs at least one row pair");
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (upper[i] <= 0) throw Error("NonMonotone", "row lengths must be positive");
    if (i + 1 < upper.size() && upper[i] > upper[i + 1])
      throw Error("NonMonotone", "row lengths must weakly increase toward the axis");
  }
  SFrame f;
  f.len.reserve(2 * upper.size());
  f.len.insert(f.len.end(), upper.begin(), upper.end());
  f.len.insert(f.len.end(), upper.rbegin(), upper.rend());
  return Pyramid{std::move(f)};
}

std::vector<int> upper_lengths(const Pyramid& p) {
  return {p.frame.len.begin(), p.frame.len.begin() + p.pairs()};
}

std::vector<int> jordan_type(const Pyramid& p) {
  std::vector<int> parts = p.frame.len;
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::vector<std::vector<int>> coordinate_pyramid(const Pyramid& p) {
  const int n = p.boxes() / 2;
  std::vector<std::vector<int>> rows(p.frame.rows());
  int next = 1;
  for (int k = 0; k < p.frame.rows(); ++k) {
    if (k == p.pairs()) next = -n;  // switch to -n..-1 at the lower half
    for (int j = 0; j < p.frame.len[k]; ++j) rows[k].push_back(next++);
  }
  return rows;
}

Pyramid plus_pyramid(const Pyramid& p) {
  Pyramid q = p;
  for (int& l : q.frame.len) ++l;
  return q;
}

bool is_convex(const std::vector<int>& lengths) {
  int maxlen = 0;
  for (int l : lengths) maxlen = std::max(maxlen, l);
  for (int j = 1; j <= maxlen; ++j) {
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(lengths.size()); ++i) {
      if (lengths[i] >= j) {
        if (first < 0) first = i;
        last = i;
      }
    }
    for (int i = first; i <= last; ++i)
      if (lengths[i] < j) return false;
  }
  return true;
}

std::vector<int> frame_partition(const std::vector<int>& lengths) {
  std::vector<int> parts;
  for (int l : lengths)
    if (l > 0) parts.push_back(l);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

bool is_pyramid_shape(const SFrame& f) {
  const int r = f.pairs();
  if (r == 0 || f.rows() != 2 * r) return false;
  for (int i = 0; i < r; ++i) {
    if (f.len[i] <= 0) return false;
    if (f.len[i] != f.len[f.mirror(i)]) return false;
    if (i + 1 < r && f.len[i] > f.len[i + 1]) return false;
  }
  return true;
}

}  // namespace stab
