#include "stab/oracles.hpp"

#include <cstdint>
#include <vector>

#include "stab/util.hpp"

namespace stab {

namespace {

// Valid-subset table for one word: bit i set in `mask` means position i is in
// the subsequence (positions keep word order).
std::vector<char> valid_subsets(std::span<const CosetEntry> w, bool decreasing) {
  const int n = static_cast<int>(w.size());
  std::vector<char> valid(std::size_t{1} << n, 1);
  for (uint32_t mask = 1; mask < valid.size(); ++mask) {
    int prev = -1;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      if (prev >= 0) {
        if (decreasing) {
          // strictly decreasing: every consecutive pair must compare GT
          if (compare(w[prev], w[i]) != Cmp::GT) ok = false;
        } else {
          // non-decreasing: no earlier element strictly greater
          for (int j = 0; j < i && ok; ++j)
            if ((mask & (1u << j)) && compare(w[j], w[i]) == Cmp::GT) ok = false;
        }
      }
      prev = i;
    }
    valid[mask] = ok ? 1 : 0;
  }
  return valid;
}

int max_disjoint(std::span<const CosetEntry> w, int k, bool decreasing) {
  const int n = static_cast<int>(w.size());
  if (n > 16) throw Error("OracleTooLarge", "oracle words are capped at 16 letters");
  if (k <= 0) return 0;
  const std::vector<char> valid = valid_subsets(w, decreasing);
  const uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  // best[mask] = best total using the positions of `mask`, with the current
  // number of allowed subsequences; built up one subsequence at a time.
  std::vector<int8_t> best(full + 1, 0), next(full + 1, 0);
  auto popcount = [](uint32_t m) { return __builtin_popcount(m); };
  for (int round = 1; round <= k; ++round) {
    bool saturated = true;
    for (uint32_t mask = 0; mask <= full; ++mask) {
      int b = best[mask];  // empty k-th subsequence allowed
      const int avail = popcount(mask);
      if (b < avail) {
        for (uint32_t s = mask; s; s = (s - 1) & mask) {
          if (!valid[s]) continue;
          int cand = popcount(s) + best[mask ^ s];
          if (cand > b) {
            b = cand;
            if (b == avail) break;
          }
        }
      }
      next[mask] = static_cast<int8_t>(b);
      if (b < avail) saturated = false;
    }
    std::swap(best, next);
    if (saturated) break;  // more subsequences cannot add length
  }
  return best[full];
}

}  // namespace

int oracle_ell(std::span<const CosetEntry> w, int k) {
  return max_disjoint(w, k, /*decreasing=*/false);
}

int oracle_ctc(std::span<const CosetEntry> w, int k) {
  return max_disjoint(w, k, /*decreasing=*/true);
}

}  // namespace stab
