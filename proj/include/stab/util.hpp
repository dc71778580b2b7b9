// util.hpp — small shared helpers: error type, deterministic RNG, parallel_for.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stab {

// Error carries a short machine-readable code ("NonMonotone", "BadDepth", ...)
// plus a human message.  CLI maps any Error to exit code 2.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Deterministic RNG.  mt19937_64 output is fixed by the standard; we avoid
// std::uniform_int_distribution (implementation-defined) so that runs with a
// fixed seed are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    // splitmix64; stable and fast enough for test-case generation.
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] inclusive
  int range(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[next() % v.size()];
  }

 private:
  uint64_t s_;
};

// Runs fn(i) for i in [0, n).  Work per index must be independent; results
// should be written into caller-owned slots indexed by i so the outcome does
// not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace stab
