// entry.hpp — exact arithmetic for coset numbers.
//
// A table entry is a complex number remembered only as (coset class, integer
// offset):
//
//   Int k            stands for  k
//   Half k           stands for  k + 1/2
//   Generic(l, s, k) stands for  s*l + k,  l an opaque indeterminate not in
//                                (1/2)Z, s = +/-1
//
// The partial order a <= b holds iff b - a is a nonnegative integer, so two
// entries are comparable exactly when they lie in the same coset of C/Z
// (same tag, and for Generic the same label and sign); the order then
// compares offsets.  Int and Half cosets are their own negatives; the two
// signs of a Generic label form one +/- pair.
#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace stab {

enum class CosetTag : uint8_t { Int = 0, Half = 1, Generic = 2 };

struct CosetEntry {
  CosetTag tag = CosetTag::Int;
  int8_t sign = +1;   // Generic only; +1 for Int/Half
  int offset = 0;
  std::string label;  // Generic only; empty otherwise

  friend bool operator==(const CosetEntry&, const CosetEntry&) = default;
};

inline CosetEntry int_entry(int k) { return CosetEntry{CosetTag::Int, +1, k, {}}; }
inline CosetEntry half_entry(int k) { return CosetEntry{CosetTag::Half, +1, k, {}}; }
inline CosetEntry generic_entry(std::string label, int sign, int offset) {
  return CosetEntry{CosetTag::Generic, static_cast<int8_t>(sign < 0 ? -1 : +1),
                    offset, std::move(label)};
}

// -x: Int k -> -k; Half k -> -(k + 1/2) = (-k-1) + 1/2; Generic flips sign.
inline CosetEntry negate(const CosetEntry& e) {
  CosetEntry n = e;
  switch (e.tag) {
    case CosetTag::Int: n.offset = -e.offset; break;
    case CosetTag::Half: n.offset = -e.offset - 1; break;
    case CosetTag::Generic:
      n.sign = static_cast<int8_t>(-e.sign);
      n.offset = -e.offset;
      break;
  }
  return n;
}

enum class Cmp { LT, EQ, GT, Incomparable };

// Comparable iff same single coset; then order by offset.
inline bool same_thread(const CosetEntry& a, const CosetEntry& b) {
  return a.tag == b.tag && a.sign == b.sign && a.label == b.label;
}

inline Cmp compare(const CosetEntry& a, const CosetEntry& b) {
  if (!same_thread(a, b)) return Cmp::Incomparable;
  if (a.offset < b.offset) return Cmp::LT;
  if (a.offset > b.offset) return Cmp::GT;
  return Cmp::EQ;
}

inline bool less_than(const CosetEntry& a, const CosetEntry& b) {
  return compare(a, b) == Cmp::LT;
}
inline bool greater_than(const CosetEntry& a, const CosetEntry& b) {
  return compare(a, b) == Cmp::GT;
}

// A single coset z + Z.
struct CosetClass {
  CosetTag tag = CosetTag::Int;
  int8_t sign = +1;
  std::string label;

  friend bool operator==(const CosetClass&, const CosetClass&) = default;
  friend auto operator<=>(const CosetClass& a, const CosetClass& b) {
    return std::tie(a.tag, a.label, a.sign) <=> std::tie(b.tag, b.label, b.sign);
  }
};

// A class (z + Z) u (-z + Z).  Int and Half are self-negative, so the sign
// is dropped for every tag.
struct PmClass {
  CosetTag tag = CosetTag::Int;
  std::string label;

  friend bool operator==(const PmClass&, const PmClass&) = default;
  friend auto operator<=>(const PmClass& a, const PmClass& b) {
    return std::tie(a.tag, a.label) <=> std::tie(b.tag, b.label);
  }
};

inline CosetClass thread_of(const CosetEntry& e) {
  return CosetClass{e.tag, e.tag == CosetTag::Generic ? e.sign : int8_t{+1},
                    e.label};
}
inline PmClass pm_of(const CosetEntry& e) { return PmClass{e.tag, e.label}; }
inline PmClass pm_of(const CosetClass& c) { return PmClass{c.tag, c.label}; }
inline CosetClass negate(const CosetClass& c) {
  CosetClass n = c;
  if (c.tag == CosetTag::Generic) n.sign = static_cast<int8_t>(-c.sign);
  return n;
}
inline bool self_negative(const PmClass& c) { return c.tag != CosetTag::Generic; }

// Canonical total key: class tag, then label, then sign (+ before -), then
// offset.  Used for the RowClass representative and all serialized output.
inline std::tuple<int, const std::string&, int, int> canonical_key(const CosetEntry& e) {
  return {static_cast<int>(e.tag), e.label, e.sign < 0 ? 1 : 0, e.offset};
}

inline bool key_less(const CosetEntry& a, const CosetEntry& b) {
  return canonical_key(a) < canonical_key(b);
}

std::string to_string(const CosetEntry& e);
std::string to_string(const CosetClass& c);
std::string to_string(const PmClass& c);

using Row = std::vector<CosetEntry>;

}  // namespace stab
