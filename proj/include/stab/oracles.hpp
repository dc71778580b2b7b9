// oracles.hpp — brute-force subsequence statistics.
//
// oracle_ell and oracle_ctc maximize the total length of k disjoint
// non-decreasing (resp. strictly decreasing) subsequences by exhaustive
// search over subsets, independent of the insertion algorithm they are used
// to check.  Exponential in the word length; words are capped at 16 letters.
#pragma once

#include <span>

#include "stab/entry.hpp"

namespace stab {

int oracle_ell(std::span<const CosetEntry> w, int k);
int oracle_ctc(std::span<const CosetEntry> w, int k);

}  // namespace stab
