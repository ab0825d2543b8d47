// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/// Suffix array, its inverse, and the LCP array of a word.
///
/// Internal arrays are 0-based: sa[k] is the 0-based start of the k-th suffix
/// in lexicographic order, rank is the inverse permutation, and lcp[k] is the
/// longest common prefix length of the suffixes at sa[k-1] and sa[k]
/// (lcp[0] == 0).
struct SuffixIndex {
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> rank;
  std::vector<std::int32_t> lcp;
};

/// O(n log n) construction: rank doubling with counting sort, then Kasai's
/// LCP computation.
SuffixIndex build_suffix_index(const Word& w);

}  // namespace unbordered
