// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/// Longest successor factor arrays (both indexed by 1-based position via
/// index pos-1).
///
/// len[i-1] is the length of the longest factor starting at i that also
/// occurs starting at some strictly later position; 0 if none (always 0 at
/// the last position). ref[i-1] is the rightmost such later start position,
/// or nullopt when len[i-1] == 0.
struct LsfArrays {
  std::vector<std::int32_t> len;
  std::vector<std::optional<std::int32_t>> ref;
};

/// O(n alpha(n)) computation on top of the suffix index: one monotonic-stack
/// sweep over suffix-array order yields, for every position, the maximum LCP
/// with a neighbouring suffix that starts later in the text; a union-find
/// pass over LCP values in decreasing order then picks the rightmost
/// occurrence achieving that maximum.
LsfArrays compute_lsf(const Word& w);

/// Quadratic reference oracle: rolling longest-common-extension table,
/// no suffix-array machinery shared with compute_lsf.
LsfArrays lsf_naive(const Word& w);

}  // namespace unbordered
