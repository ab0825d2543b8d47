// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/// Quadratic reference: for each start position, the border array of that
/// suffix; the answer is the longest prefix whose border length is zero.
std::vector<std::int32_t> luf_naive(const Word& w);

/// Length of the longest unbordered factor of w (brute force, via
/// luf_naive). Throws std::invalid_argument on the empty word.
std::int32_t mu(const Word& w);

/// Reference hook computation for position j (1-based): starting at q = j,
/// repeatedly chop from the right end of w[1..q-1] the shortest suffix that
/// is a prefix of w[j..n], until no chop applies; returns the final q.
std::int32_t hook_naive(const Word& w, std::int32_t j);

}  // namespace unbordered
