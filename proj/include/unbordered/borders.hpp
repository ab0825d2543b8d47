// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/// Border array over a raw symbol span. result[k] is the length of the
/// longest proper border of the prefix of length k+1; result[0] == 0.
std::vector<std::int32_t> border_array(std::span<const std::int32_t> symbols);

/// Border array of the whole word.
std::vector<std::int32_t> border_array(const Word& w);

/// Shortest period of w: |w| minus the longest border length.
/// Throws std::invalid_argument on the empty word.
std::int32_t min_period(const Word& w);

/// True iff the factor w[i..j] (1-based, inclusive) has no nonempty proper
/// border. Single symbols are unbordered. Throws std::out_of_range unless
/// 1 <= i <= j <= |w|.
bool is_unbordered(const Word& w, std::int32_t i, std::int32_t j);

struct Decomposition {
  /// Piece lengths in left-to-right order; they sum to |w|.
  std::vector<std::int32_t> piece_lengths;
};

/// Decompose w into unbordered prefixes of w, scanning right to left:
/// while a prefix w[1..m] remains, remove its shortest suffix that is also a
/// prefix of w (the minimum of the border chain of w[1..m]; m itself when
/// w[1..m] is unbordered). Every removed piece is an unbordered prefix of w.
/// The empty word yields an empty decomposition.
Decomposition unbordered_decomposition(const Word& w);

}  // namespace unbordered
