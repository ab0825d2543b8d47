// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace unbordered {

/// A word over a dense integer alphabet.
///
/// Symbols are stored as ranks in 1..sigma, where sigma is the number of
/// distinct symbols actually present. Rank order preserves the order of the
/// original symbols, so lexicographic comparisons of factors are unaffected
/// by the reduction. Positions in the public API are 1-based throughout.
class Word {
 public:
  Word() = default;

  /// Build from raw bytes; each byte value is one symbol.
  static Word from_bytes(std::string_view bytes);

  /// Build from arbitrary integer tokens; each token is one symbol.
  static Word from_tokens(std::span<const long long> tokens);

  /// Build from symbols already in dense rank form (every value in 1..sigma,
  /// every rank in that range present). Throws std::invalid_argument if not.
  static Word from_ranks(std::vector<std::int32_t> ranks);

  [[nodiscard]] std::int32_t size() const { return static_cast<std::int32_t>(symbols_.size()); }
  [[nodiscard]] std::int32_t sigma() const { return sigma_; }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }

  /// Symbol at 1-based position pos; throws std::out_of_range.
  [[nodiscard]] std::int32_t at(std::int32_t pos) const;

  /// 0-based backing storage, for algorithm internals.
  [[nodiscard]] std::span<const std::int32_t> symbols() const { return symbols_; }

  bool operator==(const Word&) const = default;

 private:
  std::vector<std::int32_t> symbols_;
  std::int32_t sigma_ = 0;
};

/// Dense rank reduction: map each distinct input value to its rank (1-based)
/// among the distinct values, preserving order. Idempotent: applying it to a
/// word's own symbol sequence reproduces the word.
Word rank_reduce(std::span<const long long> raw);
Word rank_reduce(std::string_view bytes);

}  // namespace unbordered
