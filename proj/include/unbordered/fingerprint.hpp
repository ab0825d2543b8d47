// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/// Seed from which the two polynomial-hash bases are derived by default.
inline constexpr std::uint64_t kDefaultFpSeed = 0x5eedf00d2026ULL;

/// Karp-Rabin prefix fingerprints under two independent 61-bit prime moduli.
///
/// factor_eq answers "are these two factors equal?" in O(1) with error
/// probability around (len/2^61)^2 per query; callers that cannot tolerate
/// one-sided errors re-verify matches symbol by symbol.
class FingerprintIndex {
 public:
  explicit FingerprintIndex(const Word& w, std::uint64_t seed = kDefaultFpSeed);

  /// Fingerprint comparison of w[i..i+len-1] and w[j..j+len-1] (1-based
  /// starts). len == 0 compares empty factors (true). Throws
  /// std::out_of_range if either factor leaves the word.
  [[nodiscard]] bool factor_eq(std::int32_t i, std::int32_t j, std::int32_t len) const;

  [[nodiscard]] std::int32_t size() const { return n_; }

 private:
  static constexpr std::array<std::uint64_t, 2> kMod = {
      2305843009213693951ULL,  // 2^61 - 1
      2305843009213693921ULL,  // largest prime below it
  };

  [[nodiscard]] std::uint64_t factor_hash(int t, std::int32_t i, std::int32_t len) const;

  std::int32_t n_ = 0;
  std::array<std::uint64_t, 2> base_{};
  std::array<std::vector<std::uint64_t>, 2> prefix_{};  // prefix_[t][k] = hash of first k symbols
  std::array<std::vector<std::uint64_t>, 2> power_{};   // power_[t][k] = base^k
};

}  // namespace unbordered
