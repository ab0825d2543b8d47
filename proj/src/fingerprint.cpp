// SPDX-License-Identifier: Apache-2.0
#include "unbordered/fingerprint.hpp"

#include <stdexcept>

#include "unbordered/gen.hpp"

namespace unbordered {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

}  // namespace

FingerprintIndex::FingerprintIndex(const Word& w, std::uint64_t seed) : n_(w.size()) {
  SplitMix64 rng(seed);
  const auto s = w.symbols();
  for (int t = 0; t < 2; ++t) {
    base_[t] = 2 + rng.next() % (kMod[t] - 3);
    prefix_[t].assign(n_ + 1, 0);
    power_[t].assign(n_ + 1, 1);
    for (std::int32_t k = 0; k < n_; ++k) {
      prefix_[t][k + 1] =
          (mulmod(prefix_[t][k], base_[t], kMod[t]) + static_cast<std::uint64_t>(s[k])) % kMod[t];
      power_[t][k + 1] = mulmod(power_[t][k], base_[t], kMod[t]);
    }
  }
}

std::uint64_t FingerprintIndex::factor_hash(int t, std::int32_t i, std::int32_t len) const {
  // Hash of w[i..i+len-1], 1-based start; caller guarantees bounds.
  const std::uint64_t whole = prefix_[t][i - 1 + len];
  const std::uint64_t head = mulmod(prefix_[t][i - 1], power_[t][len], kMod[t]);
  return (whole + kMod[t] - head) % kMod[t];
}

bool FingerprintIndex::factor_eq(std::int32_t i, std::int32_t j, std::int32_t len) const {
  if (len < 0 || i < 1 || j < 1 || i - 1 + len > n_ || j - 1 + len > n_) {
    throw std::out_of_range("factor_eq: factor out of range");
  }
  if (len == 0 || i == j) return true;
  return factor_hash(0, i, len) == factor_hash(0, j, len) &&
         factor_hash(1, i, len) == factor_hash(1, j, len);
}

}  // namespace unbordered
