// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "unbordered/fingerprint.hpp"
#include "unbordered/word.hpp"

namespace unbordered {

enum class BetaBackend {
  exact,                 // border-array scan, deterministic, O(q + n - j) per call
  fingerprint,           // doubling ranges of O(1) fingerprint probes
  fingerprint_paranoid,  // fingerprint, but every match re-verified symbol by symbol
};

/// Parses "exact" / "fingerprint" / "fingerprint-paranoid"; throws
/// std::invalid_argument otherwise.
BetaBackend parse_backend(std::string_view name);
std::string_view backend_name(BetaBackend backend);

/// Deterministic reference implementation of the beta query: the smallest
/// beta > floor such that the prefix w[j..j+beta-1] of w[j..n] equals the
/// suffix w[q-beta..q-1] of w[1..q-1]; 0 if no such beta exists. Candidates
/// are implicitly capped at min(n - j + 1, q - 1). Built on one border-array
/// pass over pattern + separator + text. Preconditions: 1 <= q <= j <= n and
/// floor >= 0; violations throw std::invalid_argument.
std::int32_t find_beta_exact(const Word& w, std::int32_t q, std::int32_t j, std::int32_t floor);

/// Per-word query object answering beta queries through a chosen backend.
/// The fingerprint backends probe candidate lengths in doubling ranges
/// [d, 2d) starting at d = floor + 1, so a successful query returning beta
/// costs O(beta - floor) probes of O(1) each.
class BetaFinder {
 public:
  BetaFinder(const Word& w, BetaBackend backend, std::uint64_t fp_seed = kDefaultFpSeed);

  /// Same contract as find_beta_exact.
  [[nodiscard]] std::int32_t find_beta(std::int32_t q, std::int32_t j, std::int32_t floor) const;

  [[nodiscard]] BetaBackend backend() const { return backend_; }

  /// Fingerprint matches rejected by symbol-wise re-verification
  /// (fingerprint_paranoid only; expected to stay 0).
  [[nodiscard]] std::uint64_t false_positives() const { return false_positives_; }

 private:
  const Word* w_;
  BetaBackend backend_;
  std::unique_ptr<FingerprintIndex> fp_;  // null for the exact backend
  mutable std::uint64_t false_positives_ = 0;
};

}  // namespace unbordered
