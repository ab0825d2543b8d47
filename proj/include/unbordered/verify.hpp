// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "unbordered/beta.hpp"

namespace unbordered {

/// Randomized cross-check of the fast paths against the quadratic oracles.
///
/// Trial k (1-based) draws sigma = sigmas[(k-1) mod |sigmas|] and
/// n = 1 + SplitMix64(seed0 + k - 1).next() mod n_max, then checks on
/// gen_random(n, sigma, seed0 + k - 1):
///   - compute_lsf == lsf_naive (lengths and rightmost references),
///   - compute_luf == luf_naive,
///   - the hook of every potential reference == hook_naive.
struct VerifyOptions {
  std::int64_t trials = 1000;
  std::int32_t n_max = 512;
  std::vector<std::int32_t> sigmas = {2, 3, 4, 26};
  std::uint64_t seed0 = 1;
  BetaBackend backend = BetaBackend::fingerprint;
};

struct VerifyFailure {
  std::uint64_t seed = 0;
  std::int32_t n = 0;
  std::int32_t sigma = 0;
  std::string what;
};

struct VerifyReport {
  std::int64_t cases = 0;
  std::int64_t mismatches = 0;
  std::vector<VerifyFailure> failures;  // capped at the first 16
};

/// Test-only fault injection: mutates the fast LUF array before comparison.
using LufCorruptor = std::function<void(std::vector<std::int32_t>&)>;

VerifyReport verify_random_words(const VerifyOptions& opts,
                                 std::ostream* log = nullptr,
                                 const LufCorruptor& corrupt = nullptr);

}  // namespace unbordered
