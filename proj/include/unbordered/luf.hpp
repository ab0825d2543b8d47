// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unbordered/beta.hpp"
#include "unbordered/lsf.hpp"
#include "unbordered/word.hpp"

namespace unbordered {

/// Counters for one longest-unbordered-factor computation.
struct RunStats {
  std::int64_t n = 0;
  std::int32_t sigma = 0;
  std::uint64_t total_pushes = 0;       // stack pushes across all hook computations
  std::int32_t t_max = 0;               // max number of stacks any one position joined
  std::uint64_t findbeta_calls = 0;
  std::uint64_t findbeta_successes = 0; // calls returning nonzero (== total_pushes)
  std::uint64_t wall_time_ns = 0;
  std::string backend;
};

std::string stats_csv_header();
std::string stats_csv_row(const std::string& instance, const RunStats& s);

/// Push history of one hook computation: the reference j whose stack it was,
/// and the (length, position) pairs in push order. Recorded only when
/// LufOptions::record_detail is set.
struct StackRecord {
  std::int32_t reference = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> pushes;
};

struct RunDetail {
  std::vector<StackRecord> stacks;                      // chronological; references descend
  std::vector<std::vector<std::int32_t>> push_lengths;  // [pos-1] -> lengths in push order
};

struct LufOptions {
  BetaBackend backend = BetaBackend::fingerprint;
  bool record_detail = false;
  std::uint64_t fp_seed = kDefaultFpSeed;
};

struct LufResult {
  /// luf[i-1] = length of the longest unbordered factor starting at i.
  std::vector<std::int32_t> luf;
  /// Final hook values, 1-based; hook[j-1] == j unless j became a potential
  /// reference or was repositioned while some stack was flushed. For every
  /// position in `references` this is the computed hook of that reference.
  std::vector<std::int32_t> hook;
  /// Potential references, in processing order (decreasing position).
  std::vector<std::int32_t> references;
  RunStats stats;
  std::optional<RunDetail> detail;
};

/// Entry of the chop stack: a prefix length that was chopped, and the
/// position where the chop happened. Lengths are non-increasing from bottom
/// to top.
struct ChopEntry {
  std::int32_t len = 0;
  std::int32_t pos = 0;
};
using ChopStack = std::vector<ChopEntry>;

/// Sentinel beta that pops every entry (used when a hook computation ends).
inline constexpr std::int32_t kFlushAll = std::numeric_limits<std::int32_t>::max();

/// Pop every entry with len < beta and memoize hook[pos-1] = q for each.
void handle_popping(ChopStack& st, std::int32_t q, std::int32_t beta,
                    std::span<std::int32_t> hook);

/// Start threshold for the beta queries of one hook computation: twice the
/// most recent length with which j itself was pushed onto a stack (0 if j
/// was never pushed). Candidate beta values are searched strictly above it.
std::int32_t floor_for(std::int32_t j, std::span<const std::int32_t> last_push_len);

/// max_referrer[j-1] = largest lsf.len over positions whose lsf.ref is j
/// (0 when nothing refers to j).
std::vector<std::int32_t> max_referrer_lengths(const LsfArrays& lsf);

/// Position i is a potential reference iff some earlier position refers to i
/// with a factor at least as long as luf_i, i.e. its hook may be consulted.
bool is_potential_reference(std::int32_t i, std::int32_t luf_i,
                            std::span<const std::int32_t> max_referrer);

/// Longest unbordered factor at every position, right to left, in
/// O(n log n) total: positions with no later recurrence are their whole
/// suffix; positions whose recurring factor is shorter than the referenced
/// LUF copy the referenced answer shifted; the rest are resolved through the
/// reference's hook, which is maintained by chop-stack bookkeeping.
LufResult compute_luf(const Word& w, const LufOptions& opts = {});

/// Maximum of a computed LUF array; throws std::invalid_argument when empty.
std::int32_t mu_of(std::span<const std::int32_t> luf);

}  // namespace unbordered
