// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "unbordered/word.hpp"

namespace unbordered {

/// SplitMix64 (Steele, Lea, Flood): tiny, fast, and bit-identical on every
/// platform, which keeps generated golden fixtures portable.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// Member t of the two-letter worst-case family that drives the chop-stack
/// machinery to its Theta(n log n) total size. Length is 2^(t+1) - 2.
/// Throws std::invalid_argument for t < 2 or t > 26 (memory guard).
Word gen_worstcase(int t);

/// Uniform random word: n symbols drawn as 1 + SplitMix64(seed) mod sigma,
/// then rank-reduced so unused symbols do not inflate sigma. Deterministic
/// in (n, sigma, seed). Throws std::invalid_argument for n < 0 or sigma < 1.
Word gen_random(std::int32_t n, std::int32_t sigma, std::uint64_t seed);

/// Instance description shared by the generator and benchmark commands.
struct GenSpec {
  enum class Family { worstcase, random };
  Family family = Family::random;
  int t = 0;                  // worstcase
  std::int32_t n = 0;         // random
  std::int32_t sigma = 2;     // random
  std::uint64_t seed = 1;     // random
};

Word generate(const GenSpec& spec);

/// Compact instance label used in benchmark CSV rows, e.g. "worstcase(t=4)"
/// or "random(n=100,sigma=2,seed=42)".
std::string describe(const GenSpec& spec);

}  // namespace unbordered
