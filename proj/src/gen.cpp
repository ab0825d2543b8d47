// SPDX-License-Identifier: Apache-2.0
#include "unbordered/gen.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace unbordered {

Word gen_worstcase(int t) {
  if (t < 2) throw std::invalid_argument("gen_worstcase: t must be >= 2");
  if (t > 26) throw std::invalid_argument("gen_worstcase: t > 26 would not fit in memory");
  std::string w;
  std::string block = "a";
  for (int i = 1; i <= t - 1; ++i) {
    w = w + block + w;
    block += 'b';
  }
  w += block;
  w = w + w;  // length 2^(t+1) - 2
  return Word::from_bytes(w);
}

Word gen_random(std::int32_t n, std::int32_t sigma, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_random: n must be >= 0");
  if (sigma < 1) throw std::invalid_argument("gen_random: sigma must be >= 1");
  SplitMix64 rng(seed);
  std::vector<long long> raw(n);
  for (auto& v : raw) v = 1 + static_cast<long long>(rng.next() % static_cast<std::uint64_t>(sigma));
  // Rank reduction keeps sigma honest when not every symbol was drawn.
  return rank_reduce(std::span<const long long>(raw));
}

Word generate(const GenSpec& spec) {
  if (spec.family == GenSpec::Family::worstcase) return gen_worstcase(spec.t);
  return gen_random(spec.n, spec.sigma, spec.seed);
}

std::string describe(const GenSpec& spec) {
  std::ostringstream os;
  if (spec.family == GenSpec::Family::worstcase) {
    os << "worstcase(t=" << spec.t << ")";
  } else {
    os << "random(n=" << spec.n << ";sigma=" << spec.sigma << ";seed=" << spec.seed << ")";
  }
  return os.str();
}

}  // namespace unbordered
