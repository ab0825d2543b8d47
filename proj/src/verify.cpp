// SPDX-License-Identifier: Apache-2.0
#include "unbordered/verify.hpp"

#include <sstream>

#include "unbordered/gen.hpp"
#include "unbordered/lsf.hpp"
#include "unbordered/luf.hpp"
#include "unbordered/oracles.hpp"

namespace unbordered {

namespace {

constexpr std::size_t kMaxStoredFailures = 16;

void report(VerifyReport& rep, std::ostream* log, std::uint64_t seed, std::int32_t n,
            std::int32_t sigma, const std::string& what) {
  ++rep.mismatches;
  if (rep.failures.size() < kMaxStoredFailures) {
    rep.failures.push_back({seed, n, sigma, what});
  }
  if (log != nullptr) {
    *log << "mismatch: seed=" << seed << " n=" << n << " sigma=" << sigma << " (" << what
         << ")\n";
  }
}

}  // namespace

VerifyReport verify_random_words(const VerifyOptions& opts, std::ostream* log,
                                 const LufCorruptor& corrupt) {
  VerifyReport rep;
  if (opts.trials <= 0 || opts.n_max < 1 || opts.sigmas.empty()) return rep;

  for (std::int64_t k = 1; k <= opts.trials; ++k) {
    const std::uint64_t seed = opts.seed0 + static_cast<std::uint64_t>(k) - 1;
    const std::int32_t sigma = opts.sigmas[(k - 1) % static_cast<std::int64_t>(opts.sigmas.size())];
    const std::int32_t n =
        1 + static_cast<std::int32_t>(SplitMix64(seed).next() % static_cast<std::uint64_t>(opts.n_max));
    const Word w = gen_random(n, sigma, seed);
    ++rep.cases;

    const LsfArrays fast_lsf = compute_lsf(w);
    const LsfArrays ref_lsf = lsf_naive(w);
    if (fast_lsf.len != ref_lsf.len) {
      report(rep, log, seed, n, sigma, "lsf lengths");
      continue;
    }
    if (fast_lsf.ref != ref_lsf.ref) {
      report(rep, log, seed, n, sigma, "lsf references");
      continue;
    }

    LufResult fast = compute_luf(w, {.backend = opts.backend});
    if (corrupt) corrupt(fast.luf);
    const std::vector<std::int32_t> ref_luf = luf_naive(w);
    if (fast.luf != ref_luf) {
      report(rep, log, seed, n, sigma, "luf array");
      continue;
    }

    bool hook_ok = true;
    for (const std::int32_t j : fast.references) {
      if (fast.hook[j - 1] != hook_naive(w, j)) {
        std::ostringstream what;
        what << "hook at reference " << j;
        report(rep, log, seed, n, sigma, what.str());
        hook_ok = false;
        break;
      }
    }
    if (!hook_ok) continue;
  }
  return rep;
}

}  // namespace unbordered
