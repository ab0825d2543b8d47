// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: nine independent checks covering golden values, oracle
// equivalence at scale, the worst-case stack bounds, structural certificates,
// and a large-input timing floor. Each check prints one PASS/FAIL line; the
// exit code is the number of failed checks.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "unbordered/gen.hpp"
#include "unbordered/lsf.hpp"
#include "unbordered/luf.hpp"
#include "unbordered/oracles.hpp"
#include "unbordered/word.hpp"

using namespace unbordered;
using test_support::W;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string info;  // shown in parentheses on the PASS/FAIL line
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed;
  if (s < 1e-3) {
    os << std::setprecision(1) << s * 1e6 << " us";
  } else if (s < 1.0) {
    os << std::setprecision(1) << s * 1e3 << " ms";
  } else {
    os << std::setprecision(2) << s << " s";
  }
  return os.str();
}

int run_check(int idx, const std::string& label, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << idx << ". " << label;
  if (!out.info.empty()) std::cout << " — " << out.info;
  std::cout << " [" << fmt_seconds(secs) << "]\n" << std::flush;
  return out.ok ? 0 : 1;
}

const char* kExample = "aabbabaabbaababbabab";

const std::vector<std::int32_t> kExampleLuf = {20, 3, 12, 9, 12, 3, 14, 3, 11, 3,
                                               10, 5, 2,  3, 5,  2, 2,  2, 2,  1};

// Deterministic corpus shared by the invariant and certification checks.
std::vector<Word> small_corpus() {
  const std::vector<std::int32_t> sigmas = {2, 3, 4, 26};
  std::vector<Word> words;
  words.reserve(1000);
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    const std::int32_t sigma = sigmas[(k - 1) % sigmas.size()];
    const std::int32_t n = 1 + static_cast<std::int32_t>(SplitMix64(k).next() % 128);
    words.push_back(gen_random(n, sigma, k));
  }
  return words;
}

Outcome check_golden_luf() {
  LufResult res = compute_luf(W(kExample));  // warm-up
  std::uint64_t best_ns = res.stats.wall_time_ns;
  for (int rep = 0; rep < 5; ++rep) {
    res = compute_luf(W(kExample));
    best_ns = std::min(best_ns, res.stats.wall_time_ns);
  }
  if (res.luf != kExampleLuf) return {false, "LUF array differs from the golden table"};
  if (mu_of(res.luf) != 20) return {false, "mu != 20"};
  if (best_ns >= 1'000'000) {
    return {false, "runtime " + fmt_seconds(best_ns * 1e-9) + " >= 1 ms"};
  }
  return {true, "20/20 values, " + fmt_seconds(best_ns * 1e-9)};
}

Outcome check_golden_lsf() {
  const auto lsf = compute_lsf(W(kExample));
  const std::vector<std::int32_t> want_len = {5, 6, 5, 4, 3, 4, 3, 4, 3, 2,
                                              1, 4, 3, 2, 1, 3, 2, 1, 0, 0};
  const std::vector<std::int32_t> want_ref = {7,  14, 15, 16, 17, 10, 11, 14, 15, 18,
                                              19, 17, 18, 19, 20, 18, 19, 20, 0,  0};
  if (lsf.len != want_len) return {false, "length row differs"};
  for (std::size_t i = 0; i < want_ref.size(); ++i) {
    const auto& got = lsf.ref[i];
    if (want_ref[i] == 0 ? got.has_value() : (!got.has_value() || *got != want_ref[i])) {
      return {false, "reference row differs at position " + std::to_string(i + 1)};
    }
  }
  return {true, "both rows incl. two nil references"};
}

Outcome check_golden_hook() {
  const auto res = compute_luf(W(kExample));
  if (std::find(res.references.begin(), res.references.end(), 18) == res.references.end()) {
    return {false, "position 18 was never treated as a reference"};
  }
  if (res.hook[17] != 13) {
    return {false, "hook(18) = " + std::to_string(res.hook[17]) + ", want 13"};
  }
  return {true, "hook(18) = 13"};
}

Outcome check_oracle_equivalence() {
  const std::vector<std::int32_t> sigmas = {2, 3, 4, 26};
  LufOptions exact_opts;
  exact_opts.backend = BetaBackend::exact;
  LufOptions fp_opts;
  fp_opts.backend = BetaBackend::fingerprint;

  std::int64_t mismatches = 0;
  std::vector<std::uint64_t> bad_seeds;
  for (std::uint64_t seed = 1; seed <= 10'000; ++seed) {
    const std::int32_t sigma = sigmas[(seed - 1) % sigmas.size()];
    const std::int32_t n = 1 + static_cast<std::int32_t>(SplitMix64(seed).next() % 512);
    const Word w = gen_random(n, sigma, seed);

    const auto lsf_fast = compute_lsf(w);
    const auto lsf_ref = lsf_naive(w);
    const auto want = luf_naive(w);
    const bool ok = lsf_fast.len == lsf_ref.len && lsf_fast.ref == lsf_ref.ref &&
                    compute_luf(w, exact_opts).luf == want &&
                    compute_luf(w, fp_opts).luf == want;
    if (!ok) {
      ++mismatches;
      if (bad_seeds.size() < 5) bad_seeds.push_back(seed);
    }
  }
  if (mismatches != 0) {
    std::ostringstream os;
    os << mismatches << " mismatches; seeds:";
    for (const auto s : bad_seeds) os << " " << s;
    return {false, os.str()};
  }
  return {true, "10000 words x {lsf, luf exact, luf fingerprint}, 0 mismatches"};
}

Outcome check_worstcase_family() {
  LufOptions opts;
  opts.backend = BetaBackend::exact;
  opts.record_detail = true;
  for (std::int32_t t = 3; t <= 5; ++t) {
    const auto res = compute_luf(gen_worstcase(t), opts);
    if (res.stats.t_max != t) {
      return {false, "t=" + std::to_string(t) + ": t_max=" + std::to_string(res.stats.t_max)};
    }
    if (t == 4) {
      const auto& first_pos = res.detail->push_lengths[0];
      if (first_pos != std::vector<std::int32_t>{1, 3, 7, 15}) {
        std::ostringstream os;
        os << "push lengths at position 1 of the t=4 word:";
        for (const auto v : first_pos) os << " " << v;
        return {false, os.str()};
      }
    }
  }
  return {true, "t_max = 3,4,5; position-1 pushes of t=4 word = [1,3,7,15]"};
}

Outcome check_stack_growth_trend() {
  std::vector<double> ratio(17, 0.0);
  for (std::int32_t t = 6; t <= 16; ++t) {
    const Word w = gen_worstcase(t);
    const auto res = compute_luf(w);
    const double n = static_cast<double>(w.size());
    ratio[t] = static_cast<double>(res.stats.total_pushes) / (n * std::log2(n));
  }
  double max_dev = 0.0;
  for (std::int32_t t = 10; t <= 16; ++t) {
    max_dev = std::max(max_dev, std::abs(ratio[t] / ratio[16] - 1.0));
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << "pushes/(n*log2 n) at t=16: " << ratio[16]
     << ", max deviation for t>=10: " << std::setprecision(1) << max_dev * 100 << "%";
  if (max_dev > 0.25) return {false, os.str()};
  return {true, os.str()};
}

Outcome check_stack_invariants(const std::vector<Word>& corpus) {
  LufOptions opts;
  opts.record_detail = true;
  std::int64_t violations = 0;
  std::string first;
  for (const auto& w : corpus) {
    const auto res = compute_luf(w, opts);
    const auto rep = test_support::check_stack_invariants(w, res);
    violations += rep.violations;
    if (first.empty()) first = rep.first;
  }
  if (violations != 0) {
    return {false, std::to_string(violations) + " violations; first: " + first};
  }
  return {true, std::to_string(corpus.size()) + " instrumented runs, 0 violations"};
}

Outcome check_certificates(const std::vector<Word>& corpus) {
  std::vector<Word> words = corpus;
  words.push_back(W(kExample));
  for (const char* s : {"banana", "aaaa", "abababab", "abxabab", "baabab", "a"}) {
    words.push_back(W(s));
  }
  for (std::int32_t t = 3; t <= 5; ++t) words.push_back(gen_worstcase(t));

  std::int64_t positions = 0;
  for (const auto& w : words) {
    const auto res = compute_luf(w);
    positions += w.size();
    if (const auto err = test_support::certify_luf(w, res.luf)) {
      return {false, "word of length " + std::to_string(w.size()) + ": " + *err};
    }
  }
  std::ostringstream os;
  os << words.size() << " words, " << positions << " positions certified";
  return {true, os.str()};
}

Outcome check_scale() {
  const std::int64_t n = 1'000'000;
  const Word w = gen_random(n, 2, 1);
  const auto res = compute_luf(w);
  const double secs = static_cast<double>(res.stats.wall_time_ns) * 1e-9;
  if (res.stats.findbeta_calls > static_cast<std::uint64_t>(n) + res.stats.total_pushes) {
    return {false, "findbeta_calls exceeds n + total_pushes"};
  }
  std::ostringstream os;
  os << "n=1e6 binary word in " << fmt_seconds(secs) << ", findbeta_calls="
     << res.stats.findbeta_calls << " <= n + " << res.stats.total_pushes << " pushes";
  if (secs >= 10.0) return {false, os.str()};
  return {true, os.str()};
}

}  // namespace

int main() {
  std::cout << "acceptance suite: longest unbordered factor library\n";
  const auto corpus = small_corpus();

  int failures = 0;
  failures += run_check(1, "golden LUF array on the 20-symbol example", check_golden_luf);
  failures += run_check(2, "golden LSF rows on the same word", check_golden_lsf);
  failures += run_check(3, "hook of reference 18", check_golden_hook);
  failures += run_check(4, "oracle equivalence on 10,000 random words (n <= 512)",
                        check_oracle_equivalence);
  failures += run_check(5, "worst-case family stack depth (t = 3, 4, 5)",
                        check_worstcase_family);
  failures += run_check(6, "total stack size tracks n*log2(n) on the worst-case family",
                        check_stack_growth_trend);
  failures += run_check(7, "stack-discipline invariants on 1,000 random words",
                        [&] { return check_stack_invariants(corpus); });
  failures += run_check(8, "structural certification of every reported factor",
                        [&] { return check_certificates(corpus); });
  failures += run_check(9, "scale run: n = 10^6 in under 10 s", check_scale);

  std::cout << (failures == 0 ? "all checks passed\n"
                              : std::to_string(failures) + " check(s) failed\n");
  return failures;
}
