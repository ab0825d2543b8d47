// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "unbordered/gen.hpp"
#include "unbordered/luf.hpp"
#include "unbordered/oracles.hpp"

using test_support::W;
using namespace unbordered;

namespace {
const char* kExample = "aabbabaabbaababbabab";
const std::vector<std::int32_t> kExampleLuf = {20, 3, 12, 9, 12, 3, 14, 3, 11, 3,
                                               10, 5, 2,  3, 5,  2, 2,  2, 2,  1};
}  // namespace

TEST_CASE("LUF array of the 20-symbol example word") {
  for (const auto backend :
       {BetaBackend::exact, BetaBackend::fingerprint, BetaBackend::fingerprint_paranoid}) {
    const auto res = compute_luf(W(kExample), {.backend = backend});
    CAPTURE(backend_name(backend));
    CHECK(res.luf == kExampleLuf);
    CHECK(mu_of(res.luf) == 20);
  }
}

TEST_CASE("hook of reference 18 on the example word") {
  const auto res = compute_luf(W(kExample), {.record_detail = true});
  REQUIRE(std::count(res.references.begin(), res.references.end(), 18) == 1);
  CHECK(res.hook[18 - 1] == 13);
}

TEST_CASE("references whose first chop fails keep their own position as hook") {
  // In aba, position 3 is referenced (the a at position 1) but nothing chops:
  // no prefix of "a" ends w[1..2] = "ab".
  const auto res = compute_luf(W("aba"));
  CHECK(res.luf == std::vector<std::int32_t>{2, 2, 1});
  REQUIRE(std::count(res.references.begin(), res.references.end(), 3) == 1);
  CHECK(res.hook[3 - 1] == 3);
  CHECK(res.stats.total_pushes == 0);
}

TEST_CASE("potential references are detected regardless of their own recurrence") {
  // Position 6 of abxabab recurs nowhere later, yet position 1 references it;
  // skipping its hook computation would turn luf[1] into 5.
  const Word w = W("abxabab");
  const auto res = compute_luf(w);
  CHECK(res.luf == std::vector<std::int32_t>{3, 5, 5, 2, 2, 2, 1});
  CHECK(res.luf == luf_naive(w));
  CHECK(std::count(res.references.begin(), res.references.end(), 6) == 1);
}

TEST_CASE("single symbol and empty word") {
  const auto one = compute_luf(W("a"));
  CHECK(one.luf == std::vector<std::int32_t>{1});
  CHECK(one.references.empty());
  CHECK(one.stats.findbeta_calls == 0);
  CHECK(one.stats.t_max == 0);

  const auto zero = compute_luf(W(""));
  CHECK(zero.luf.empty());
  CHECK(zero.hook.empty());
  CHECK(zero.stats.n == 0);
}

TEST_CASE("periodic words") {
  CHECK(compute_luf(W("aaaa")).luf == std::vector<std::int32_t>{1, 1, 1, 1});
  CHECK(compute_luf(W("abababab")).luf ==
        std::vector<std::int32_t>{2, 2, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("handle_popping pops strictly shorter entries and memoizes hooks") {
  ChopStack st = {{3, 5}, {1, 2}};
  std::vector<std::int32_t> hook = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  handle_popping(st, 9, 2, hook);
  REQUIRE(st.size() == 1);
  CHECK(st[0].len == 3);
  CHECK(hook[2 - 1] == 9);   // popped entry memoized to the current walk position
  CHECK(hook[5 - 1] == 5);   // survivor untouched

  handle_popping(st, 4, kFlushAll, hook);
  CHECK(st.empty());
  CHECK(hook[5 - 1] == 4);
}

TEST_CASE("floor_for doubles the most recent chop length") {
  const std::vector<std::int32_t> last_push = {0, 2, 0, 7};
  CHECK(floor_for(1, last_push) == 0);
  CHECK(floor_for(2, last_push) == 4);
  CHECK(floor_for(4, last_push) == 14);
}

TEST_CASE("potential-reference predicate over the example word") {
  const auto lsf = compute_lsf(W(kExample));
  const auto maxref = max_referrer_lengths(lsf);
  // Position 15 is referenced by position 3 with length 5 and by 9 with 3.
  CHECK(maxref[15 - 1] == 5);
  CHECK(is_potential_reference(15, 5, maxref));
  CHECK_FALSE(is_potential_reference(15, 6, maxref));
  // Position 1 is referenced by nothing.
  CHECK(maxref[1 - 1] == 0);
  CHECK_FALSE(is_potential_reference(1, 20, maxref));
  // Position 19 recurs nowhere later but is referenced by 11 with length 1
  // and by 14 and 17 with length 2.
  CHECK(maxref[19 - 1] == 2);
  CHECK(is_potential_reference(19, 2, maxref));
}

TEST_CASE("instrumentation detail") {
  const auto res = compute_luf(gen_worstcase(4), {.record_detail = true});
  REQUIRE(res.detail.has_value());
  CHECK(res.detail->push_lengths[0] == std::vector<std::int32_t>{1, 3, 7, 15});

  std::uint64_t pushed = 0;
  std::int32_t deepest = 0;
  for (const auto& lens : res.detail->push_lengths) {
    pushed += lens.size();
    deepest = std::max(deepest, static_cast<std::int32_t>(lens.size()));
  }
  CHECK(pushed == res.stats.total_pushes);
  CHECK(deepest == res.stats.t_max);

  std::uint64_t recorded = 0;
  for (const auto& rec : res.detail->stacks) recorded += rec.pushes.size();
  CHECK(recorded == res.stats.total_pushes);

  CHECK_FALSE(compute_luf(gen_worstcase(4)).detail.has_value());
}

TEST_CASE("run statistics") {
  const auto res = compute_luf(gen_random(500, 2, 11));
  CHECK(res.stats.n == 500);
  CHECK(res.stats.sigma == 2);
  CHECK(res.stats.backend == "fingerprint");
  CHECK(res.stats.findbeta_successes == res.stats.total_pushes);
  CHECK(res.stats.findbeta_calls <= 500 + res.stats.total_pushes);
  CHECK(res.stats.wall_time_ns > 0);

  const auto csv = stats_csv_row("random(n=500;sigma=2;seed=11)", res.stats);
  CHECK(csv.find("random(n=500;sigma=2;seed=11),500,2,") == 0);
  CHECK(stats_csv_header() ==
        "instance,n,sigma,total_pushes,t_max,findbeta_calls,findbeta_successes,"
        "wall_time_ns,backend");
}

TEST_CASE("references are emitted in processing order") {
  const auto res = compute_luf(gen_random(300, 2, 5));
  for (std::size_t k = 1; k < res.references.size(); ++k) {
    CHECK(res.references[k - 1] > res.references[k]);
  }
}

TEST_CASE("mu_of") {
  CHECK(mu_of(std::vector<std::int32_t>{2, 5, 1}) == 5);
  CHECK_THROWS_AS(mu_of(std::vector<std::int32_t>{}), std::invalid_argument);
}

TEST_CASE("backends agree on random words") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const std::int32_t n = 1 + static_cast<std::int32_t>(SplitMix64(seed).next() % 256);
    const Word w = gen_random(n, seed % 2 == 0 ? 2 : 4, seed);
    const auto exact = compute_luf(w, {.backend = BetaBackend::exact});
    const auto fp = compute_luf(w, {.backend = BetaBackend::fingerprint});
    const auto par = compute_luf(w, {.backend = BetaBackend::fingerprint_paranoid});
    CAPTURE(seed);
    REQUIRE(exact.luf == fp.luf);
    REQUIRE(exact.luf == par.luf);
    REQUIRE(exact.hook == fp.hook);
    REQUIRE(exact.references == fp.references);
  }
}

TEST_CASE("hooks of every reference match the greedy oracle") {
  for (std::uint64_t seed = 300; seed <= 360; ++seed) {
    const std::int32_t n = 1 + static_cast<std::int32_t>(SplitMix64(seed).next() % 96);
    const Word w = gen_random(n, 2, seed);
    const auto res = compute_luf(w);
    CAPTURE(seed);
    for (const std::int32_t j : res.references) {
      REQUIRE(res.hook[j - 1] == hook_naive(w, j));
    }
  }
}

TEST_CASE("stack invariants hold on random words") {
  for (std::uint64_t seed = 700; seed <= 760; ++seed) {
    const std::int32_t n = 1 + static_cast<std::int32_t>(SplitMix64(seed).next() % 128);
    const Word w = gen_random(n, seed % 2 == 0 ? 2 : 3, seed);
    const auto res = compute_luf(w, {.record_detail = true});
    const auto rep = test_support::check_stack_invariants(w, res);
    CAPTURE(seed);
    CAPTURE(rep.first);
    REQUIRE(rep.violations == 0);
  }
}
