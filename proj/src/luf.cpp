// SPDX-License-Identifier: Apache-2.0
#include "unbordered/luf.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unbordered {

std::string stats_csv_header() {
  return "instance,n,sigma,total_pushes,t_max,findbeta_calls,findbeta_successes,"
         "wall_time_ns,backend";
}

std::string stats_csv_row(const std::string& instance, const RunStats& s) {
  std::ostringstream os;
  os << instance << ',' << s.n << ',' << s.sigma << ',' << s.total_pushes << ',' << s.t_max
     << ',' << s.findbeta_calls << ',' << s.findbeta_successes << ',' << s.wall_time_ns << ','
     << s.backend;
  return os.str();
}

void handle_popping(ChopStack& st, std::int32_t q, std::int32_t beta,
                    std::span<std::int32_t> hook) {
  while (!st.empty() && st.back().len < beta) {
    hook[st.back().pos - 1] = q;
    st.pop_back();
  }
}

std::int32_t floor_for(std::int32_t j, std::span<const std::int32_t> last_push_len) {
  return 2 * last_push_len[j - 1];
}

std::vector<std::int32_t> max_referrer_lengths(const LsfArrays& lsf) {
  const auto n = static_cast<std::int32_t>(lsf.len.size());
  std::vector<std::int32_t> maxref(n, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    if (lsf.ref[i].has_value()) {
      auto& slot = maxref[*lsf.ref[i] - 1];
      slot = std::max(slot, lsf.len[i]);
    }
  }
  return maxref;
}

bool is_potential_reference(std::int32_t i, std::int32_t luf_i,
                            std::span<const std::int32_t> max_referrer) {
  return max_referrer[i - 1] >= luf_i;
}

namespace {

[[maybe_unused]] std::int32_t ceil_log2(std::int32_t n) {
  return n <= 1 ? 0 : static_cast<std::int32_t>(std::bit_width(static_cast<std::uint32_t>(n - 1)));
}

// Mutable state of one run's hook computations.
struct HookMachine {
  const BetaFinder& beta;
  std::span<std::int32_t> hook;
  std::vector<std::int32_t>& last_push;   // most recent chop length per position
  std::vector<std::int32_t>& push_count;
  RunStats& stats;
  RunDetail* detail;
  ChopStack st;

  std::int32_t query(std::int32_t q, std::int32_t j, std::int32_t floor) {
    ++stats.findbeta_calls;
    const std::int32_t b = beta.find_beta(q, j, floor);
    if (b != 0) ++stats.findbeta_successes;
    return b;
  }

  // Walk hooks from hook[j], chopping the matched suffix each time; every
  // visited position is pushed with its chop length, and entries outlived by
  // a longer chop are popped with their hook memoized to the position the
  // walk had reached.
  std::int32_t find_hook(std::int32_t j) {
    assert(st.empty());
    const std::int32_t floor = floor_for(j, last_push);
    StackRecord* rec = nullptr;
    if (detail != nullptr) {
      detail->stacks.push_back({j, {}});
      rec = &detail->stacks.back();
    }
    std::int32_t q = hook[j - 1];
    std::int32_t b = query(q, j, floor);
    while (b != 0) {
      handle_popping(st, q, b, hook);
      assert(st.empty() || st.back().len >= b);  // lengths never increase upward
      const std::int32_t pos = q - b;
      if (b <= 2 * last_push[pos - 1]) {
        // Chop lengths at a fixed position must more than double; anything
        // else means the walk or the beta search is broken.
        throw std::logic_error("chop length failed to more than double at its position");
      }
      last_push[pos - 1] = b;
      ++push_count[pos - 1];
      ++stats.total_pushes;
      st.push_back({b, pos});
      if (rec != nullptr) {
        rec->pushes.emplace_back(b, pos);
        detail->push_lengths[pos - 1].push_back(b);
      }
      q = hook[pos - 1];
      b = query(q, j, floor);
    }
    handle_popping(st, q, kFlushAll, hook);
    return q;
  }
};

}  // namespace

LufResult compute_luf(const Word& w, const LufOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::int32_t n = w.size();

  LufResult res;
  res.stats.n = n;
  res.stats.sigma = w.sigma();
  res.stats.backend = std::string(backend_name(opts.backend));
  res.luf.assign(n, 0);
  res.hook.resize(n);
  std::iota(res.hook.begin(), res.hook.end(), 1);
  if (opts.record_detail) {
    res.detail.emplace();
    res.detail->push_lengths.assign(n, {});
  }

  if (n > 0) {
    const LsfArrays lsf = compute_lsf(w);
    const std::vector<std::int32_t> maxref = max_referrer_lengths(lsf);
    const BetaFinder beta(w, opts.backend, opts.fp_seed);

    std::vector<std::int32_t> last_push(n, 0), push_count(n, 0);
    HookMachine machine{beta,       res.hook,  last_push,
                        push_count, res.stats, res.detail ? &*res.detail : nullptr,
                        {}};

    for (std::int32_t i = n; i >= 1; --i) {
      if (lsf.len[i - 1] == 0) {
        res.luf[i - 1] = n - i + 1;  // nothing recurs: the whole suffix is unbordered
      } else {
        const std::int32_t j = *lsf.ref[i - 1];
        if (lsf.len[i - 1] < res.luf[j - 1]) {
          // The factor at j sticks out of the recurring part: shift it back.
          res.luf[i - 1] = j + res.luf[j - 1] - i;
        } else if (i >= res.hook[j - 1]) {
          res.luf[i - 1] = res.luf[j - 1];
        } else {
          res.luf[i - 1] = res.hook[j - 1] - i;
        }
      }
      // Hook maintenance runs for every position, not only those whose own
      // factor recurs: any position can be referenced from the left.
      if (is_potential_reference(i, res.luf[i - 1], maxref)) {
        res.references.push_back(i);
        res.hook[i - 1] = machine.find_hook(i);
      }
    }
    res.stats.t_max = *std::max_element(push_count.begin(), push_count.end());
    assert(res.stats.t_max <= 1 + ceil_log2(n));
    assert(res.stats.findbeta_calls <=
           static_cast<std::uint64_t>(n) + res.stats.total_pushes);
  }

  res.stats.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                           start)
          .count());
  return res;
}

std::int32_t mu_of(std::span<const std::int32_t> luf) {
  if (luf.empty()) throw std::invalid_argument("mu_of: empty LUF array");
  return *std::max_element(luf.begin(), luf.end());
}

}  // namespace unbordered
