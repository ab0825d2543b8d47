// SPDX-License-Identifier: Apache-2.0
#include "unbordered/suffix_index.hpp"

#include <utility>

namespace unbordered {

SuffixIndex build_suffix_index(const Word& w) {
  SuffixIndex idx;
  const std::int32_t n = w.size();
  if (n == 0) return idx;
  const auto s = w.symbols();

  std::vector<std::int32_t> sa(n), rnk(n), tmp(n), by2(n), cnt;
  for (std::int32_t i = 0; i < n; ++i) {
    sa[i] = i;
    rnk[i] = s[i];  // 1..sigma <= n
  }

  const auto exclusive_scan = [](std::vector<std::int32_t>& c) {
    std::int32_t sum = 0;
    for (auto& v : c) {
      const std::int32_t t = v;
      v = sum;
      sum += t;
    }
  };

  // Rank doubling: each round sorts by the pair (rank of first half, rank of
  // second half) with two stable counting passes, then compacts ranks.
  for (std::int32_t len = 1;; len <<= 1) {
    const auto key2 = [&](std::int32_t i) { return i + len < n ? rnk[i + len] + 1 : 0; };

    cnt.assign(n + 2, 0);
    for (std::int32_t i = 0; i < n; ++i) ++cnt[key2(i)];
    exclusive_scan(cnt);
    for (std::int32_t i = 0; i < n; ++i) by2[cnt[key2(i)]++] = i;

    cnt.assign(n + 2, 0);
    for (std::int32_t i = 0; i < n; ++i) ++cnt[rnk[i]];
    exclusive_scan(cnt);
    for (std::int32_t i : by2) sa[cnt[rnk[i]]++] = i;

    std::int32_t r = 0;
    tmp[sa[0]] = 0;
    for (std::int32_t k = 1; k < n; ++k) {
      if (rnk[sa[k - 1]] != rnk[sa[k]] || key2(sa[k - 1]) != key2(sa[k])) ++r;
      tmp[sa[k]] = r;
    }
    rnk.swap(tmp);
    if (r == n - 1) break;
  }

  idx.sa = std::move(sa);
  idx.rank = std::move(rnk);  // fully compacted ranks are the inverse permutation

  // Kasai's LCP: walk positions left to right, reusing h-1 of the previous
  // match length.
  idx.lcp.assign(n, 0);
  std::int32_t h = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    const std::int32_t r = idx.rank[i];
    if (r > 0) {
      const std::int32_t p = idx.sa[r - 1];
      while (i + h < n && p + h < n && s[i + h] == s[p + h]) ++h;
      idx.lcp[r] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return idx;
}

}  // namespace unbordered
