// SPDX-License-Identifier: Apache-2.0
#include "unbordered/lsf.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "unbordered/suffix_index.hpp"

namespace unbordered {

namespace {

// Union-find over suffix-array slots, tracking each component's maximum
// sa value (the rightmost text position in the component).
struct Dsu {
  std::vector<std::int32_t> parent, size, comp_max;

  explicit Dsu(const std::vector<std::int32_t>& sa)
      : parent(sa.size()), size(sa.size(), 1), comp_max(sa) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    comp_max[a] = std::max(comp_max[a], comp_max[b]);
  }
};

}  // namespace

LsfArrays compute_lsf(const Word& w) {
  const std::int32_t n = w.size();
  LsfArrays out;
  out.len.assign(n, 0);
  out.ref.assign(n, std::nullopt);
  if (n == 0) return out;

  const SuffixIndex idx = build_suffix_index(w);
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();

  // Stage 1: lengths. For every suffix, the best match starting later in the
  // text is attained at the nearest suffix-array neighbour (left or right)
  // among those with a larger text position. One monotonic stack sweep finds
  // both sides: entries hold a text position and the minimum LCP between
  // this entry and the entry below it; popped entries meet their nearest
  // larger-position neighbour on the right, surviving tops serve as the
  // nearest one on the left.
  struct Entry {
    std::int32_t pos;
    std::int32_t seg;
  };
  std::vector<Entry> st;
  st.reserve(n);
  for (std::int32_t k = 0; k < n; ++k) {
    std::int32_t cur = k > 0 ? idx.lcp[k] : 0;  // min LCP from the top entry down to k
    const std::int32_t p = idx.sa[k];
    while (!st.empty() && st.back().pos < p) {
      out.len[st.back().pos] = std::max(out.len[st.back().pos], cur);
      cur = std::min(cur, st.back().seg);
      st.pop_back();
    }
    if (!st.empty()) out.len[p] = std::max(out.len[p], cur);
    st.push_back({p, st.empty() ? kInf : cur});
  }

  // Stage 2: rightmost references, offline. Sweep thresholds L = n..1,
  // merging adjacent suffix-array slots whose LCP is exactly L; after the
  // merges for L, the component of a position with len == L spans exactly
  // the occurrences of its factor, and the component maximum is the
  // rightmost occurrence.
  std::vector<std::int32_t> edge_head(n + 1, -1), edge_next(n, -1);
  for (std::int32_t k = 1; k < n; ++k) {
    const std::int32_t lcp = std::min(idx.lcp[k], n);
    if (lcp >= 1) {
      edge_next[k] = edge_head[lcp];
      edge_head[lcp] = k;
    }
  }
  std::vector<std::int32_t> query_head(n + 1, -1), query_next(n, -1);
  for (std::int32_t i = 0; i < n; ++i) {
    if (out.len[i] >= 1) {
      query_next[i] = query_head[out.len[i]];
      query_head[out.len[i]] = i;
    }
  }

  Dsu dsu(idx.sa);
  for (std::int32_t level = n; level >= 1; --level) {
    for (std::int32_t k = edge_head[level]; k != -1; k = edge_next[k]) {
      dsu.unite(k - 1, k);
    }
    for (std::int32_t i = query_head[level]; i != -1; i = query_next[i]) {
      out.ref[i] = dsu.comp_max[dsu.find(idx.rank[i])] + 1;  // 1-based
    }
  }
  return out;
}

LsfArrays lsf_naive(const Word& w) {
  const std::int32_t n = w.size();
  LsfArrays out;
  out.len.assign(n, 0);
  out.ref.assign(n, std::nullopt);
  const auto s = w.symbols();

  // cur[j] = longest common extension of positions i and j for the row being
  // filled; nxt holds the previous row (i+1). Rows only ever read entries
  // right of their own start, so a single swap per row suffices.
  std::vector<std::int32_t> nxt(n + 1, 0), cur(n + 1, 0);
  for (std::int32_t i = n - 1; i >= 0; --i) {
    std::int32_t best = 0;
    std::int32_t arg = -1;
    for (std::int32_t j = n - 1; j > i; --j) {
      cur[j] = s[i] == s[j] ? nxt[j + 1] + 1 : 0;
      if (cur[j] > best) {  // strict: first maximum seen right-to-left is the rightmost
        best = cur[j];
        arg = j;
      }
    }
    out.len[i] = best;
    if (best > 0) out.ref[i] = arg + 1;
    std::swap(nxt, cur);
  }
  return out;
}

}  // namespace unbordered
