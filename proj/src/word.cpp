// SPDX-License-Identifier: Apache-2.0
#include "unbordered/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace unbordered {

namespace {

// Sort the distinct values, then binary-search each input against them.
template <typename It>
Word reduce_impl(It first, It last) {
  using V = typename std::iterator_traits<It>::value_type;
  std::vector<V> distinct(first, last);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::int32_t> ranks;
  ranks.reserve(static_cast<std::size_t>(std::distance(first, last)));
  for (It it = first; it != last; ++it) {
    auto pos = std::lower_bound(distinct.begin(), distinct.end(), *it) - distinct.begin();
    ranks.push_back(static_cast<std::int32_t>(pos) + 1);
  }
  return Word::from_ranks(std::move(ranks));
}

}  // namespace

Word Word::from_bytes(std::string_view bytes) {
  std::vector<long long> raw(bytes.size());
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    raw[k] = static_cast<unsigned char>(bytes[k]);
  }
  return rank_reduce(std::span<const long long>(raw));
}

Word Word::from_tokens(std::span<const long long> tokens) { return rank_reduce(tokens); }

Word Word::from_ranks(std::vector<std::int32_t> ranks) {
  std::int32_t sigma = 0;
  for (std::int32_t r : ranks) sigma = std::max(sigma, r);
  if (sigma > static_cast<std::int32_t>(ranks.size())) {
    throw std::invalid_argument("Word::from_ranks: ranks are not dense");
  }
  std::vector<bool> seen(static_cast<std::size_t>(sigma) + 1, false);
  for (std::int32_t r : ranks) {
    if (r < 1 || r > sigma) throw std::invalid_argument("Word::from_ranks: rank out of range");
    seen[static_cast<std::size_t>(r)] = true;
  }
  for (std::int32_t r = 1; r <= sigma; ++r) {
    if (!seen[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("Word::from_ranks: ranks are not dense");
    }
  }
  Word w;
  w.symbols_ = std::move(ranks);
  w.sigma_ = sigma;
  return w;
}

std::int32_t Word::at(std::int32_t pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("Word::at: position out of range");
  return symbols_[static_cast<std::size_t>(pos) - 1];
}

Word rank_reduce(std::span<const long long> raw) { return reduce_impl(raw.begin(), raw.end()); }

Word rank_reduce(std::string_view bytes) { return Word::from_bytes(bytes); }

}  // namespace unbordered
