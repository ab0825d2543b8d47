// SPDX-License-Identifier: Apache-2.0
#include "unbordered/borders.hpp"

#include <algorithm>
#include <stdexcept>

namespace unbordered {

std::vector<std::int32_t> border_array(std::span<const std::int32_t> s) {
  const auto n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> b(static_cast<std::size_t>(n), 0);
  for (std::int32_t k = 1; k < n; ++k) {
    std::int32_t m = b[static_cast<std::size_t>(k) - 1];
    while (m > 0 && s[static_cast<std::size_t>(k)] != s[static_cast<std::size_t>(m)]) {
      m = b[static_cast<std::size_t>(m) - 1];
    }
    b[static_cast<std::size_t>(k)] =
        (s[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(m)]) ? m + 1 : 0;
  }
  return b;
}

std::vector<std::int32_t> border_array(const Word& w) { return border_array(w.symbols()); }

std::int32_t min_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("min_period: empty word");
  const auto b = border_array(w);
  return w.size() - b.back();
}

bool is_unbordered(const Word& w, std::int32_t i, std::int32_t j) {
  if (i < 1 || j < i || j > w.size()) {
    throw std::out_of_range("is_unbordered: bad factor range");
  }
  const auto s = w.symbols().subspan(static_cast<std::size_t>(i) - 1,
                                     static_cast<std::size_t>(j - i) + 1);
  return border_array(s).back() == 0;
}

Decomposition unbordered_decomposition(const Word& w) {
  Decomposition d;
  if (w.empty()) return d;
  const auto b = border_array(w);
  std::int32_t m = w.size();
  while (m > 0) {
    // Minimum of the border chain of w[1..m]: the shortest prefix of w that
    // is a suffix of w[1..m].
    std::int32_t c = m;
    while (b[static_cast<std::size_t>(c) - 1] != 0) c = b[static_cast<std::size_t>(c) - 1];
    d.piece_lengths.push_back(c);
    m -= c;
  }
  std::reverse(d.piece_lengths.begin(), d.piece_lengths.end());
  return d;
}

}  // namespace unbordered
