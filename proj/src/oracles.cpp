// SPDX-License-Identifier: Apache-2.0
#include "unbordered/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "unbordered/beta.hpp"
#include "unbordered/borders.hpp"

namespace unbordered {

std::vector<std::int32_t> luf_naive(const Word& w) {
  const std::int32_t n = w.size();
  std::vector<std::int32_t> luf(n, 0);
  const auto s = w.symbols();
  for (std::int32_t i = 0; i < n; ++i) {
    const auto b = border_array(s.subspan(i));
    std::int32_t best = 0;
    for (std::int32_t k = 0; k < n - i; ++k) {
      if (b[k] == 0) best = k + 1;  // prefix of length k+1 is unbordered
    }
    luf[i] = best;
  }
  return luf;
}

std::int32_t mu(const Word& w) {
  if (w.empty()) throw std::invalid_argument("mu: empty word");
  const auto luf = luf_naive(w);
  return *std::max_element(luf.begin(), luf.end());
}

std::int32_t hook_naive(const Word& w, std::int32_t j) {
  if (j < 1 || j > w.size()) throw std::out_of_range("hook_naive: position out of range");
  std::int32_t q = j;
  while (true) {
    const std::int32_t beta = find_beta_exact(w, q, j, 0);
    if (beta == 0) return q;
    q -= beta;
  }
}

}  // namespace unbordered
