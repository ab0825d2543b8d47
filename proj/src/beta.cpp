// SPDX-License-Identifier: Apache-2.0
#include "unbordered/beta.hpp"

#include <algorithm>
#include <stdexcept>

#include "unbordered/borders.hpp"

namespace unbordered {

BetaBackend parse_backend(std::string_view name) {
  if (name == "exact") return BetaBackend::exact;
  if (name == "fingerprint") return BetaBackend::fingerprint;
  if (name == "fingerprint-paranoid") return BetaBackend::fingerprint_paranoid;
  throw std::invalid_argument("unknown backend: " + std::string(name));
}

std::string_view backend_name(BetaBackend backend) {
  switch (backend) {
    case BetaBackend::exact:
      return "exact";
    case BetaBackend::fingerprint:
      return "fingerprint";
    case BetaBackend::fingerprint_paranoid:
      return "fingerprint-paranoid";
  }
  return "?";
}

namespace {

void check_beta_args(const Word& w, std::int32_t q, std::int32_t j, std::int32_t floor) {
  if (q < 1 || q > j || j > w.size()) {
    throw std::invalid_argument("find_beta: require 1 <= q <= j <= n");
  }
  if (floor < 0) throw std::invalid_argument("find_beta: floor must be >= 0");
}

}  // namespace

std::int32_t find_beta_exact(const Word& w, std::int32_t q, std::int32_t j, std::int32_t floor) {
  check_beta_args(w, q, j, floor);
  const std::int32_t n = w.size();
  const std::int32_t cap = std::min(n - j + 1, q - 1);
  if (cap <= floor) return 0;

  // One border-array pass over pattern + separator + text. The last entry is
  // the longest prefix of w[j..] that is a suffix of w[1..q-1]; the border
  // chain below it enumerates all shorter such prefixes in decreasing order,
  // so the last chain value above the floor is the smallest candidate.
  const auto s = w.symbols();
  std::vector<std::int32_t> buf;
  buf.reserve(cap + q);
  for (std::int32_t k = 0; k < cap; ++k) buf.push_back(s[j - 1 + k]);
  buf.push_back(0);  // smaller than every rank; kills matches across the seam
  for (std::int32_t k = 0; k < q - 1; ++k) buf.push_back(s[k]);

  const auto b = border_array(std::span<const std::int32_t>(buf));
  std::int32_t best = 0;
  std::int32_t c = b.back();
  while (c > floor) {
    best = c;
    c = b[c - 1];
  }
  return best;
}

BetaFinder::BetaFinder(const Word& w, BetaBackend backend, std::uint64_t fp_seed)
    : w_(&w), backend_(backend) {
  if (backend != BetaBackend::exact) {
    fp_ = std::make_unique<FingerprintIndex>(w, fp_seed);
  }
}

std::int32_t BetaFinder::find_beta(std::int32_t q, std::int32_t j, std::int32_t floor) const {
  if (backend_ == BetaBackend::exact) return find_beta_exact(*w_, q, j, floor);

  check_beta_args(*w_, q, j, floor);
  const std::int32_t n = w_->size();
  const std::int32_t cap = std::min(n - j + 1, q - 1);
  const auto s = w_->symbols();

  // Doubling ranges [d, 2d) keep the probe count proportional to the gap
  // between the floor and the answer.
  for (std::int64_t d = floor + 1; d <= cap; d *= 2) {
    const std::int32_t hi = static_cast<std::int32_t>(std::min<std::int64_t>(2 * d - 1, cap));
    for (std::int32_t len = static_cast<std::int32_t>(d); len <= hi; ++len) {
      if (!fp_->factor_eq(j, q - len, len)) continue;
      if (backend_ == BetaBackend::fingerprint_paranoid &&
          !std::equal(s.begin() + (j - 1), s.begin() + (j - 1 + len), s.begin() + (q - len - 1))) {
        ++false_positives_;  // hash collision; keep scanning
        continue;
      }
      return len;
    }
  }
  return 0;
}

}  // namespace unbordered
