#include "topk/codes.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace topk {

DigitOutOfRange::DigitOutOfRange(std::uint64_t digit, std::uint64_t range)
    : Error("digit " + std::to_string(digit) + " outside [0, " +
            std::to_string(range) + ")") {}

namespace codes {

namespace {

// log2(n!) via log-gamma.
double log2_factorial(std::uint64_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0) / std::numbers::ln2;
}

template <typename Fn>
void for_each_count_update(std::span<const std::uint8_t> events, Fn&& fn) {
  std::uint64_t counts[2] = {1, 1};
  for (const auto e : events) {
    const int s = e ? 1 : 0;
    fn(Ratio{counts[s], counts[0] + counts[1]});
    ++counts[s];
  }
}

std::vector<std::uint8_t> agreement_events(std::span<const std::uint8_t> b1,
                                           std::span<const std::uint8_t> b2) {
  if (b1.size() != b2.size()) throw LengthMismatch(b1.size(), b2.size());
  std::vector<std::uint8_t> diff(b1.size());
  for (std::size_t i = 0; i < b1.size(); ++i) {
    diff[i] = (b1[i] != 0) != (b2[i] != 0) ? 1 : 0;
  }
  return diff;
}

// Catalan(i), exact; only called for i small enough to stay in range.
unsigned __int128 catalan_next(unsigned __int128 c, std::uint64_t i) {
  return c * (2 * (2 * i + 1)) / (i + 2);
}

}  // namespace

Bits adaptive_counts_len(std::uint64_t c0, std::uint64_t c1) {
  const double len =
      log2_factorial(c0 + c1 + 1) - log2_factorial(c0) - log2_factorial(c1);
  return len < 0.0 ? 0.0 : len;
}

Bits adaptive_mask_len(std::span<const std::uint8_t> mask) {
  std::uint64_t ones = 0;
  for (const auto b : mask) ones += b ? 1 : 0;
  return adaptive_counts_len(mask.size() - ones, ones);
}

std::vector<Ratio> adaptive_mask_trace(std::span<const std::uint8_t> mask) {
  std::vector<Ratio> out;
  out.reserve(mask.size());
  for_each_count_update(mask, [&](Ratio r) { out.push_back(r); });
  return out;
}

Bits agreement_code_len(std::span<const std::uint8_t> b1,
                        std::span<const std::uint8_t> b2) {
  // Same count structure as the mask code, over "differs" events.
  return adaptive_mask_len(agreement_events(b1, b2));
}

std::vector<Ratio> agreement_trace(std::span<const std::uint8_t> b1,
                                   std::span<const std::uint8_t> b2) {
  return adaptive_mask_trace(agreement_events(b1, b2));
}

Bits optimal_positions_len(std::uint64_t k, std::uint64_t m) {
  if (m > k) throw DigitOutOfRange(m, k + 1);
  if (m == 0 || m == k) return 0.0;
  const double len =
      log2_factorial(k) - log2_factorial(m) - log2_factorial(k - m);
  return len < 0.0 ? 0.0 : len;
}

std::uint64_t wtc_len(std::uint64_t n) {
  if (n == 0) throw Error("wtc_len: n must be >= 1");
  if (n > kMaxWtcInteger) {
    throw Overflow("wtc_len: integer " + std::to_string(n) +
                   " exceeds 2^62");
  }
  unsigned __int128 catalan = 1;  // Catalan(t - 1)
  unsigned __int128 covered = 0;  // integers assigned to trees with < t leaves
  for (std::uint64_t t = 1;; ++t) {
    covered += catalan;
    if (covered >= n) return 2 * t - 1;
    catalan = catalan_next(catalan, t - 1);
  }
}

Bits truncated_wtc_len(std::uint64_t d, std::uint64_t R) {
  if (d >= R) throw DigitOutOfRange(d, R);
  return TruncatedWtcCode(R).length(d, R);
}

TruncatedWtcCode::TruncatedWtcCode(std::uint64_t max_range) {
  if (max_range > kMaxWtcInteger) {
    throw Overflow("TruncatedWtcCode: range too large");
  }
  lengths_.reserve(max_range);
  unsigned __int128 catalan = 1;
  for (std::uint64_t t = 1; lengths_.size() < max_range; ++t) {
    const auto len = static_cast<std::uint32_t>(2 * t - 1);
    const auto room = max_range - lengths_.size();
    const auto take =
        catalan < room ? static_cast<std::uint64_t>(catalan) : room;
    lengths_.insert(lengths_.end(), take, len);
    catalan = catalan_next(catalan, t - 1);
  }
  log2_norm_.reserve(max_range);
  double z = 0.0;
  for (const auto len : lengths_) {
    z += std::ldexp(1.0, -static_cast<int>(len));
    log2_norm_.push_back(std::log2(z));
  }
}

Bits TruncatedWtcCode::length(std::uint64_t d, std::uint64_t R) const {
  if (d >= R) throw DigitOutOfRange(d, R);
  if (R > lengths_.size()) {
    throw std::out_of_range("TruncatedWtcCode: range " + std::to_string(R) +
                            " beyond table size " +
                            std::to_string(lengths_.size()));
  }
  if (R == 1) return 0.0;
  return static_cast<double>(lengths_[d]) + log2_norm_[R - 1];
}

}  // namespace codes
}  // namespace topk
