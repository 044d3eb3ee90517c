#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topk/core.hpp"

namespace topk {

/// Message lengths are real-valued bit counts (base-2 logarithms).
using Bits = double;

class DigitOutOfRange : public Error {
 public:
  DigitOutOfRange(std::uint64_t digit, std::uint64_t range);
};

class Overflow : public Error {
 public:
  using Error::Error;
};

/// Exact probability num/den assigned to one coded symbol.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

namespace codes {

/// -log2(c0! c1! / (c0 + c1 + 1)!): the length of any adaptive binary code
/// with both counters starting at 1, given the final symbol counts.
Bits adaptive_counts_len(std::uint64_t c0, std::uint64_t c1);

/// Adaptive binomial code for a bit mask (counters start at 1, probability
/// counter/sum, increment after coding).
Bits adaptive_mask_len(std::span<const std::uint8_t> mask);

/// Per-symbol probabilities the adaptive mask code assigns, left to right.
std::vector<Ratio> adaptive_mask_trace(std::span<const std::uint8_t> mask);

/// Adaptive code over the same/different events of two aligned masks.
/// Throws LengthMismatch.
Bits agreement_code_len(std::span<const std::uint8_t> b1,
                        std::span<const std::uint8_t> b2);

std::vector<Ratio> agreement_trace(std::span<const std::uint8_t> b1,
                                   std::span<const std::uint8_t> b2);

/// log2 C(k, m): uniform choice of which m of k positions are set.
Bits optimal_positions_len(std::uint64_t k, std::uint64_t m);

/// Largest integer wtc_len accepts.
inline constexpr std::uint64_t kMaxWtcInteger = std::uint64_t{1} << 62;

/// Wallace tree code length of n >= 1. Integers are assigned to binary
/// trees in order of increasing leaf count t (Catalan(t-1) trees each); a
/// tree with t leaves serializes to 2t-1 preorder bits. Throws Overflow
/// above kMaxWtcInteger.
std::uint64_t wtc_len(std::uint64_t n);

/// Wallace tree code restricted to {1..R} and renormalized; digit d in
/// [0, R) is coded as integer d + 1. O(R); use TruncatedWtcCode for bulk
/// queries.
Bits truncated_wtc_len(std::uint64_t d, std::uint64_t R);

/// Precomputed truncated Wallace tree code for every range up to a maximum.
/// Immutable after construction, so one instance can serve many threads.
class TruncatedWtcCode {
 public:
  explicit TruncatedWtcCode(std::uint64_t max_range);

  std::uint64_t max_range() const { return lengths_.size(); }

  /// Throws DigitOutOfRange if d >= R, std::out_of_range if R > max_range().
  Bits length(std::uint64_t d, std::uint64_t R) const;

 private:
  std::vector<std::uint32_t> lengths_;  // lengths_[j] = wtc_len(j + 1)
  std::vector<double> log2_norm_;       // log2_norm_[R-1] = log2 Σ_{j<=R} 2^-len
};

}  // namespace codes
}  // namespace topk
