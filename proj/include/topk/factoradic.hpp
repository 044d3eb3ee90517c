#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topk/codes.hpp"

namespace topk {

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A bijection on {1..n}, stored as the sequence of images.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `seq` is a permutation of 1..n.
  explicit Permutation(std::vector<std::uint32_t> seq);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return seq_.size(); }
  std::uint32_t operator[](std::size_t i) const { return seq_[i]; }
  std::span<const std::uint32_t> values() const { return seq_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> seq_;
};

/// Mixed-radix digits (f^0, ..., f^{n-1}) with 0 <= f^i <= n - i - 1.
class FactoradicDigits {
 public:
  FactoradicDigits() = default;
  /// Throws DigitOutOfRange if a digit exceeds its radix.
  explicit FactoradicDigits(std::vector<std::uint32_t> digits);

  std::size_t size() const { return digits_.size(); }
  std::uint32_t operator[](std::size_t i) const { return digits_[i]; }
  std::span<const std::uint32_t> values() const { return digits_; }

  friend bool operator==(const FactoradicDigits&,
                         const FactoradicDigits&) = default;

 private:
  std::vector<std::uint32_t> digits_;
};

namespace factoradic {

/// Largest n whose n! fits in 64 bits.
inline constexpr std::size_t kMaxRankedSize = 20;

/// Lehmer code: f^i counts the positions j > i holding a smaller value.
FactoradicDigits lehmer(const Permutation& p);

/// Inverse of lehmer.
Permutation from_lehmer(const FactoradicDigits& d);

/// Lexicographic index Σ f^i (n-i-1)!. Throws Overflow for n > 20.
std::uint64_t rank(const FactoradicDigits& d);

/// Permutation of size n with lexicographic index r. Throws
/// RankOutOfRange if r >= n!, Overflow for n > 20.
Permutation unrank(std::uint64_t r, std::size_t n);

/// Number of inverted pairs, i.e. Σ f^i.
std::uint64_t inversions(const Permutation& p);

/// Bits to state p as a sequence of factoradic digits, digit i coded with
/// the truncated Wallace tree code over its range n - i.
Bits perm_info_len(const Permutation& p);

/// Same, with a caller-provided table (max_range() >= d.size()).
Bits perm_info_len(const FactoradicDigits& d,
                   const codes::TruncatedWtcCode& code);

}  // namespace factoradic
}  // namespace topk
