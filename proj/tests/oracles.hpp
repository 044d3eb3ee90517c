#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's coding paths.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

struct Fraction {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  void times(std::uint64_t n, std::uint64_t d) {
    num *= n;
    den *= d;
    const auto g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
};

// Probability of a bit sequence under the adaptive two-counter estimator,
// as an exact fraction (safe for length <= 12).
inline Fraction adaptive_probability(const std::vector<std::uint8_t>& bits) {
  std::uint64_t c[2] = {1, 1};
  Fraction p;
  for (const auto b : bits) {
    p.times(c[b], c[0] + c[1]);
    ++c[b];
  }
  return p;
}

inline double bits_of(const Fraction& p) {
  return std::log2(static_cast<double>(p.den)) -
         std::log2(static_cast<double>(p.num));
}

// All preorder serializations (1 = internal, 0 = leaf) of binary trees with
// `leaves` leaves, built recursively.
inline std::vector<std::string> trees(int leaves) {
  if (leaves == 1) return {"0"};
  std::vector<std::string> out;
  for (int left = 1; left < leaves; ++left) {
    for (const auto& a : trees(left)) {
      for (const auto& b : trees(leaves - left)) out.push_back("1" + a + b);
    }
  }
  return out;
}

// Codeword lengths of integers 1, 2, ... up to trees of `max_leaves` leaves.
inline std::vector<int> wallace_lengths(int max_leaves) {
  std::vector<int> out;
  for (int t = 1; t <= max_leaves; ++t) {
    for (const auto& s : trees(t)) out.push_back(static_cast<int>(s.size()));
  }
  return out;
}

// Truncated code length computed with exact dyadic sums.
inline double truncated_length(const std::vector<int>& lengths, int d, int R) {
  const int top = lengths[R - 1];
  std::uint64_t z = 0;  // Σ 2^-len scaled by 2^top
  for (int j = 0; j < R; ++j) z += std::uint64_t{1} << (top - lengths[j]);
  return std::log2(static_cast<double>(z)) - top + lengths[d];
}

inline std::vector<std::uint32_t> lehmer(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> f(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) f[i] += p[j] < p[i];
  }
  return f;
}

inline std::uint64_t inversions(const std::vector<std::uint32_t>& p) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[j] < p[i];
  }
  return n;
}

}  // namespace oracle
