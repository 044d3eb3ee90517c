#include "topk/factoradic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"

namespace topk::factoradic {
namespace {

Permutation P(std::vector<std::uint32_t> v) { return Permutation(std::move(v)); }
FactoradicDigits D(std::vector<std::uint32_t> v) {
  return FactoradicDigits(std::move(v));
}

std::vector<std::uint32_t> seq_of(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

TEST(Permutation, Validates) {
  EXPECT_NO_THROW(P({2, 1, 3}));
  EXPECT_THROW(P({1, 1, 3}), InvalidPermutation);
  EXPECT_THROW(P({0, 1, 2}), InvalidPermutation);
  EXPECT_THROW(P({1, 4, 2}), InvalidPermutation);
  EXPECT_THROW(D({1, 1}), DigitOutOfRange);
}

TEST(Lehmer, WorkedRows) {
  EXPECT_EQ(lehmer(P({4, 2, 3, 1})), D({3, 1, 1, 0}));  // dbca
  EXPECT_EQ(lehmer(P({1, 2, 3, 4})), D({0, 0, 0, 0}));  // abcd
  EXPECT_EQ(lehmer(P({1, 4, 3, 2})), D({0, 2, 1, 0}));  // adcb
}

TEST(Rank, WorkedValues) {
  EXPECT_EQ(rank(D({3, 1, 1, 0})), 21u);
  EXPECT_EQ(rank(D({0, 0, 0, 0})), 0u);
  EXPECT_EQ(rank(D({1, 1, 1, 0})), 9u);
}

TEST(Unrank, WorkedValues) {
  EXPECT_EQ(unrank(21, 4), P({4, 2, 3, 1}));
  EXPECT_EQ(unrank(0, 4), Permutation::identity(4));
  EXPECT_EQ(unrank(23, 4), P({4, 3, 2, 1}));
  EXPECT_THROW(unrank(24, 4), RankOutOfRange);
}

TEST(Rank, GuardsOverflow) {
  const auto big = Permutation::identity(21);
  EXPECT_THROW(rank(lehmer(big)), Overflow);
  EXPECT_THROW(unrank(0, 21), Overflow);
  // 20! - 1 is the largest index and still fits.
  std::vector<std::uint32_t> rev(20);
  std::iota(rev.rbegin(), rev.rend(), 1u);
  EXPECT_EQ(rank(lehmer(P(rev))), 2432902008176640000ull - 1);
  EXPECT_EQ(unrank(2432902008176640000ull - 1, 20), P(rev));
}

TEST(Bijection, ExhaustiveUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 1u);
    std::uint64_t expected_rank = 0;
    do {
      const Permutation p(seq);
      const auto d = lehmer(p);
      EXPECT_EQ(seq_of(p).size(), n);
      EXPECT_EQ(std::vector<std::uint32_t>(d.values().begin(), d.values().end()),
                oracle::lehmer(seq));
      // next_permutation walks lexicographic order, so ranks count up.
      EXPECT_EQ(rank(d), expected_rank);
      EXPECT_EQ(unrank(expected_rank, n), p);
      EXPECT_EQ(from_lehmer(d), p);
      EXPECT_EQ(inversions(p), oracle::inversions(seq));
      ++expected_rank;
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST(FromLehmer, RoundTripsLargeRandom) {
  std::mt19937 rng(3);
  for (std::size_t n : {50u, 1000u, 4097u}) {
    auto p = seq_of(Permutation::identity(n));
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(seq_of(from_lehmer(lehmer(P(p)))), p);
  }
}

TEST(PermInfoLen, WorkedValues) {
  EXPECT_NEAR(perm_info_len(Permutation::identity(4)), 1.17367713630342, 1e-9);
  EXPECT_NEAR(perm_info_len(P({4, 1, 2, 3})), 5.173677136303421, 1e-9);
  EXPECT_NEAR(perm_info_len(P({4, 3, 2, 1})), 11.17367713630342, 1e-9);
  EXPECT_EQ(perm_info_len(Permutation()), 0.0);
  EXPECT_EQ(perm_info_len(Permutation::identity(1)), 0.0);
}

TEST(PermInfoLen, MatchesDyadicOracle) {
  const auto lengths = oracle::wallace_lengths(6);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 1u);
    do {
      const auto f = oracle::lehmer(seq);
      double expected = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        expected += oracle::truncated_length(lengths, static_cast<int>(f[i]),
                                             static_cast<int>(n - i));
      }
      EXPECT_NEAR(perm_info_len(P(seq)), expected, 1e-9);
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST(PermInfoLen, CompleteAndMinimalAtIdentity) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const double at_identity = perm_info_len(Permutation::identity(n));
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 1u);
    double kraft = 0.0;
    do {
      const double len = perm_info_len(P(seq));
      EXPECT_LE(at_identity, len);
      kraft += std::exp2(-len);
    } while (std::next_permutation(seq.begin(), seq.end()));
    EXPECT_NEAR(kraft, 1.0, 1e-9) << "n=" << n;
  }
}

}  // namespace
}  // namespace topk::factoradic
