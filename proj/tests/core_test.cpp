#include "topk/core.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

namespace topk {
namespace {

RankedList L(std::vector<std::string> v) { return RankedList(std::move(v)); }

TEST(ParseList, ReadsOneLabelPerLine) {
  EXPECT_EQ(parse_list("a\nb\nc"), L({"a", "b", "c"}));
}

TEST(ParseList, StripsBlankLinesAndWhitespace) {
  EXPECT_EQ(parse_list("a\n\n b \nc\n"), L({"a", "b", "c"}));
  EXPECT_EQ(parse_list("a\r\nb\r\n"), L({"a", "b"}));
}

TEST(ParseList, RejectsDuplicates) {
  try {
    parse_list("a\nb\na");
    FAIL() << "expected DuplicateLabel";
  } catch (const DuplicateLabel& e) {
    EXPECT_EQ(e.label(), "a");
    EXPECT_EQ(e.first_rank(), 1u);
    EXPECT_EQ(e.second_rank(), 3u);
  }
}

TEST(ParseList, RejectsEmpty) {
  EXPECT_THROW(parse_list(""), EmptyInput);
  EXPECT_THROW(parse_list(" \n\t\n"), EmptyInput);
}

TEST(ParseList, LabelsAreCaseSensitive) {
  EXPECT_EQ(parse_list("A\na").size(), 2u);
}

TEST(TopK, Truncates) {
  const auto l = L({"a", "b", "c"});
  EXPECT_EQ(top_k(l, 2), L({"a", "b"}));
  EXPECT_EQ(top_k(l, 3), l);
  EXPECT_THROW(top_k(l, 4), KOutOfRange);
  EXPECT_THROW(top_k(l, 0), KOutOfRange);
}

TEST(Decompose, PartialOverlap) {
  const auto d = decompose(L({"a", "b", "c", "d"}), L({"c", "a", "e", "f"}));
  EXPECT_EQ(d.b1, (BitMask{1, 0, 1, 0}));
  EXPECT_EQ(d.b2, (BitMask{1, 1, 0, 0}));
  EXPECT_EQ(d.m, 2u);
  EXPECT_EQ(d.sigma, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(d.tau2_only, (std::vector<std::string>{"e", "f"}));
}

TEST(Decompose, IdenticalLists) {
  const auto t = L({"a", "b", "c"});
  const auto d = decompose(t, t);
  EXPECT_EQ(d.b1, (BitMask{1, 1, 1}));
  EXPECT_EQ(d.b2, (BitMask{1, 1, 1}));
  EXPECT_EQ(d.m, 3u);
  EXPECT_EQ(d.sigma, (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_TRUE(d.tau2_only.empty());
}

TEST(Decompose, DisjointLists) {
  const auto d = decompose(L({"a", "b"}), L({"c", "d"}));
  EXPECT_EQ(d.b1, (BitMask{0, 0}));
  EXPECT_EQ(d.b2, (BitMask{0, 0}));
  EXPECT_EQ(d.m, 0u);
  EXPECT_TRUE(d.sigma.empty());
  EXPECT_EQ(d.tau2_only, (std::vector<std::string>{"c", "d"}));
}

TEST(Decompose, RejectsLengthMismatch) {
  EXPECT_THROW(decompose(L({"a"}), L({"a", "b"})), LengthMismatch);
}

// Every ordered 3-subset of {a..e} against every other.
std::vector<RankedList> all_ordered_triples() {
  const std::string alphabet = "abcde";
  std::vector<RankedList> out;
  for (char x : alphabet) {
    for (char y : alphabet) {
      for (char z : alphabet) {
        if (x == y || y == z || x == z) continue;
        out.push_back(L({std::string(1, x), std::string(1, y),
                         std::string(1, z)}));
      }
    }
  }
  return out;
}

TEST(Decompose, LosslessAndConsistentOnAllTriplePairs) {
  const auto lists = all_ordered_triples();
  ASSERT_EQ(lists.size(), 60u);
  for (const auto& t1 : lists) {
    for (const auto& t2 : lists) {
      const auto d = decompose(t1, t2);
      EXPECT_EQ(recompose(t1, d), t2);
      EXPECT_EQ(std::count(d.b1.begin(), d.b1.end(), 1), d.m);
      EXPECT_EQ(std::count(d.b2.begin(), d.b2.end(), 1), d.m);
      EXPECT_EQ(d.tau2_only.size(), t1.size() - d.m);
      auto sorted = d.sigma;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        EXPECT_EQ(sorted[i], i + 1);
      }
      EXPECT_EQ(decompose(t2, t1).m, d.m);
      EXPECT_EQ(union_size(t1, t2), 6 - d.m);
    }
  }
}

TEST(Decompose, SelfDecompositionOnFixtures) {
  for (const char* name : {"alpha", "beta", "gamma"}) {
    const auto t = read_list_file(std::string(TOPK_DATA_DIR) + "/" + name +
                                  ".txt");
    const auto d = decompose(t, t);
    EXPECT_EQ(d.m, t.size());
    EXPECT_TRUE(d.tau2_only.empty());
    for (std::size_t i = 0; i < d.sigma.size(); ++i) {
      EXPECT_EQ(d.sigma[i], i + 1);
    }
  }
}

}  // namespace
}  // namespace topk
