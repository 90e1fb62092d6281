#include "permcode/core/permutation.h"

#include <gtest/gtest.h>

#include "permcode/core/error.h"
#include "permcode/core/metric.h"
#include "permcode/core/rng.h"

namespace permcode {
namespace {

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), ParameterError);
  EXPECT_THROW(Permutation({0, 1}), ParameterError);
  EXPECT_THROW(Permutation({1, 3}), ParameterError);
  EXPECT_THROW(Permutation(std::vector<int>{}), ParameterError);
}

TEST(PermutationTest, AccessorsAreOneBased) {
  const Permutation pi({3, 1, 2});
  EXPECT_EQ(pi.size(), 3);
  EXPECT_EQ(pi(1), 3);
  EXPECT_EQ(pi.PositionOf(3), 1);
  EXPECT_EQ(pi.Inverse(), Permutation({2, 3, 1}));
  EXPECT_EQ(pi.ToString(), "(3,1,2)");
}

TEST(ComposeTest, ExampleSwapOfSegments) {
  const Permutation pi({3, 5, 6, 7, 9, 8, 1, 2, 10, 4});
  const Permutation phi = MakeTransposition(10, {2, 5, 7, 8});
  EXPECT_EQ(Compose(pi, phi), Permutation({3, 1, 2, 8, 5, 6, 7, 9, 10, 4}));
}

TEST(ComposeTest, IdentityAndInverse) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation pi = RandomPermutation(8, rng);
    EXPECT_EQ(Compose(Permutation::Identity(8), pi), pi);
    EXPECT_EQ(Compose(pi, pi.Inverse()), Permutation::Identity(8));
  }
}

TEST(ComposeTest, LengthMismatchThrows) {
  EXPECT_THROW(Compose(Permutation::Identity(3), Permutation::Identity(4)), ParameterError);
}

TEST(TranspositionTest, Examples) {
  EXPECT_EQ(MakeTransposition(10, {2, 5, 7, 8}), Permutation({1, 7, 8, 6, 2, 3, 4, 5, 9, 10}));
  EXPECT_EQ(MakeTransposition(2, {1, 1, 2, 2}), Permutation({2, 1}));
}

TEST(TranspositionTest, InvalidIndicesThrow) {
  EXPECT_THROW(MakeTransposition(5, {2, 3, 3, 4}), ParameterError);
  EXPECT_THROW(MakeTransposition(5, {0, 1, 2, 2}), ParameterError);
  EXPECT_THROW(MakeTransposition(5, {1, 2, 4, 6}), ParameterError);
}

TEST(TranspositionTest, CountMatchesFourSubsets) {
  // |T_N| = C(N + 2, 4).
  EXPECT_EQ(AllTranspositions(2).size(), 1u);
  EXPECT_EQ(AllTranspositions(5).size(), 35u);
  EXPECT_EQ(AllTranspositions(7).size(), 126u);
}

TEST(TranspositionTest, WeightAtMostFour) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = AllTranspositions(12)[rng.Below(AllTranspositions(12).size())];
    EXPECT_LE(BlockWeight(MakeTransposition(12, g)), 4);
  }
}

TEST(MinimalTest, Examples) {
  EXPECT_TRUE(IsMinimal(Permutation({1, 4, 3, 2, 5})));
  EXPECT_FALSE(IsMinimal(Permutation::Identity(4)));
  EXPECT_TRUE(IsMinimal(Permutation({2, 1})));
  EXPECT_TRUE(IsMinimal(Permutation::Identity(1)));
}

}  // namespace
}  // namespace permcode
