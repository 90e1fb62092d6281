#include "permcode/systematic/codec.h"

#include <gtest/gtest.h>

#include "permcode/core/channel.h"
#include "permcode/core/error.h"
#include "permcode/core/metric.h"

namespace permcode::systematic {
namespace {

class SmokeParamsTest : public ::testing::Test {
 protected:
  AuxParams params_ = AuxParams::Create(871, 1, 28);

  std::vector<std::optional<std::uint64_t>> ResiduesOf(const BigIndex& gamma) const {
    std::vector<std::optional<std::uint64_t>> out;
    for (auto r : Residues(gamma, 871, 28)) out.emplace_back(r);
    return out;
  }

  BigIndex RandomGamma(Rng& rng) const {
    std::vector<gf::FieldElement> x;
    for (int i = 0; i < 3; ++i) x.emplace_back(rng.Below(params_.q()), params_.q());
    return GammaIndex(x);
  }
};

TEST_F(SmokeParamsTest, CrtWithoutErrors) {
  Rng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const BigIndex gamma = RandomGamma(rng);
    const auto r = CrtRecoverGamma(ResiduesOf(gamma), params_);
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(*r.gamma, gamma);
    ASSERT_TRUE(r.corrected_blocks.empty());
  }
}

TEST_F(SmokeParamsTest, CrtCorrectsOneArbitraryResidue) {
  Rng rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    const BigIndex gamma = RandomGamma(rng);
    auto residues = ResiduesOf(gamma);
    const int block = rng.UniformInt(1, 28);
    const std::uint64_t modulus = 871 + block;
    residues[block - 1] = (*residues[block - 1] + 1 + rng.Below(modulus - 1)) % modulus;
    const auto r = CrtRecoverGamma(residues, params_);
    ASSERT_TRUE(r.ok()) << ToString(r.status);
    ASSERT_EQ(*r.gamma, gamma);
    ASSERT_EQ(r.corrected_blocks, std::vector<int>{block});
  }
}

TEST_F(SmokeParamsTest, CrtToleratesErasures) {
  Rng rng(93);
  const BigIndex gamma = RandomGamma(rng);
  auto residues = ResiduesOf(gamma);
  for (int i = 0; i < 10; ++i) residues[i].reset();
  residues[20] = (*residues[20] + 1) % 892;
  const auto r = CrtRecoverGamma(residues, params_);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r.gamma, gamma);
}

TEST_F(SmokeParamsTest, CrtAllErasedFails) {
  const std::vector<std::optional<std::uint64_t>> erased(28);
  EXPECT_EQ(CrtRecoverGamma(erased, params_).status, DecodeStatus::kNoCrtCandidate);
  EXPECT_THROW(CrtRecoverGamma(std::vector<std::optional<std::uint64_t>>(3), params_), ParameterError);
}

TEST_F(SmokeParamsTest, EncodeIsSystematicAndDeterministic) {
  Rng rng(94);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation pi = RandomPermutation(871, rng);
    const Permutation sigma = EncodeSystematic(pi, params_);
    ASSERT_EQ(sigma.size(), 871 + 56);
    ASSERT_EQ(TruncateToMessage(sigma, 871), pi);
    ASSERT_EQ(EncodeSystematic(pi, params_), sigma);
  }
}

TEST_F(SmokeParamsTest, NoErrorsDecodesExactly) {
  Rng rng(3);
  const Permutation pi = RandomPermutation(871, rng);
  const auto r = DecodeSystematic(EncodeSystematic(pi, params_), params_);
  ASSERT_TRUE(r.ok()) << ToString(r.status);
  EXPECT_EQ(*r.permutation, pi);
  EXPECT_EQ(r.erased_blocks, 0);
}

TEST_F(SmokeParamsTest, OneBlockErrorRoundTrip) {
  Rng master(7);
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = master.Fork(trial);
    const Permutation pi = RandomPermutation(871, rng);
    const Permutation received = ChannelBlock(EncodeSystematic(pi, params_), 1, rng);
    const auto r = DecodeSystematic(received, params_);
    ASSERT_TRUE(r.ok()) << "trial " << trial << ": " << ToString(r.status);
    ASSERT_EQ(*r.permutation, pi);
  }
}

TEST_F(SmokeParamsTest, RecoveredSequenceWithinOneValue) {
  Rng master(8);
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng = master.Fork(trial);
    const Permutation pi = RandomPermutation(871, rng);
    const auto s = Phi(coset::ComputeSyndrome(pi, params_.coset()), params_);
    const Permutation received = ChannelBlock(Extend(pi, s), 1, rng);
    const auto recovered = RecoverExtensionSequence(received, 871, 56);
    ASSERT_LE(HammingSet(s, recovered).size(), 1u) << "trial " << trial;
  }
}

TEST_F(SmokeParamsTest, BeyondDesignNeverCrashes) {
  Rng master(9);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = master.Fork(trial);
    const Permutation pi = RandomPermutation(871, rng);
    const Permutation received = ChannelBlock(EncodeSystematic(pi, params_), 5, rng);
    const auto r = DecodeSystematic(received, params_);
    if (r.ok()) {
      ASSERT_EQ(coset::ComputeSyndrome(*r.permutation, params_.coset()), *r.syndrome);
    } else {
      ++failures;
      ASSERT_FALSE(r.permutation);
    }
  }
  EXPECT_GT(failures, 0);
}

TEST_F(SmokeParamsTest, WrongLengthRejected) {
  EXPECT_THROW(DecodeSystematic(Permutation::Identity(871), params_), ParameterError);
}

TEST(ToyParamsTest, ExhaustiveImageSearchFindsCodeword) {
  const auto p = AuxParams::Relaxed(10, 1, 2, 97);
  Rng rng(95);
  for (int trial = 0; trial < 3; ++trial) {
    const Permutation pi = RandomPermutation(10, rng);
    const auto alpha = coset::ComputeSyndrome(pi, p.coset());
    const auto gamma = static_cast<std::uint64_t>(GammaIndex(alpha.alpha()));
    const auto s = Phi(alpha, p);
    const auto matches = ExhaustiveImageSearch(s, p);
    EXPECT_NE(std::find(matches.begin(), matches.end(), gamma), matches.end());
  }
  EXPECT_THROW(ExhaustiveImageSearch(std::vector<int>(4, 1), p, 1000), ParameterError);
}

TEST(ToyParamsTest, EqualSyndromeCodewordsStayApart) {
  const auto p = AuxParams::Relaxed(6, 1, 2, 31);
  const auto book = coset::EnumerateCodebook(p.coset());
  int pairs = 0;
  for (const auto& [key, members] : book.buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ASSERT_GE(BlockDistance(EncodeSystematic(members[i], p), EncodeSystematic(members[j], p)), 3);
        ++pairs;
      }
    }
  }
  EXPECT_GT(pairs, 0);
}

}  // namespace
}  // namespace permcode::systematic
