#include "permcode/coset/decoder.h"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "permcode/core/channel.h"
#include "permcode/core/error.h"
#include "permcode/core/metric.h"

namespace permcode::coset {
namespace {

std::vector<std::uint64_t> Values(const std::vector<gf::FieldElement>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

class WorkedExampleTest : public ::testing::Test {
 protected:
  CodeParams params_ = CodeParams::Create(10, 2, 97, gf::LabelingMode::kPaperCompat);
  Permutation sent_{{2, 4, 7, 3, 5, 1, 8, 6, 9, 10}};
  Permutation received_{{8, 6, 9, 10, 5, 1, 2, 4, 7, 3}};
  std::vector<std::uint64_t> alpha_{16, 0, 86, 44, 61, 9, 49};
};

TEST_F(WorkedExampleTest, SyndromeOfSentWord) {
  EXPECT_EQ(ComputeSyndrome(sent_, params_).values(), alpha_);
}

TEST_F(WorkedExampleTest, DecodesWithIntermediates) {
  const DecodeResult r = Decode(received_, Syndrome::FromValues(alpha_, 97), params_);
  ASSERT_TRUE(r.ok()) << ToString(r.status);
  EXPECT_EQ(*r.permutation, sent_);
  EXPECT_EQ(Values(r.trace.r_sent), (std::vector<std::uint64_t>{16, 31, 0, 42, 54, 94, 59}));
  EXPECT_EQ(Values(r.trace.r_received), (std::vector<std::uint64_t>{80, 64, 83, 10, 72, 22, 26}));
  EXPECT_EQ(Values(r.trace.received_labels),
            (std::vector<std::uint64_t>{75, 58, 89, 94, 40, 1, 13, 36, 62}));
  EXPECT_EQ(Values(r.trace.inserted), (std::vector<std::uint64_t>{7, 24}));
  EXPECT_EQ(Values(r.trace.removed), (std::vector<std::uint64_t>{1, 94}));
}


TEST_F(WorkedExampleTest, PublishedKeyEquationSolutionSatisfiesSystem) {
  const DecodeResult r = Decode(received_, Syndrome::FromValues(alpha_, 97), params_);
  const std::vector<std::uint64_t> c{95, 94, 66, 26};
  for (std::size_t row = 0; row < r.trace.matrix.size(); ++row) {
    std::uint64_t acc = 0;
    for (std::size_t col = 0; col < c.size(); ++col) acc = (acc + r.trace.matrix[row][col] * c[col]) % 97;
    EXPECT_EQ(acc, r.trace.rhs[row]) << "row " << row;
  }
  EXPECT_EQ(r.trace.h1->ToString(), "[94, 95, 1]");
  EXPECT_EQ(r.trace.h2->ToString(), "[71, 31, 1]");
  EXPECT_EQ(r.trace.h->ToString(), "[1]");
}

TEST(DecodeTest, ZeroErrorsReturnsReceived) {
  const auto params = CodeParams::Create(10, 2);
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation pi = RandomPermutation(10, rng);
    const auto r = Decode(pi, ComputeSyndrome(pi, params), params);
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(*r.permutation, pi);
    ASSERT_TRUE(r.trace.inserted.empty());
  }
}

TEST(DecodeTest, SyndromeShapeChecked) {
  const auto params = CodeParams::Create(10, 2);
  const Permutation pi = Permutation::Identity(10);
  EXPECT_THROW(Decode(pi, Syndrome::FromValues(std::vector<std::uint64_t>{1, 2, 3}, 97), params),
               ParameterError);
  EXPECT_THROW(Decode(pi, Syndrome::FromValues(std::vector<std::uint64_t>(7, 1), 101), params),
               ParameterError);
}

TEST(DecodeTest, BeyondDesignNeverMiscorrects) {
  // Decoding past the design radius may fail, but any success must reproduce the
  // syndrome; a different permutation is only possible at distance > 2t.
  const auto params = CodeParams::Create(10, 2);
  Rng master(62);
  std::map<DecodeStatus, int> seen;
  for (int trial = 0; trial < 400; ++trial) {
    Rng rng = master.Fork(trial);
    const Permutation pi = RandomPermutation(10, rng);
    const Permutation received = ChannelBlock(pi, rng.UniformInt(3, 6), rng);
    const auto alpha = ComputeSyndrome(pi, params);
    const auto r = Decode(received, alpha, params);
    ++seen[r.status];
    if (r.ok()) {
      ASSERT_EQ(ComputeSyndrome(*r.permutation, params), alpha);
      if (*r.permutation != pi) {
        ASSERT_GE(BlockDistance(*r.permutation, pi), 5);
      }
    } else {
      ASSERT_FALSE(r.permutation);
    }
  }
  EXPECT_LT(seen[DecodeStatus::kSuccess], 400);
}

TEST(DecodeTest, FailureStatusesHaveDistinctNames) {
  std::set<std::string> names;
  for (auto s : {DecodeStatus::kSuccess, DecodeStatus::kInconsistentSystem, DecodeStatus::kRepeatedRoots,
                 DecodeStatus::kNotSplit, DecodeStatus::kErrorSetNotInReceived,
                 DecodeStatus::kWrongLabelCount, DecodeStatus::kInvalidCharacteristicSet,
                 DecodeStatus::kSyndromeMismatch, DecodeStatus::kNoCrtCandidate,
                 DecodeStatus::kAmbiguous, DecodeStatus::kMalformedCodeword}) {
    names.insert(ToString(s));
  }
  EXPECT_EQ(names.size(), 11u);
}

}  // namespace
}  // namespace permcode::coset
