// Copyright 2026 The Emboot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "emboot/trainer.h"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "emboot/errors.h"
#include "emboot/objective.h"
#include "oracles.h"

namespace emboot {
namespace {

CooccurrenceMatrix SmallMatrix() {
  // Pattern marginals 4, 1, 2, 0, 3.
  return CooccurrenceMatrix::FromTriples(
      3, 5, {{0, 0, 4}, {1, 1, 1}, {1, 2, 2}, {2, 4, 3}});
}

TEST(NegativeSamplerTest, UnigramPowerWeights) {
  const CooccurrenceMatrix cooc = SmallMatrix();
  const NegativeSampler sampler(cooc);
  const double z = std::pow(4.0, 0.75) + 1.0 + std::pow(2.0, 0.75) +
                   std::pow(3.0, 0.75);
  EXPECT_NEAR(sampler.Probability(0), std::pow(4.0, 0.75) / z, 1e-12);
  EXPECT_NEAR(sampler.Probability(3), 0.0, 1e-15);
  double sum = 0.0;
  for (int32_t p = 0; p < 5; ++p) sum += sampler.Probability(p);
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(NegativeSamplerTest, RejectsPositivesAndDuplicates) {
  const CooccurrenceMatrix cooc = SmallMatrix();
  const NegativeSampler sampler(cooc);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto s = sampler.Sample(1, 2, rng);
    ASSERT_EQ(s.size(), 2u);
    const std::set<int32_t> unique(s.begin(), s.end());
    EXPECT_EQ(unique.size(), 2u);
    for (int32_t p : s) {
      EXPECT_NE(p, 1);
      EXPECT_NE(p, 2);
    }
  }
}

TEST(NegativeSamplerTest, ReturnsAllEligibleWhenFew) {
  const CooccurrenceMatrix cooc = SmallMatrix();
  const NegativeSampler sampler(cooc);
  std::mt19937_64 rng(3);
  // Entity 1 co-occurs with 1 and 2; eligible are 0, 3 and 4.
  EXPECT_EQ(sampler.Sample(1, 3, rng), (std::vector<int32_t>{0, 3, 4}));
  EXPECT_EQ(sampler.Sample(1, 8, rng), (std::vector<int32_t>{0, 3, 4}));
}

TEST(NegativeSamplerTest, FrequenciesFollowDistribution) {
  // Entity 0 co-occurs with pattern 0 only; the others should be drawn in
  // proportion to their weights renormalized without pattern 0.
  const CooccurrenceMatrix cooc = SmallMatrix();
  const NegativeSampler sampler(cooc);
  std::mt19937_64 rng(17);
  const int draws = 40000;
  std::vector<int> hits(5, 0);
  for (int i = 0; i < draws; ++i) ++hits[sampler.Sample(0, 1, rng)[0]];
  EXPECT_EQ(hits[0], 0);
  EXPECT_EQ(hits[3], 0);
  const double rest = 1.0 - sampler.Probability(0);
  double chi2 = 0.0;
  for (int32_t p : {1, 2, 4}) {
    const double expected = draws * sampler.Probability(p) / rest;
    chi2 += (hits[p] - expected) * (hits[p] - expected) / expected;
  }
  // 2 degrees of freedom, p = 0.001.
  EXPECT_LT(chi2, 13.82);
}

TEST(SampleNegativeAssignmentTest, KPerPositiveOccurrence) {
  std::mt19937_64 rng(1);
  const auto cooc =
      CooccurrenceMatrix::FromTriples(2, 6, {{0, 0, 2}, {0, 1, 1}, {1, 5, 1}});
  const auto neg = SampleNegativeAssignment(cooc, 2, rng);
  ASSERT_EQ(neg.size(), 2u);
  EXPECT_EQ(neg[0].size(), 6u);
  EXPECT_EQ(neg[1].size(), 2u);
}

TEST(TrainConfigTest, Validate) {
  TrainConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.negative_samples = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = TrainConfig();
  c.learning_rate = 0.0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = TrainConfig();
  c.inner_epochs = -1;
  EXPECT_THROW(c.Validate(), ConfigError);
}

class TrainInnerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(23);
    inst_ = oracle::RandomInstance(12, 10, 6, 2, 3, 2, 0, rng);
  }
  oracle::Instance inst_;
};

TEST_F(TrainInnerTest, DeterministicAndZeroEpochsIsIdentity) {
  TrainConfig config;
  config.inner_epochs = 5;
  const auto table = EmbeddingTable::Random(12, 10, 6, 9);
  const auto a = TrainInner(table, inst_.Cooc(), inst_.Pools(), config);
  const auto b = TrainInner(table, inst_.Cooc(), inst_.Pools(), config);
  EXPECT_EQ(a, b);
  config.rng_seed = 2;
  EXPECT_FALSE(TrainInner(table, inst_.Cooc(), inst_.Pools(), config) == a);
  config.inner_epochs = 0;
  EXPECT_EQ(TrainInner(table, inst_.Cooc(), inst_.Pools(), config), table);
}

TEST_F(TrainInnerTest, IncreasesObjective) {
  TrainConfig config;
  config.inner_epochs = 50;
  const auto cooc = inst_.Cooc();
  const auto pools = inst_.Pools();
  std::mt19937_64 rng(4);
  const auto negatives = SampleNegativeAssignment(cooc, 5, rng);
  const auto before = EmbeddingTable::Random(12, 10, 6, 9);
  const auto after = TrainInner(before, cooc, pools, config);
  EXPECT_GT(Objective(after, cooc, pools, negatives),
            Objective(before, cooc, pools, negatives));
  EXPECT_TRUE(after.AllFinite());
}

TEST_F(TrainInnerTest, DivergenceRaises) {
  TrainConfig config;
  config.inner_epochs = 3;
  config.learning_rate = 1e300;
  config.final_learning_rate = 1e300;
  EXPECT_THROW(TrainInner(EmbeddingTable::Random(12, 10, 6, 9), inst_.Cooc(),
                          inst_.Pools(), config),
               TrainingError);
}

TEST_F(TrainInnerTest, RejectsTableThatMissesPooledItems) {
  TrainConfig config;
  config.inner_epochs = 1;
  EXPECT_THROW(TrainInner(EmbeddingTable::Random(2, 2, 6, 9), inst_.Cooc(),
                          inst_.Pools(), config),
               ConfigError);
}

}  // namespace
}  // namespace emboot
