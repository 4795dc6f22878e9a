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


#include "emboot/evaluation.h"

#include <map>
#include <random>
#include <tuple>

#include <gtest/gtest.h>

#include "emboot/errors.h"

namespace emboot {
namespace {

struct World {
  Vocabulary entities;
  GoldMap gold;
};

// Entities e0..e{n-1}; the first half are LOC, the rest ORG.
World MakeWorld(int n) {
  World w;
  for (int i = 0; i < n; ++i) {
    const std::string name = "e" + std::to_string(i);
    w.entities.Add(name);
    w.gold[name] = i < n / 2 ? "LOC" : "ORG";
  }
  return w;
}

TEST(PrecisionThroughputTest, SeedsOnly) {
  const World w = MakeWorld(4);
  PoolState seeds({"LOC", "ORG"});
  seeds.AddEntity(0, 0, 0);
  seeds.AddEntity(1, 3, 0);
  const Trace trace{"emboot", {seeds}};
  const auto curve = PrecisionThroughput(trace, w.entities, w.gold);
  ASSERT_EQ(curve.size(), 1u);
  EXPECT_EQ(curve[0].throughput, 0u);
  EXPECT_EQ(curve[0].precision, 1.0);
  EXPECT_EQ(PrecisionAtThroughput(trace, w.entities, w.gold, 0), 1.0);
  EXPECT_FALSE(PrecisionAtThroughput(trace, w.entities, w.gold, 1));
}

TEST(PrecisionThroughputTest, CountsPromotionsOnly) {
  // 100 entities: 0..49 LOC, 50..99 ORG. Promote 40 to LOC, 4 of them wrong.
  const World w = MakeWorld(100);
  PoolState pools({"LOC", "ORG"});
  pools.AddEntity(0, 0, 0);
  pools.AddEntity(1, 99, 0);
  Trace trace{"emboot", {pools}};
  for (int i = 1; i <= 36; ++i) pools.AddEntity(0, i, i <= 18 ? 1 : 2);
  for (int i = 50; i < 54; ++i) pools.AddEntity(0, i, 2);
  trace.snapshots.push_back(pools);
  const auto curve = PrecisionThroughput(trace, w.entities, w.gold);
  ASSERT_EQ(curve.size(), 2u);
  EXPECT_EQ(curve[1].epoch, 1);
  EXPECT_EQ(curve[1].throughput, 40u);
  EXPECT_DOUBLE_EQ(curve[1].precision, 0.9);
  // Epoch-1 promotions come first in the prefix.
  EXPECT_EQ(PrecisionAtThroughput(trace, w.entities, w.gold, 18), 1.0);
  EXPECT_DOUBLE_EQ(*PrecisionAtThroughput(trace, w.entities, w.gold, 40), 0.9);
  EXPECT_EQ(PromotedEntities(trace).size(), 40u);
  EXPECT_EQ(PromotedEntities(trace)[0], (std::pair<int32_t, size_t>{1, 0}));
}

TEST(PrecisionThroughputTest, MissingGoldIsAnError) {
  World w = MakeWorld(4);
  w.gold.erase("e1");
  PoolState pools({"LOC", "ORG"});
  pools.AddEntity(0, 0, 0);
  pools.AddEntity(0, 1, 1);
  const Trace trace{"emboot", {pools}};
  EXPECT_THROW(PrecisionThroughput(trace, w.entities, w.gold), ConfigError);
}

TEST(EvaluateDecisionListTest, EmptyListAbstainsEverywhere) {
  const World w = MakeWorld(4);
  const auto cooc = CooccurrenceMatrix::FromTriples(4, 2, {{0, 0, 1}, {1, 1, 2}});
  const std::vector<int32_t> ids = {0, 1, 2, 3};
  const auto eval = EvaluateDecisionList(DecisionList(), ids, w.entities, w.gold, cooc);
  EXPECT_EQ(eval.total, 4u);
  EXPECT_EQ(eval.classified, 0u);
  EXPECT_EQ(eval.abstain_rate, 1.0);
  EXPECT_EQ(eval.accuracy, 0.0);
  EXPECT_EQ(eval.FractionAtMost(5), 0.0);
}

TEST(EvaluateDecisionListTest, HistogramAndAccuracy) {
  const World w = MakeWorld(4);  // e0, e1 LOC; e2, e3 ORG
  // Patterns 0, 1 pooled for LOC, 2 for ORG.
  const DecisionList dl({"LOC", "ORG"},
                        {{0, 0, {0.8, 0.2}}, {1, 0, {0.6, 0.4}}, {2, 1, {0.3, 0.7}}},
                        1);
  const auto cooc = CooccurrenceMatrix::FromTriples(
      4, 4, {{0, 0, 1}, {0, 1, 1}, {1, 2, 1}, {2, 2, 3}, {3, 3, 1}});
  const std::vector<int32_t> ids = {0, 1, 2, 3};
  const auto eval = EvaluateDecisionList(dl, ids, w.entities, w.gold, cooc);
  EXPECT_EQ(eval.classified, 3u);
  EXPECT_EQ(eval.correct, 2u);  // e1 goes to ORG
  EXPECT_DOUBLE_EQ(eval.accuracy, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(eval.abstain_rate, 0.25);
  EXPECT_EQ(eval.histogram, (std::map<size_t, size_t>{{1, 2}, {2, 1}}));
  EXPECT_DOUBLE_EQ(eval.FractionAtMost(1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(eval.FractionAtMost(2), 1.0);
}

TEST(EvaluateDecisionListTest, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  const World w = MakeWorld(30);
  std::vector<std::tuple<int32_t, int32_t, int64_t>> triples;
  std::bernoulli_distribution hit(0.2);
  for (int32_t e = 0; e < 30; ++e) {
    for (int32_t p = 0; p < 12; ++p) {
      if (hit(rng)) triples.emplace_back(e, p, 1);
    }
  }
  const auto cooc = CooccurrenceMatrix::FromTriples(30, 12, triples);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DecisionEntry> entries;
  for (int32_t p = 0; p < 12; p += 2) {
    const double a = u(rng);
    entries.push_back({p, static_cast<size_t>(p % 4 == 0 ? 0 : 1), {a, 1.0 - a}});
  }
  const DecisionList dl({"LOC", "ORG"}, entries, 0);
  std::vector<int32_t> ids(30);
  for (int32_t i = 0; i < 30; ++i) ids[i] = i;
  const auto eval = EvaluateDecisionList(dl, ids, w.entities, w.gold, cooc);

  size_t classified = 0, correct = 0;
  for (int32_t e = 0; e < 30; ++e) {
    double miss[2] = {1.0, 1.0};
    for (const DecisionEntry &entry : entries) {
      if (cooc.Count(e, entry.pattern) > 0) {
        miss[entry.pool] *= 1.0 - entry.probabilities[entry.pool];
      }
    }
    const double s0 = 1.0 - miss[0], s1 = 1.0 - miss[1];
    if (s0 == 0.0 && s1 == 0.0) continue;
    ++classified;
    const std::string guess = s1 > s0 ? "ORG" : "LOC";
    if (w.gold.at(w.entities.key(e)) == guess) ++correct;
  }
  EXPECT_EQ(eval.classified, classified);
  EXPECT_EQ(eval.correct, correct);
}

}  // namespace
}  // namespace emboot
