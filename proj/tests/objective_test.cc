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

#include "emboot/objective.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "emboot/errors.h"
#include "oracles.h"

namespace emboot {
namespace {

TEST(ObjectiveTest, MatchesTermByTermOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = oracle::RandomInstance(6, 9, 4, 3, 2, 2, 3, rng);
    const double expected = oracle::Objective(inst.params, inst.counts,
                                              inst.pools, inst.negatives);
    const double got = Objective(inst.Table(), inst.Cooc(), inst.Pools(),
                                 inst.negatives);
    EXPECT_NEAR(got, expected, 1e-10) << trial;
  }
}

TEST(ObjectiveTest, HandComputedTwoItemCase) {
  // One entity, one pattern, count 2, same pool, no negatives.
  EmbeddingTable table(1, 1, 1);
  table.entity(0)[0] = 1.0;
  table.pattern(0)[0] = 0.5;
  const auto cooc = CooccurrenceMatrix::FromTriples(1, 1, {{0, 0, 2}});
  PoolState pools({"A"});
  pools.AddEntity(0, 0, 0);
  pools.AddPattern(0, 0, 0);
  const auto terms = EvaluateObjective(table, cooc, pools, {});
  const double ls = std::log(1.0 / (1.0 + std::exp(-0.5)));
  EXPECT_NEAR(terms.sg, 2 * ls, 1e-15);
  EXPECT_NEAR(terms.attract, ls, 1e-15);
  EXPECT_DOUBLE_EQ(terms.repel, 0.0);
  EXPECT_LE(terms.total(), 0.0);
}

TEST(ObjectiveGradientTest, MatchesFiniteDifferences) {
  std::mt19937_64 rng(5);
  const auto inst = oracle::RandomInstance(5, 8, 5, 2, 2, 2, 2, rng);
  const auto cooc = inst.Cooc();
  const auto pools = inst.Pools();
  const EmbeddingTable grad =
      ObjectiveGradient(inst.Table(), cooc, pools, inst.negatives);
  const auto numeric = oracle::NumericGradient(
      [&](const oracle::Params &p) {
        return oracle::Objective(p, inst.counts, inst.pools, inst.negatives);
      },
      inst.params, 1e-5);
  for (int32_t e = 0; e < 5; ++e) {
    for (size_t k = 0; k < 5; ++k) {
      EXPECT_NEAR(grad.entity(e)[k], numeric.entities[e][k],
                  1e-6 * std::max(1.0, std::abs(numeric.entities[e][k])));
    }
  }
  for (int32_t p = 0; p < 8; ++p) {
    for (size_t k = 0; k < 5; ++k) {
      EXPECT_NEAR(grad.pattern(p)[k], numeric.patterns[p][k],
                  1e-6 * std::max(1.0, std::abs(numeric.patterns[p][k])));
    }
  }
}

TEST(ObjectiveTest, ShapeErrors) {
  EmbeddingTable table(1, 1, 2);
  const auto cooc = CooccurrenceMatrix::FromTriples(1, 1, {{0, 0, 1}});
  PoolState pools({"A"});
  pools.AddEntity(0, 5, 0);
  EXPECT_THROW(Objective(table, cooc, pools, {}), ConfigError);
  EXPECT_THROW(Objective(table, cooc, PoolState({"A"}), {{3}}), ConfigError);
  const auto big = CooccurrenceMatrix::FromTriples(2, 1, {{1, 0, 1}});
  EXPECT_THROW(Objective(table, big, PoolState({"A"}), {}), ConfigError);
}

}  // namespace
}  // namespace emboot
