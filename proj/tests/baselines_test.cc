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


#include "emboot/baselines.h"

#include <gtest/gtest.h>

#include "emboot/errors.h"
#include "emboot/synth.h"

namespace emboot {
namespace {

struct Fixture {
  SynthCorpus synth;
  CorpusIndex index;
  PoolState seeds;
};

const Fixture &Small() {
  static const Fixture *fixture = [] {
    SynthSpec spec;
    spec.categories = 3;
    spec.entities_per_category = 25;
    spec.patterns_per_category = 6;
    spec.pretrained_dim = 10;
    spec.seeds_per_category = 3;
    auto *f = new Fixture;
    f->synth = GenerateSynthCorpus(spec);
    f->index = BuildCorpusIndex(f->synth.corpus.WithoutLabels());
    f->seeds = InitPools(f->synth.seeds, f->index.entities);
    return f;
  }();
  return *fixture;
}

BootstrapConfig SmallConfig() {
  BootstrapConfig config;
  config.epochs = 3;
  config.entities_per_epoch = 2;
  config.patterns_per_epoch = 2;
  config.dim = 5;
  config.train.inner_epochs = 2;
  config.classifier.iterations = 50;
  return config;
}

TEST(EpbTest, DeterministicAndLabelled) {
  const Fixture &f = Small();
  const auto a = RunEpb(SmallConfig(), f.index, f.seeds, &f.synth.pretrained);
  const auto b = RunEpb(SmallConfig(), f.index, f.seeds, &f.synth.pretrained);
  EXPECT_EQ(a.trace.system, "epb");
  EXPECT_EQ(a.trace.snapshots, b.trace.snapshots);
}

TEST(EpbTest, ZeroEpochsMatchesEmboot) {
  const Fixture &f = Small();
  BootstrapConfig config = SmallConfig();
  config.epochs = 0;
  const auto epb = RunEpb(config, f.index, f.seeds, &f.synth.pretrained);
  const auto emboot = RunBootstrap(config, f.index, f.seeds, &f.synth.pretrained);
  EXPECT_EQ(epb.trace.snapshots, emboot.trace.snapshots);
  EXPECT_EQ(epb.embeddings, emboot.embeddings);
}

TEST(EpbTest, LeavesEmbeddingsUntrained) {
  const Fixture &f = Small();
  const auto epb = RunEpb(SmallConfig(), f.index, f.seeds, &f.synth.pretrained);
  EXPECT_EQ(epb.embeddings,
            EmbeddingTable::Random(f.index.entities.size(),
                                   f.index.patterns.size(), 5,
                                   DeriveSeed(1, 0)));
}

TEST(EpbTest, DecisionListCoversPooledPatterns) {
  const Fixture &f = Small();
  const auto epb = RunEpb(SmallConfig(), f.index, f.seeds, &f.synth.pretrained);
  const auto dl = BuildEpbDecisionList(epb.trace, f.index, f.synth.pretrained);
  EXPECT_EQ(dl.entries().size(), epb.trace.snapshots.back().TotalPatterns());
  EXPECT_EQ(dl.epoch(), 3);
  EXPECT_THROW(BuildEpbDecisionList(Trace{}, f.index, f.synth.pretrained),
               ConfigError);
}

TEST(LpBootstrapTest, PromotesUpToQuotaPerEpoch) {
  const Fixture &f = Small();
  const Trace trace = RunLpBootstrap(SmallConfig(), f.index, f.seeds);
  EXPECT_EQ(trace.system, "lp");
  ASSERT_EQ(trace.snapshots.size(), 4u);
  EXPECT_EQ(trace.snapshots[0], f.seeds);
  for (size_t t = 1; t < trace.snapshots.size(); ++t) {
    const PoolState &pools = trace.snapshots[t];
    EXPECT_EQ(pools.TotalPatterns(), 0u);
    for (size_t c = 0; c < pools.num_categories(); ++c) {
      const size_t grown = pools.entities(c).size() -
                           trace.snapshots[t - 1].entities(c).size();
      EXPECT_LE(grown, 2u);
      for (size_t i = pools.entities(c).size() - grown;
           i < pools.entities(c).size(); ++i) {
        EXPECT_EQ(pools.entities(c)[i].epoch, static_cast<int>(t));
        EXPECT_GT(pools.entities(c)[i].score, 0.0);
        EXPECT_LE(pools.entities(c)[i].score, 1.0 + 1e-12);
      }
    }
  }
  EXPECT_EQ(RunLpBootstrap(SmallConfig(), f.index, f.seeds).snapshots,
            trace.snapshots);
}

TEST(LpBootstrapTest, RejectsBadGamma) {
  const Fixture &f = Small();
  LabelPropagationConfig lp;
  lp.gamma = 0.0;
  EXPECT_THROW(RunLpBootstrap(SmallConfig(), f.index, f.seeds, lp), ConfigError);
}

}  // namespace
}  // namespace emboot
