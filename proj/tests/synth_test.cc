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


#include "emboot/synth.h"

#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "emboot/cooccurrence.h"
#include "emboot/errors.h"

namespace emboot {
namespace {

TEST(SynthTest, DeterministicForSeed) {
  SynthSpec spec;
  spec.entities_per_category = 20;
  const auto a = GenerateSynthCorpus(spec);
  const auto b = GenerateSynthCorpus(spec);
  EXPECT_EQ(a.corpus, b.corpus);
  EXPECT_EQ(a.seeds, b.seeds);
  EXPECT_EQ(a.pattern_truth, b.pattern_truth);
  spec.rng_seed = 2;
  EXPECT_FALSE(GenerateSynthCorpus(spec).corpus == a.corpus);
}

TEST(SynthTest, DefaultSizes) {
  const auto synth = GenerateSynthCorpus(SynthSpec{});
  synth.corpus.Validate();
  EXPECT_NEAR(static_cast<double>(synth.corpus.mentions.size()), 5000.0, 250.0);
  const auto gold = GoldLabels(synth.corpus);
  EXPECT_EQ(gold.size(), 1000u);
  std::map<std::string, int> per_category;
  for (const auto &[surface, label] : gold) ++per_category[label];
  for (const std::string &name : SynthCategoryNames(4)) {
    EXPECT_EQ(per_category[name], 250);
  }
  ASSERT_EQ(synth.seeds.size(), 4u);
  for (const auto &[category, seeds] : synth.seeds) {
    EXPECT_EQ(seeds.size(), 10u);
    for (const std::string &s : seeds) EXPECT_EQ(gold.at(s), category);
  }
}

TEST(SynthTest, NoiseFreePatternsAreUnambiguous) {
  SynthSpec spec;
  spec.categories = 2;
  spec.entities_per_category = 40;
  spec.noise_rate = 0.0;
  const auto synth = GenerateSynthCorpus(spec);
  const auto gold = GoldLabels(synth.corpus);
  const CorpusIndex index = BuildCorpusIndex(synth.corpus.WithoutLabels());
  for (size_t p = 0; p < index.patterns.size(); ++p) {
    std::set<std::string> labels;
    for (const auto &cell : index.cooc.PatternColumn(static_cast<int32_t>(p))) {
      labels.insert(gold.at(index.entities.key(cell.id)));
    }
    EXPECT_EQ(labels.size(), 1u) << index.patterns.rendered(static_cast<int32_t>(p));
  }
}

TEST(SynthTest, TruthCoversEveryPlantedPattern) {
  SynthSpec spec;
  spec.entities_per_category = 30;
  spec.noise_rate = 0.0;
  const auto synth = GenerateSynthCorpus(spec);
  const auto gold = GoldLabels(synth.corpus);
  const CorpusIndex index = BuildCorpusIndex(synth.corpus.WithoutLabels());
  for (size_t p = 0; p < index.patterns.size(); ++p) {
    const std::string &rendered = index.patterns.rendered(static_cast<int32_t>(p));
    auto it = synth.pattern_truth.find(rendered);
    // Some patterns reach into the entity span; those are not planted.
    if (it == synth.pattern_truth.end()) continue;
    for (const auto &cell : index.cooc.PatternColumn(static_cast<int32_t>(p))) {
      EXPECT_EQ(gold.at(index.entities.key(cell.id)), it->second);
    }
  }
}

TEST(SynthTest, PretrainedCoversEveryWord) {
  SynthSpec spec;
  spec.entities_per_category = 20;
  spec.generic_patterns = 4;
  spec.generic_rate = 0.2;
  const auto synth = GenerateSynthCorpus(spec);
  EXPECT_EQ(synth.pretrained.dim(), 50u);
  for (const Sentence &s : synth.corpus.sentences) {
    for (const std::string &t : s) EXPECT_TRUE(synth.pretrained.Find(t)) << t;
  }
}

TEST(SynthTest, Validation) {
  SynthSpec spec;
  spec.categories = 0;
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec = SynthSpec{};
  spec.patterns_per_category = 1;
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec = SynthSpec{};
  spec.noise_rate = 1.0;
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec = SynthSpec{};
  spec.mentions_per_entity = 0.5;
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec = SynthSpec{};
  spec.generic_rate = 0.1;
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec = SynthSpec{};
  spec.context_signal = -1.0;
  EXPECT_THROW(GenerateSynthCorpus(spec), ConfigError);
}

TEST(SynthTest, CategoryNames) {
  EXPECT_EQ(SynthCategoryNames(2), (std::vector<std::string>{"LOC", "ORG"}));
  EXPECT_EQ(SynthCategoryNames(5)[4], "CAT4");
}

}  // namespace
}  // namespace emboot
