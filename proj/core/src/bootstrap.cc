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

#include "emboot/bootstrap.h"

#include "emboot/errors.h"
#include "emboot/features.h"
#include "emboot/promotion.h"

namespace emboot {

void BootstrapConfig::Validate() const {
  if (epochs < 0) throw ConfigError("epochs must be >= 0");
  if (entities_per_epoch < 1 || patterns_per_epoch < 1) {
    throw ConfigError("promotion counts must be >= 1");
  }
  if (window < 1) throw ConfigError("window must be >= 1");
  if (dim < 1) throw ConfigError("embedding dimension must be >= 1");
  train.Validate();
}

uint64_t DeriveSeed(uint64_t base, uint64_t stream) {
  uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BootstrapResult RunBootstrap(const BootstrapConfig &config,
                             const CorpusIndex &index, const PoolState &seeds,
                             const WordVectors *pretrained) {
  config.Validate();
  if (seeds.num_categories() < 2) {
    throw ConfigError("bootstrapping needs at least two categories");
  }
  for (size_t c = 0; c < seeds.num_categories(); ++c) {
    if (seeds.entities(c).empty()) {
      throw ConfigError("category '" + seeds.categories()[c] +
                        "' has no seeds");
    }
  }

  BootstrapResult result;
  result.trace.system = config.custom_embeddings ? "emboot" : "epb";
  result.trace.snapshots.push_back(seeds);
  result.embeddings = EmbeddingTable::Random(
      index.entities.size(), index.patterns.size(), config.dim,
      DeriveSeed(config.rng_seed, 0));

  FeatureExtractor extractor(index, pretrained);
  PatternPromotionOptions pattern_options;
  pattern_options.patterns_per_category = config.patterns_per_epoch;
  pattern_options.min_pooled_entities = config.min_pattern_support;

  PoolState pools = seeds;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    if (config.custom_embeddings) {
      TrainConfig train = config.train;
      train.rng_seed = DeriveSeed(config.rng_seed, epoch);
      result.embeddings =
          TrainInner(std::move(result.embeddings), index.cooc, pools, train);
    }

    pools = PromotePatterns(std::move(pools), index.cooc, index.patterns,
                            epoch, pattern_options);

    std::vector<int32_t> candidates = CandidateEntities(pools, index.cooc);
    if (!candidates.empty()) {
      extractor.Prepare(pools, config.custom_embeddings ? &result.embeddings
                                                        : nullptr);
      std::vector<std::vector<double>> train_rows;
      std::vector<size_t> train_labels;
      for (size_t c = 0; c < pools.num_categories(); ++c) {
        for (const PoolEntry &entry : pools.entities(c)) {
          train_rows.push_back(extractor.Featurize(entry.id));
          train_labels.push_back(c);
        }
      }
      PromotionModel model =
          PromotionModel::Fit(train_rows, train_labels, pools.num_categories(),
                              config.classifier);

      CandidateScores scores;
      scores.entities = candidates;
      scores.probabilities.reserve(candidates.size());
      for (int32_t entity : candidates) {
        scores.probabilities.push_back(
            model.Predict(extractor.Featurize(entity)));
      }
      pools = PromoteEntities(std::move(pools), scores, index.entities, epoch,
                              config.entities_per_epoch);
    }
    result.trace.snapshots.push_back(pools);
  }
  return result;
}

BootstrapResult RunBootstrap(const BootstrapConfig &config,
                             const UnlabeledCorpus &corpus,
                             const SeedList &seeds,
                             const WordVectors *pretrained) {
  IndexOptions options;
  options.window = config.window;
  CorpusIndex index = BuildCorpusIndex(corpus, options);
  return RunBootstrap(config, index, InitPools(seeds, index.entities),
                      pretrained);
}

}  // namespace emboot
