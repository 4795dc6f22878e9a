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

// The outer bootstrapping loop. Each epoch:
//   1. trains the custom embeddings on the current pools,
//   2. promotes patterns by PMI,
//   3. featurizes the candidate entities, fits the promotion classifier on
//      the pooled entities, and promotes the most confident candidates.

#ifndef EMBOOT_BOOTSTRAP_H_
#define EMBOOT_BOOTSTRAP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "emboot/classifier.h"
#include "emboot/cooccurrence.h"
#include "emboot/embedding.h"
#include "emboot/pools.h"
#include "emboot/trainer.h"
#include "emboot/word_vectors.h"

namespace emboot {

struct BootstrapConfig {
  int epochs = 20;
  size_t entities_per_epoch = 10;
  size_t patterns_per_epoch = 10;
  int window = 4;
  size_t dim = 15;
  TrainConfig train;
  ClassifierConfig classifier;
  int64_t min_pattern_support = 2;
  // false gives EPB: no embedding training and zero custom-cosine features.
  bool custom_embeddings = true;
  uint64_t rng_seed = 1;

  void Validate() const;
};

// Pool snapshots; snapshots[t] is the state after epoch t, snapshots[0]
// holds the seeds.
struct Trace {
  std::string system;
  std::vector<PoolState> snapshots;
};

struct BootstrapResult {
  Trace trace;
  EmbeddingTable embeddings;  // final custom table (random init for EPB)
};

// Mixes a stream index into a base seed (SplitMix64 finalizer).
uint64_t DeriveSeed(uint64_t base, uint64_t stream);

// `pretrained` may be null. Deterministic given config.rng_seed.
BootstrapResult RunBootstrap(const BootstrapConfig &config,
                             const CorpusIndex &index, const PoolState &seeds,
                             const WordVectors *pretrained);

BootstrapResult RunBootstrap(const BootstrapConfig &config,
                             const UnlabeledCorpus &corpus,
                             const SeedList &seeds,
                             const WordVectors *pretrained);

}  // namespace emboot

#endif  // EMBOOT_BOOTSTRAP_H_
