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

#ifndef EMBOOT_TRAINER_H_
#define EMBOOT_TRAINER_H_

#include <cstdint>
#include <random>
#include <vector>

#include "emboot/cooccurrence.h"
#include "emboot/embedding.h"
#include "emboot/objective.h"
#include "emboot/pools.h"

namespace emboot {

struct TrainConfig {
  int inner_epochs = 100;
  // Linearly decayed from learning_rate to final_learning_rate over the
  // inner epochs of one call.
  double learning_rate = 0.05;
  double final_learning_rate = 1e-4;
  int negative_samples = 5;
  uint64_t rng_seed = 1;

  // Throws ConfigError unless inner_epochs >= 0, rates > 0, and
  // negative_samples >= 1.
  void Validate() const;
};

// Draws negative patterns for an entity from the pattern unigram
// distribution raised to `power`, rejecting patterns that co-occur with it.
class NegativeSampler {
 public:
  explicit NegativeSampler(const CooccurrenceMatrix &cooc,
                           double power = 0.75);
  // Keeps a pointer to the matrix, so temporaries are refused.
  explicit NegativeSampler(CooccurrenceMatrix &&, double = 0.75) = delete;

  // Up to k distinct patterns p with Count(entity, p) == 0. Returns every
  // eligible pattern, in id order, when there are at most k of them.
  std::vector<int32_t> Sample(int32_t entity, size_t k,
                              std::mt19937_64 &rng) const;

  // Unconditional sampling weight of a pattern (sums to 1).
  double Probability(int32_t pattern) const { return probabilities_[pattern]; }

 private:
  const CooccurrenceMatrix *cooc_;
  std::vector<double> probabilities_;
  mutable std::discrete_distribution<int32_t> distribution_;
};

// k negatives for every positive occurrence of every entity, as one flat
// list per entity. Used to freeze the SG term for evaluation.
NegativeAssignment SampleNegativeAssignment(const CooccurrenceMatrix &cooc,
                                            size_t k, std::mt19937_64 &rng);

// Stochastic gradient ascent on J. Each inner epoch visits every positive
// (entity, pattern) occurrence in shuffled order, updating with k fresh
// negatives, then every Attract pair and every Repel pair. Throws
// TrainingError if a value becomes non-finite.
EmbeddingTable TrainInner(EmbeddingTable table, const CooccurrenceMatrix &cooc,
                          const PoolState &pools, const TrainConfig &config);

}  // namespace emboot

#endif  // EMBOOT_TRAINER_H_
