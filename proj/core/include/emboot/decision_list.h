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

// Global interpretable model: every pooled pattern carries a probability per
// category, the softmax of its cosine to each category centroid. An entity's
// score for category c combines the patterns of c's pool that match it:
//
//   Score(e, c) = 1 - prod_{p in patPool_c, p matches e} (1 - prob_c(p))

#ifndef EMBOOT_DECISION_LIST_H_
#define EMBOOT_DECISION_LIST_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "emboot/cooccurrence.h"
#include "emboot/embedding.h"
#include "emboot/pools.h"
#include "emboot/word_vectors.h"

namespace emboot {

struct DecisionEntry {
  int32_t pattern = 0;
  size_t pool = 0;  // category whose pattern pool holds the pattern
  std::vector<double> probabilities;
};

class DecisionList {
 public:
  DecisionList() = default;
  DecisionList(std::vector<std::string> categories,
               std::vector<DecisionEntry> entries, int epoch);

  const std::vector<std::string> &categories() const { return categories_; }
  const std::vector<DecisionEntry> &entries() const { return entries_; }
  int epoch() const { return epoch_; }
  bool empty() const { return entries_.empty(); }

  const DecisionEntry *Find(int32_t pattern) const;

 private:
  std::vector<std::string> categories_;
  std::vector<DecisionEntry> entries_;
  int epoch_ = 0;
  std::unordered_map<int32_t, size_t> by_pattern_;
};

// Mean custom vector of a category's entity pool. Throws ConfigError when
// the pool is empty.
std::vector<double> CategoryCentroid(size_t category, const PoolState &pools,
                                     const EmbeddingTable &table);

// Softmax over the cosines between a pattern vector and each centroid.
std::vector<double> PatternProbabilities(
    std::span<const double> pattern_vector,
    const std::vector<std::vector<double>> &centroids);

// One entry per pooled pattern, ordered by maximum class probability
// (descending), then pattern id.
DecisionList BuildDecisionList(const PoolState &pools,
                               const EmbeddingTable &table, int epoch = 0);

// Same construction from pretrained word vectors: entity and pattern vectors
// are averages of their in-vocabulary tokens; a pattern with no
// in-vocabulary token gets a uniform distribution.
DecisionList BuildPretrainedDecisionList(const PoolState &pools,
                                         const Vocabulary &entities,
                                         const PatternVocabulary &patterns,
                                         const WordVectors &vectors,
                                         int epoch = 0);

double NoisyOrScore(int32_t entity, size_t category, const DecisionList &dl,
                    const CooccurrenceMatrix &cooc);

struct Classification {
  std::optional<size_t> category;  // nullopt: abstain
  std::vector<double> scores;
  // Patterns of the chosen category's pool that matched the entity.
  size_t contributing_patterns = 0;
  // Decision-list patterns of any pool that matched the entity.
  size_t matched_patterns = 0;

  bool abstained() const { return !category.has_value(); }
};

// Highest Noisy-Or score wins, ties go to the earlier category. Abstains
// when every score is zero.
Classification Classify(int32_t entity, const DecisionList &dl,
                        const CooccurrenceMatrix &cooc);

}  // namespace emboot

#endif  // EMBOOT_DECISION_LIST_H_
