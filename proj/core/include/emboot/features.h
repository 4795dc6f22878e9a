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

// Entity-promotion features. For each category c the block is:
//
//   0  min normalized edit distance to entPool_c
//   1  mean normalized edit distance to entPool_c
//   2  sum of PMI(p, c) over patterns p in patPool_c that match the entity
//   3  mean cosine to entPool_c, custom embeddings
//   4  max cosine to entPool_c, custom embeddings
//   5  mean cosine to entPool_c, pretrained word-averaged embeddings
//   6  max cosine to entPool_c, pretrained word-averaged embeddings
//
// A pooled entity is compared with the other members of the pools only. An
// empty comparison set gives edit distances of 1 and cosines of 0.

#ifndef EMBOOT_FEATURES_H_
#define EMBOOT_FEATURES_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "emboot/cooccurrence.h"
#include "emboot/embedding.h"
#include "emboot/pools.h"
#include "emboot/word_vectors.h"

namespace emboot {

inline constexpr size_t kFeaturesPerCategory = 7;

enum FeatureSlot : size_t {
  kMinEditDistance = 0,
  kMeanEditDistance = 1,
  kSumPmi = 2,
  kMeanCosineCustom = 3,
  kMaxCosineCustom = 4,
  kMeanCosinePretrained = 5,
  kMaxCosinePretrained = 6,
};

class FeatureExtractor {
 public:
  // `pretrained` may be null, in which case its features are zero. The
  // referenced objects must outlive the extractor.
  FeatureExtractor(const CorpusIndex &index, const WordVectors *pretrained);

  // Caches pool-dependent state. `custom` may be null, which zeroes the
  // custom-embedding features.
  void Prepare(const PoolState &pools, const EmbeddingTable *custom);

  std::vector<double> Featurize(int32_t entity) const;

  size_t dim() const { return kFeaturesPerCategory * num_categories_; }

  // Pretrained word-averaged vector of an entity surface.
  const std::vector<double> &PretrainedVector(int32_t entity) const {
    return pretrained_vectors_[entity];
  }

 private:
  struct Member {
    int32_t entity;
    std::vector<double> custom;  // unit-normalized, empty if unavailable
  };

  const CorpusIndex *index_;
  const WordVectors *pretrained_;
  std::vector<std::u32string> surfaces_;
  std::vector<std::vector<double>> pretrained_vectors_;  // unit-normalized

  const PoolState *pools_ = nullptr;
  const EmbeddingTable *custom_ = nullptr;
  size_t num_categories_ = 0;
  std::vector<std::vector<Member>> members_;
  std::unordered_map<int32_t, double> pattern_pmi_;  // pooled patterns only
};

// One-shot convenience over FeatureExtractor.
std::vector<double> Featurize(int32_t entity, const PoolState &pools,
                              const CorpusIndex &index,
                              const EmbeddingTable *custom,
                              const WordVectors *pretrained);

}  // namespace emboot

#endif  // EMBOOT_FEATURES_H_
