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

// Pattern ranking by PMI and the pool-growth steps of one bootstrapping
// epoch.

#ifndef EMBOOT_PROMOTION_H_
#define EMBOOT_PROMOTION_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "emboot/cooccurrence.h"
#include "emboot/corpus.h"
#include "emboot/pools.h"

namespace emboot {

inline constexpr double kNoAssociation =
    -std::numeric_limits<double>::infinity();

// Counts of one pattern against one category's entity pool.
struct PatternCategoryCounts {
  int64_t joint = 0;            // n(p,c): matches with pooled entities of c
  int64_t pattern = 0;          // n(p): all matches of p
  int64_t category = 0;         // n(c): all matches of pooled entities of c
  int64_t total = 0;            // N
  int64_t pooled_entities = 0;  // distinct pooled entities of c matched by p
};

// log(n(p,c) N / (n(p) n(c))), or kNoAssociation when n(p,c) == 0.
double PmiFromCounts(const PatternCategoryCounts &counts);

PatternCategoryCounts CountPatternCategory(int32_t pattern, size_t category,
                                           const CooccurrenceMatrix &cooc,
                                           const PoolState &pools);

double Pmi(int32_t pattern, size_t category, const CooccurrenceMatrix &cooc,
           const PoolState &pools);

// Counts for every pattern that matches at least one pooled entity of
// `category`, keyed by pattern id in ascending order.
std::vector<std::pair<int32_t, PatternCategoryCounts>> CategoryPatternCounts(
    size_t category, const CooccurrenceMatrix &cooc, const PoolState &pools);

struct PatternPromotionOptions {
  size_t patterns_per_category = 10;
  // Minimum number of distinct pooled entities a pattern must match.
  int64_t min_pooled_entities = 2;
};

// Appends up to `patterns_per_category` unpooled patterns to each pattern
// pool, ranked by PMI, then n(p,c), then rendered form. A pattern wanted by
// several categories goes to the one where it ranks highest by PMI (category
// order breaks ties) and the others move down their lists.
PoolState PromotePatterns(PoolState pools, const CooccurrenceMatrix &cooc,
                          const PatternVocabulary &patterns, int epoch,
                          const PatternPromotionOptions &options = {});

// Unpooled entities matched by at least one pooled pattern, ascending ids.
std::vector<int32_t> CandidateEntities(const PoolState &pools,
                                       const CooccurrenceMatrix &cooc);

// Per-candidate class probabilities, one row per candidate.
struct CandidateScores {
  std::vector<int32_t> entities;
  std::vector<std::vector<double>> probabilities;
};

// Appends up to `entities_per_category` candidates to each entity pool,
// ranked by the probability of that category, then corpus frequency, then
// surface. Conflicts go to the category with the higher probability.
PoolState PromoteEntities(PoolState pools, const CandidateScores &scores,
                          const Vocabulary &entities, int epoch,
                          size_t entities_per_category);

}  // namespace emboot

#endif  // EMBOOT_PROMOTION_H_
