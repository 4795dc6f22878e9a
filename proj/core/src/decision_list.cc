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

#include "emboot/decision_list.h"

#include <algorithm>

#include "emboot/classifier.h"
#include "emboot/errors.h"

namespace emboot {
namespace {

void SortForPresentation(std::vector<DecisionEntry> &entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const DecisionEntry &a, const DecisionEntry &b) {
                     const double ma = *std::max_element(
                         a.probabilities.begin(), a.probabilities.end());
                     const double mb = *std::max_element(
                         b.probabilities.begin(), b.probabilities.end());
                     if (ma != mb) return ma > mb;
                     return a.pattern < b.pattern;
                   });
}

void RequireEntityPools(const PoolState &pools) {
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    if (pools.entities(c).empty()) {
      throw ConfigError("category '" + pools.categories()[c] +
                        "' has an empty entity pool");
    }
  }
}

}  // namespace

DecisionList::DecisionList(std::vector<std::string> categories,
                           std::vector<DecisionEntry> entries, int epoch)
    : categories_(std::move(categories)),
      entries_(std::move(entries)),
      epoch_(epoch) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].probabilities.size() != categories_.size() ||
        entries_[i].pool >= categories_.size()) {
      throw ConfigError("decision entry does not match the categories");
    }
    if (!by_pattern_.emplace(entries_[i].pattern, i).second) {
      throw ConfigError("pattern listed twice in decision list");
    }
  }
}

const DecisionEntry *DecisionList::Find(int32_t pattern) const {
  auto it = by_pattern_.find(pattern);
  return it == by_pattern_.end() ? nullptr : &entries_[it->second];
}

std::vector<double> CategoryCentroid(size_t category, const PoolState &pools,
                                     const EmbeddingTable &table) {
  const auto &pool = pools.entities(category);
  if (pool.empty()) {
    throw ConfigError("centroid of empty pool '" +
                      pools.categories()[category] + "'");
  }
  std::vector<std::span<const double>> rows;
  rows.reserve(pool.size());
  for (const PoolEntry &entry : pool) rows.push_back(table.entity(entry.id));
  return Mean(rows, table.dim());
}

std::vector<double> PatternProbabilities(
    std::span<const double> pattern_vector,
    const std::vector<std::vector<double>> &centroids) {
  std::vector<double> scores;
  scores.reserve(centroids.size());
  for (const auto &centroid : centroids) {
    scores.push_back(Cosine(pattern_vector, centroid));
  }
  Softmax(scores);
  return scores;
}

DecisionList BuildDecisionList(const PoolState &pools,
                               const EmbeddingTable &table, int epoch) {
  RequireEntityPools(pools);
  std::vector<std::vector<double>> centroids;
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    centroids.push_back(CategoryCentroid(c, pools, table));
  }
  std::vector<DecisionEntry> entries;
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    for (const PoolEntry &entry : pools.patterns(c)) {
      entries.push_back(DecisionEntry{
          entry.id, c, PatternProbabilities(table.pattern(entry.id), centroids)});
    }
  }
  SortForPresentation(entries);
  return DecisionList(pools.categories(), std::move(entries), epoch);
}

DecisionList BuildPretrainedDecisionList(const PoolState &pools,
                                         const Vocabulary &entities,
                                         const PatternVocabulary &patterns,
                                         const WordVectors &vectors,
                                         int epoch) {
  RequireEntityPools(pools);
  const size_t num_categories = pools.num_categories();
  std::vector<std::vector<double>> centroids;
  for (size_t c = 0; c < num_categories; ++c) {
    std::vector<std::vector<double>> members;
    for (const PoolEntry &entry : pools.entities(c)) {
      size_t found = 0;
      auto v = vectors.Average(SplitSurface(entities.key(entry.id)), &found);
      if (found > 0) members.push_back(std::move(v));
    }
    std::vector<std::span<const double>> rows(members.begin(), members.end());
    centroids.push_back(Mean(rows, vectors.dim()));
  }

  std::vector<DecisionEntry> entries;
  for (size_t c = 0; c < num_categories; ++c) {
    for (const PoolEntry &entry : pools.patterns(c)) {
      size_t found = 0;
      auto v = vectors.Average(patterns.pattern(entry.id).tokens, &found);
      std::vector<double> probs;
      if (found == 0) {
        probs.assign(num_categories, 1.0 / static_cast<double>(num_categories));
      } else {
        probs = PatternProbabilities(v, centroids);
      }
      entries.push_back(DecisionEntry{entry.id, c, std::move(probs)});
    }
  }
  SortForPresentation(entries);
  return DecisionList(pools.categories(), std::move(entries), epoch);
}

double NoisyOrScore(int32_t entity, size_t category, const DecisionList &dl,
                    const CooccurrenceMatrix &cooc) {
  double miss = 1.0;
  for (const auto &cell : cooc.EntityRow(entity)) {
    const DecisionEntry *entry = dl.Find(cell.id);
    if (entry == nullptr || entry->pool != category) continue;
    miss *= 1.0 - entry->probabilities[category];
  }
  return 1.0 - miss;
}

Classification Classify(int32_t entity, const DecisionList &dl,
                        const CooccurrenceMatrix &cooc) {
  const size_t num_categories = dl.categories().size();
  Classification result;
  std::vector<double> miss(num_categories, 1.0);
  std::vector<size_t> matched(num_categories, 0);
  for (const auto &cell : cooc.EntityRow(entity)) {
    const DecisionEntry *entry = dl.Find(cell.id);
    if (entry == nullptr) continue;
    miss[entry->pool] *= 1.0 - entry->probabilities[entry->pool];
    ++matched[entry->pool];
    ++result.matched_patterns;
  }
  result.scores.resize(num_categories);
  for (size_t c = 0; c < num_categories; ++c) result.scores[c] = 1.0 - miss[c];

  for (size_t c = 0; c < num_categories; ++c) {
    if (result.scores[c] <= 0.0) continue;
    if (!result.category || result.scores[c] > result.scores[*result.category]) {
      result.category = c;
    }
  }
  if (result.category) result.contributing_patterns = matched[*result.category];
  return result;
}

}  // namespace emboot
