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

#include "emboot/promotion.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "emboot/errors.h"

namespace emboot {
namespace {

struct Bid {
  size_t category;
  int32_t item;
  double score;
  int64_t support;      // secondary key, higher first
  const std::string *name;  // tertiary key, lexicographic
};

bool BidBefore(const Bid &a, const Bid &b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.support != b.support) return a.support > b.support;
  if (*a.name != *b.name) return *a.name < *b.name;
  return a.category < b.category;
}

// Greedy allocation in global bid order: every category takes its best
// remaining items until it has `capacity` of them.
template <typename Assign>
void Allocate(std::vector<Bid> bids, size_t num_categories, size_t capacity,
              Assign assign) {
  std::sort(bids.begin(), bids.end(), BidBefore);
  std::vector<size_t> taken_per_category(num_categories, 0);
  std::unordered_set<int32_t> taken;
  size_t full = 0;
  for (const Bid &bid : bids) {
    if (full == num_categories) break;
    if (taken_per_category[bid.category] >= capacity) continue;
    if (!taken.insert(bid.item).second) continue;
    assign(bid);
    if (++taken_per_category[bid.category] == capacity) ++full;
  }
}

}  // namespace

double PmiFromCounts(const PatternCategoryCounts &counts) {
  if (counts.joint == 0) return kNoAssociation;
  const double joint = static_cast<double>(counts.joint);
  const double total = static_cast<double>(counts.total);
  const double pattern = static_cast<double>(counts.pattern);
  const double category = static_cast<double>(counts.category);
  return std::log((joint * total) / (pattern * category));
}

PatternCategoryCounts CountPatternCategory(int32_t pattern, size_t category,
                                           const CooccurrenceMatrix &cooc,
                                           const PoolState &pools) {
  PatternCategoryCounts counts;
  counts.pattern = cooc.PatternMarginal(pattern);
  counts.total = cooc.total();
  for (const PoolEntry &entry : pools.entities(category)) {
    counts.category += cooc.EntityMarginal(entry.id);
    const int64_t n = cooc.Count(entry.id, pattern);
    counts.joint += n;
    if (n > 0) ++counts.pooled_entities;
  }
  return counts;
}

double Pmi(int32_t pattern, size_t category, const CooccurrenceMatrix &cooc,
           const PoolState &pools) {
  if (cooc.PatternMarginal(pattern) <= 0) {
    throw ConfigError("PMI of a pattern with no matches");
  }
  return PmiFromCounts(CountPatternCategory(pattern, category, cooc, pools));
}

std::vector<std::pair<int32_t, PatternCategoryCounts>> CategoryPatternCounts(
    size_t category, const CooccurrenceMatrix &cooc, const PoolState &pools) {
  int64_t category_total = 0;
  std::map<int32_t, PatternCategoryCounts> by_pattern;
  for (const PoolEntry &entry : pools.entities(category)) {
    category_total += cooc.EntityMarginal(entry.id);
    for (const auto &cell : cooc.EntityRow(entry.id)) {
      PatternCategoryCounts &counts = by_pattern[cell.id];
      counts.joint += cell.count;
      counts.pooled_entities += 1;
    }
  }
  std::vector<std::pair<int32_t, PatternCategoryCounts>> out;
  out.reserve(by_pattern.size());
  for (auto &[pattern, counts] : by_pattern) {
    counts.pattern = cooc.PatternMarginal(pattern);
    counts.category = category_total;
    counts.total = cooc.total();
    out.emplace_back(pattern, counts);
  }
  return out;
}

PoolState PromotePatterns(PoolState pools, const CooccurrenceMatrix &cooc,
                          const PatternVocabulary &patterns, int epoch,
                          const PatternPromotionOptions &options) {
  if (epoch < 1) throw ConfigError("pattern promotion epoch must be >= 1");
  std::vector<Bid> bids;
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    for (const auto &[pattern, counts] : CategoryPatternCounts(c, cooc, pools)) {
      if (pools.PatternOwner(pattern)) continue;
      if (counts.pooled_entities < std::max<int64_t>(1, options.min_pooled_entities)) {
        continue;
      }
      bids.push_back(Bid{c, pattern, PmiFromCounts(counts), counts.joint,
                         &patterns.rendered(pattern)});
    }
  }
  Allocate(std::move(bids), pools.num_categories(),
           options.patterns_per_category, [&](const Bid &bid) {
             pools.AddPattern(bid.category, bid.item, epoch, bid.score);
           });
  return pools;
}

std::vector<int32_t> CandidateEntities(const PoolState &pools,
                                       const CooccurrenceMatrix &cooc) {
  std::vector<int32_t> candidates;
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    for (const PoolEntry &entry : pools.patterns(c)) {
      for (const auto &cell : cooc.PatternColumn(entry.id)) {
        if (!pools.EntityOwner(cell.id)) candidates.push_back(cell.id);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  return candidates;
}

PoolState PromoteEntities(PoolState pools, const CandidateScores &scores,
                          const Vocabulary &entities, int epoch,
                          size_t entities_per_category) {
  if (scores.entities.size() != scores.probabilities.size()) {
    throw ConfigError("candidate score table is ragged");
  }
  std::vector<Bid> bids;
  bids.reserve(scores.entities.size() * pools.num_categories());
  for (size_t i = 0; i < scores.entities.size(); ++i) {
    const int32_t entity = scores.entities[i];
    if (pools.EntityOwner(entity)) continue;
    const auto &probs = scores.probabilities[i];
    if (probs.size() != pools.num_categories()) {
      throw ConfigError("candidate probabilities do not match categories");
    }
    for (size_t c = 0; c < probs.size(); ++c) {
      bids.push_back(Bid{c, entity, probs[c], entities.count(entity),
                         &entities.key(entity)});
    }
  }
  Allocate(std::move(bids), pools.num_categories(), entities_per_category,
           [&](const Bid &bid) {
             pools.AddEntity(bid.category, bid.item, epoch, bid.score);
           });
  return pools;
}

}  // namespace emboot
