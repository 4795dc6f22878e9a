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

#include "emboot/evaluation.h"

#include <algorithm>

#include "emboot/errors.h"

namespace emboot {
namespace {

bool IsCorrect(int32_t entity, size_t category, const PoolState &pools,
               const Vocabulary &entities, const GoldMap &gold) {
  const std::string &surface = entities.key(entity);
  auto it = gold.find(surface);
  if (it == gold.end()) {
    throw ConfigError("no gold label for promoted entity '" + surface + "'");
  }
  return it->second == pools.categories()[category];
}

}  // namespace

std::vector<std::pair<int32_t, size_t>> PromotedEntities(const Trace &trace) {
  std::vector<std::pair<int32_t, size_t>> out;
  if (trace.snapshots.empty()) return out;
  const PoolState &last = trace.snapshots.back();
  struct Row {
    int epoch;
    size_t category;
    size_t position;
    int32_t id;
  };
  std::vector<Row> rows;
  for (size_t c = 0; c < last.num_categories(); ++c) {
    const auto &pool = last.entities(c);
    for (size_t i = 0; i < pool.size(); ++i) {
      if (pool[i].epoch > 0) rows.push_back({pool[i].epoch, c, i, pool[i].id});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
    if (a.epoch != b.epoch) return a.epoch < b.epoch;
    if (a.category != b.category) return a.category < b.category;
    return a.position < b.position;
  });
  for (const Row &r : rows) out.emplace_back(r.id, r.category);
  return out;
}

std::vector<CurvePoint> PrecisionThroughput(const Trace &trace,
                                            const Vocabulary &entities,
                                            const GoldMap &gold) {
  std::vector<CurvePoint> curve;
  for (size_t t = 0; t < trace.snapshots.size(); ++t) {
    const PoolState &pools = trace.snapshots[t];
    CurvePoint point;
    point.epoch = static_cast<int>(t);
    size_t correct = 0;
    for (size_t c = 0; c < pools.num_categories(); ++c) {
      for (const PoolEntry &entry : pools.entities(c)) {
        if (entry.epoch == 0) continue;
        ++point.throughput;
        if (IsCorrect(entry.id, c, pools, entities, gold)) ++correct;
      }
    }
    if (point.throughput > 0) {
      point.precision = static_cast<double>(correct) /
                        static_cast<double>(point.throughput);
    }
    curve.push_back(point);
  }
  return curve;
}

std::optional<double> PrecisionAtThroughput(const Trace &trace,
                                            const Vocabulary &entities,
                                            const GoldMap &gold,
                                            size_t throughput) {
  const auto promoted = PromotedEntities(trace);
  if (promoted.size() < throughput) return std::nullopt;
  if (throughput == 0) return 1.0;
  const PoolState &last = trace.snapshots.back();
  size_t correct = 0;
  for (size_t i = 0; i < throughput; ++i) {
    if (IsCorrect(promoted[i].first, promoted[i].second, last, entities,
                  gold)) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(throughput);
}

double DecisionListEvaluation::FractionAtMost(size_t k) const {
  if (classified == 0) return 0.0;
  size_t n = 0;
  for (const auto &[count, entities] : histogram) {
    if (count <= k) n += entities;
  }
  return static_cast<double>(n) / static_cast<double>(classified);
}

DecisionListEvaluation EvaluateDecisionList(const DecisionList &dl,
                                            std::span<const int32_t> entity_ids,
                                            const Vocabulary &entities,
                                            const GoldMap &gold,
                                            const CooccurrenceMatrix &cooc) {
  DecisionListEvaluation eval;
  eval.total = entity_ids.size();
  for (int32_t e : entity_ids) {
    const Classification result = Classify(e, dl, cooc);
    if (result.abstained()) continue;
    ++eval.classified;
    ++eval.histogram[result.contributing_patterns];
    auto it = gold.find(entities.key(e));
    if (it != gold.end() && it->second == dl.categories()[*result.category]) {
      ++eval.correct;
    }
  }
  if (eval.classified > 0) {
    eval.accuracy = static_cast<double>(eval.correct) /
                    static_cast<double>(eval.classified);
  }
  if (eval.total > 0) {
    eval.abstain_rate = static_cast<double>(eval.total - eval.classified) /
                        static_cast<double>(eval.total);
  }
  return eval;
}

}  // namespace emboot
