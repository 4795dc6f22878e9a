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

// Precision/throughput curves and decision-list evaluation.

#ifndef EMBOOT_EVALUATION_H_
#define EMBOOT_EVALUATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "emboot/bootstrap.h"
#include "emboot/decision_list.h"

namespace emboot {

using GoldMap = std::unordered_map<std::string, std::string>;

struct CurvePoint {
  int epoch = 0;
  size_t throughput = 0;  // promoted entities, seeds excluded
  double precision = 1.0;
};

// One point per snapshot. Precision is 1.0 while nothing has been promoted.
// Throws ConfigError if a promoted entity has no gold label.
std::vector<CurvePoint> PrecisionThroughput(const Trace &trace,
                                            const Vocabulary &entities,
                                            const GoldMap &gold);

// Precision of the first promotions of `trace` once throughput reaches
// `throughput`, counting whole epochs and then the earliest-promoted entities
// of the next epoch in pool order. Returns nullopt if the trace never gets
// that far.
std::optional<double> PrecisionAtThroughput(const Trace &trace,
                                            const Vocabulary &entities,
                                            const GoldMap &gold,
                                            size_t throughput);

// Non-seed entities of the final snapshot with the category that promoted
// them, in (epoch, category, pool) order.
std::vector<std::pair<int32_t, size_t>> PromotedEntities(const Trace &trace);

struct DecisionListEvaluation {
  size_t total = 0;
  size_t classified = 0;
  size_t correct = 0;
  double accuracy = 0.0;      // over classified entities; 0 if none
  double abstain_rate = 1.0;  // 1.0 if nothing was classified
  // Contributing-pattern count -> number of classified entities.
  std::map<size_t, size_t> histogram;

  // Fraction of classified entities with at most `k` contributing patterns.
  double FractionAtMost(size_t k) const;
};

DecisionListEvaluation EvaluateDecisionList(const DecisionList &dl,
                                            std::span<const int32_t> entity_ids,
                                            const Vocabulary &entities,
                                            const GoldMap &gold,
                                            const CooccurrenceMatrix &cooc);

}  // namespace emboot

#endif  // EMBOOT_EVALUATION_H_
