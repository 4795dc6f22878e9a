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

#include "emboot/objective.h"

#include "emboot/errors.h"

namespace emboot {
namespace {

void CheckShapes(const EmbeddingTable &table, const CooccurrenceMatrix &cooc,
                 const PoolState &pools, const NegativeAssignment &negatives) {
  if (cooc.num_entities() > table.num_entities() ||
      cooc.num_patterns() > table.num_patterns()) {
    throw ConfigError("co-occurrence matrix is larger than the table");
  }
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    for (Item item : pools.Items(c)) {
      if (!table.Contains(item)) {
        throw ConfigError("pooled item " + std::to_string(item.id) +
                          " of category '" + pools.categories()[c] +
                          "' has no embedding");
      }
    }
  }
  if (negatives.size() > table.num_entities()) {
    throw ConfigError("negative assignment has more entities than the table");
  }
  for (const auto &row : negatives) {
    for (int32_t p : row) {
      if (!table.Contains(Item::Pattern(p))) {
        throw ConfigError("negative pattern " + std::to_string(p) +
                          " has no embedding");
      }
    }
  }
}

void AddScaled(std::span<double> out, double scale,
               std::span<const double> v) {
  for (size_t i = 0; i < out.size(); ++i) out[i] += scale * v[i];
}

// Visits every Attract pair (sign +1) and Repel pair (sign -1).
template <typename Visit>
void ForEachPoolPair(const PoolState &pools, Visit visit) {
  std::vector<std::vector<Item>> items(pools.num_categories());
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    items[c] = pools.Items(c);
  }
  for (size_t c = 0; c < items.size(); ++c) {
    for (size_t i = 0; i < items[c].size(); ++i) {
      for (size_t j = i + 1; j < items[c].size(); ++j) {
        visit(items[c][i], items[c][j], 1.0);
      }
    }
  }
  for (size_t c1 = 0; c1 < items.size(); ++c1) {
    for (size_t c2 = c1 + 1; c2 < items.size(); ++c2) {
      for (Item x : items[c1]) {
        for (Item y : items[c2]) visit(x, y, -1.0);
      }
    }
  }
}

}  // namespace

ObjectiveTerms EvaluateObjective(const EmbeddingTable &table,
                                 const CooccurrenceMatrix &cooc,
                                 const PoolState &pools,
                                 const NegativeAssignment &negatives) {
  CheckShapes(table, cooc, pools, negatives);
  ObjectiveTerms terms;
  for (size_t e = 0; e < cooc.num_entities(); ++e) {
    const auto ve = table.entity(static_cast<int32_t>(e));
    for (const auto &cell : cooc.EntityRow(static_cast<int32_t>(e))) {
      terms.sg += static_cast<double>(cell.count) *
                  LogSigmoid(Dot(ve, table.pattern(cell.id)));
    }
  }
  for (size_t e = 0; e < negatives.size(); ++e) {
    const auto ve = table.entity(static_cast<int32_t>(e));
    for (int32_t p : negatives[e]) {
      terms.sg += LogSigmoid(-Dot(ve, table.pattern(p)));
    }
  }
  ForEachPoolPair(pools, [&](Item x, Item y, double sign) {
    const double value = LogSigmoid(sign * Dot(table.vec(x), table.vec(y)));
    if (sign > 0) {
      terms.attract += value;
    } else {
      terms.repel += value;
    }
  });
  return terms;
}

EmbeddingTable ObjectiveGradient(const EmbeddingTable &table,
                                 const CooccurrenceMatrix &cooc,
                                 const PoolState &pools,
                                 const NegativeAssignment &negatives) {
  CheckShapes(table, cooc, pools, negatives);
  EmbeddingTable grad(table.num_entities(), table.num_patterns(), table.dim());

  auto accumulate = [&](Item x, Item y, double sign, double weight) {
    const auto vx = table.vec(x);
    const auto vy = table.vec(y);
    const double slope = weight * LogSigmoidSlope(Dot(vx, vy), sign);
    AddScaled(grad.vec(x), slope, vy);
    AddScaled(grad.vec(y), slope, vx);
  };

  for (size_t e = 0; e < cooc.num_entities(); ++e) {
    const Item entity = Item::Entity(static_cast<int32_t>(e));
    for (const auto &cell : cooc.EntityRow(entity.id)) {
      accumulate(entity, Item::Pattern(cell.id), 1.0,
                 static_cast<double>(cell.count));
    }
  }
  for (size_t e = 0; e < negatives.size(); ++e) {
    const Item entity = Item::Entity(static_cast<int32_t>(e));
    for (int32_t p : negatives[e]) {
      accumulate(entity, Item::Pattern(p), -1.0, 1.0);
    }
  }
  ForEachPoolPair(pools, [&](Item x, Item y, double sign) {
    accumulate(x, y, sign, 1.0);
  });
  return grad;
}

}  // namespace emboot
