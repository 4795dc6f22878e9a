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

#ifndef EMBOOT_POOLS_H_
#define EMBOOT_POOLS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "emboot/corpus.h"
#include "emboot/embedding.h"

namespace emboot {

struct PoolEntry {
  int32_t id = 0;
  int epoch = 0;       // 0 for seeds
  double score = 0.0;  // promotion score (PMI or class probability)

  bool operator==(const PoolEntry &) const = default;
};

// Per-category entity and pattern pools. Pools only grow, and no entity or
// pattern belongs to two categories.
class PoolState {
 public:
  PoolState() = default;
  explicit PoolState(std::vector<std::string> categories);

  const std::vector<std::string> &categories() const { return categories_; }
  size_t num_categories() const { return categories_.size(); }
  std::optional<size_t> CategoryIndex(std::string_view name) const;

  const std::vector<PoolEntry> &entities(size_t category) const {
    return entity_pools_[category];
  }
  const std::vector<PoolEntry> &patterns(size_t category) const {
    return pattern_pools_[category];
  }

  // Throws ConfigError if the item is already pooled anywhere.
  void AddEntity(size_t category, int32_t entity, int epoch,
                 double score = 1.0);
  void AddPattern(size_t category, int32_t pattern, int epoch,
                  double score = 0.0);

  std::optional<size_t> EntityOwner(int32_t entity) const;
  std::optional<size_t> PatternOwner(int32_t pattern) const;

  size_t TotalEntities() const { return entity_owner_.size(); }
  size_t TotalPatterns() const { return pattern_owner_.size(); }

  // Entity pool followed by pattern pool of one category.
  std::vector<Item> Items(size_t category) const;

  bool operator==(const PoolState &other) const;

 private:
  std::vector<std::string> categories_;
  std::vector<std::vector<PoolEntry>> entity_pools_;
  std::vector<std::vector<PoolEntry>> pattern_pools_;
  std::unordered_map<int32_t, size_t> entity_owner_;
  std::unordered_map<int32_t, size_t> pattern_owner_;
};

// Category name -> seed surfaces, in category order.
using SeedList = std::vector<std::pair<std::string, std::vector<std::string>>>;

// Pools holding exactly the seeds at epoch 0 and empty pattern pools. Throws
// ConfigError for an empty seed list, an unknown surface (naming it), or a
// surface listed twice.
PoolState InitPools(const SeedList &seeds, const Vocabulary &entities);

}  // namespace emboot

#endif  // EMBOOT_POOLS_H_
