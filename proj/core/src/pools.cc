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

#include "emboot/pools.h"

#include "emboot/errors.h"

namespace emboot {

PoolState::PoolState(std::vector<std::string> categories)
    : categories_(std::move(categories)),
      entity_pools_(categories_.size()),
      pattern_pools_(categories_.size()) {}

std::optional<size_t> PoolState::CategoryIndex(std::string_view name) const {
  for (size_t c = 0; c < categories_.size(); ++c) {
    if (categories_[c] == name) return c;
  }
  return std::nullopt;
}

void PoolState::AddEntity(size_t category, int32_t entity, int epoch,
                          double score) {
  if (!entity_owner_.emplace(entity, category).second) {
    throw ConfigError("entity " + std::to_string(entity) +
                      " is already pooled");
  }
  entity_pools_[category].push_back(PoolEntry{entity, epoch, score});
}

void PoolState::AddPattern(size_t category, int32_t pattern, int epoch,
                           double score) {
  if (!pattern_owner_.emplace(pattern, category).second) {
    throw ConfigError("pattern " + std::to_string(pattern) +
                      " is already pooled");
  }
  pattern_pools_[category].push_back(PoolEntry{pattern, epoch, score});
}

std::optional<size_t> PoolState::EntityOwner(int32_t entity) const {
  auto it = entity_owner_.find(entity);
  if (it == entity_owner_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> PoolState::PatternOwner(int32_t pattern) const {
  auto it = pattern_owner_.find(pattern);
  if (it == pattern_owner_.end()) return std::nullopt;
  return it->second;
}

std::vector<Item> PoolState::Items(size_t category) const {
  std::vector<Item> items;
  items.reserve(entity_pools_[category].size() +
                pattern_pools_[category].size());
  for (const PoolEntry &e : entity_pools_[category]) {
    items.push_back(Item::Entity(e.id));
  }
  for (const PoolEntry &p : pattern_pools_[category]) {
    items.push_back(Item::Pattern(p.id));
  }
  return items;
}

bool PoolState::operator==(const PoolState &other) const {
  return categories_ == other.categories_ &&
         entity_pools_ == other.entity_pools_ &&
         pattern_pools_ == other.pattern_pools_;
}

PoolState InitPools(const SeedList &seeds, const Vocabulary &entities) {
  if (seeds.empty()) throw ConfigError("seed list has no categories");
  std::vector<std::string> categories;
  for (const auto &[category, surfaces] : seeds) {
    for (const std::string &existing : categories) {
      if (existing == category) {
        throw ConfigError("category '" + category + "' listed twice");
      }
    }
    categories.push_back(category);
  }
  PoolState pools(std::move(categories));
  for (size_t c = 0; c < seeds.size(); ++c) {
    for (const std::string &surface : seeds[c].second) {
      std::optional<int32_t> id = entities.Find(surface);
      if (!id) {
        throw ConfigError("seed '" + surface + "' does not occur in corpus");
      }
      if (pools.EntityOwner(*id)) {
        throw ConfigError("seed '" + surface + "' listed more than once");
      }
      pools.AddEntity(c, *id, 0, 1.0);
    }
  }
  return pools;
}

}  // namespace emboot
