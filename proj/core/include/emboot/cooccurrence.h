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

// Context patterns and the sparse entity x pattern match-count matrix.

#ifndef EMBOOT_COOCCURRENCE_H_
#define EMBOOT_COOCCURRENCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "emboot/corpus.h"

namespace emboot {

inline constexpr std::string_view kEntitySlot = "@ENTITY";

enum class Side { kLeft, kRight };

// One-sided n-gram context. LEFT patterns precede the entity slot, RIGHT
// patterns follow it.
struct Pattern {
  Side side = Side::kLeft;
  std::vector<std::string> tokens;

  bool operator==(const Pattern &) const = default;
};

// "President @ENTITY", "@ENTITY , former president".
std::string RenderPattern(const Pattern &pattern);

// Inverse of RenderPattern. Throws ParseError unless the slot marker occurs
// exactly once, at one end, next to at least one token.
Pattern ParsePattern(std::string_view rendered);

class CooccurrenceMatrix {
 public:
  struct Cell {
    int32_t id;
    int64_t count;
  };

  CooccurrenceMatrix() = default;

  // Builds from (entity, pattern, count) triples. Duplicate keys are summed
  // and zero counts dropped.
  static CooccurrenceMatrix FromTriples(
      size_t num_entities, size_t num_patterns,
      const std::vector<std::tuple<int32_t, int32_t, int64_t>> &triples);

  size_t num_entities() const { return entity_marginals_.size(); }
  size_t num_patterns() const { return pattern_marginals_.size(); }

  int64_t Count(int32_t entity, int32_t pattern) const;

  // Patterns matching `entity`, sorted by pattern id.
  std::span<const Cell> EntityRow(int32_t entity) const;
  // Entities matched by `pattern`, sorted by entity id.
  std::span<const Cell> PatternColumn(int32_t pattern) const;

  int64_t EntityMarginal(int32_t entity) const {
    return entity_marginals_[entity];
  }
  int64_t PatternMarginal(int32_t pattern) const {
    return pattern_marginals_[pattern];
  }
  int64_t total() const { return total_; }
  size_t num_nonzero() const { return row_cells_.size(); }

  bool operator==(const CooccurrenceMatrix &other) const;

 private:
  std::vector<size_t> row_offsets_;
  std::vector<Cell> row_cells_;
  std::vector<size_t> column_offsets_;
  std::vector<Cell> column_cells_;
  std::vector<int64_t> entity_marginals_;
  std::vector<int64_t> pattern_marginals_;
  int64_t total_ = 0;
};

// Pattern table with rendered-form lookup.
class PatternVocabulary {
 public:
  int32_t Add(const Pattern &pattern);
  std::optional<int32_t> Find(std::string_view rendered) const {
    return rendered_.Find(rendered);
  }
  const Pattern &pattern(int32_t id) const { return patterns_[id]; }
  const std::string &rendered(int32_t id) const { return rendered_.key(id); }
  size_t size() const { return patterns_.size(); }

 private:
  std::vector<Pattern> patterns_;
  Vocabulary rendered_;
};

struct PatternIndex {
  PatternVocabulary patterns;
  CooccurrenceMatrix cooc;
};

// Emits, for every mention, LEFT patterns of length 1..min(window, left
// context) and RIGHT patterns of length 1..min(window, right context), and
// counts each emission against the mention's entity. Tokens of neighbouring
// mentions appear literally. `entities` must come from ExtractEntities on the
// same corpus.
PatternIndex GeneratePatterns(const UnlabeledCorpus &corpus, int window,
                              const Vocabulary &entities);

struct IndexOptions {
  int window = 4;
  int64_t min_entity_frequency = 1;
  int64_t min_pattern_frequency = 1;
};

// Everything the bootstrapping loop reads from a corpus.
struct CorpusIndex {
  Vocabulary entities;
  PatternVocabulary patterns;
  CooccurrenceMatrix cooc;
};

// ExtractEntities + GeneratePatterns, then drops entities whose mention count
// or patterns whose total match count falls below the configured minimum.
CorpusIndex BuildCorpusIndex(const UnlabeledCorpus &corpus,
                             const IndexOptions &options = {});

}  // namespace emboot

#endif  // EMBOOT_COOCCURRENCE_H_
