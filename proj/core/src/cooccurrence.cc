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

#include "emboot/cooccurrence.h"

#include <algorithm>
#include <map>

#include "emboot/errors.h"

namespace emboot {

std::string RenderPattern(const Pattern &pattern) {
  std::string out;
  if (pattern.side == Side::kRight) out = kEntitySlot;
  for (const std::string &token : pattern.tokens) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  if (pattern.side == Side::kLeft) {
    if (!out.empty()) out += ' ';
    out += kEntitySlot;
  }
  return out;
}

Pattern ParsePattern(std::string_view rendered) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= rendered.size()) {
    size_t next = rendered.find(' ', pos);
    if (next == std::string_view::npos) next = rendered.size();
    parts.emplace_back(rendered.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.size() < 2) {
    throw ParseError("pattern needs a slot and at least one token: '" +
                     std::string(rendered) + "'");
  }
  size_t slots = std::count(parts.begin(), parts.end(), kEntitySlot);
  Pattern pattern;
  if (slots == 1 && parts.front() == kEntitySlot) {
    pattern.side = Side::kRight;
    pattern.tokens.assign(parts.begin() + 1, parts.end());
  } else if (slots == 1 && parts.back() == kEntitySlot) {
    pattern.side = Side::kLeft;
    pattern.tokens.assign(parts.begin(), parts.end() - 1);
  } else {
    throw ParseError("malformed pattern '" + std::string(rendered) + "'");
  }
  for (const std::string &token : pattern.tokens) {
    if (token.empty()) {
      throw ParseError("empty token in pattern '" + std::string(rendered) +
                       "'");
    }
  }
  return pattern;
}

CooccurrenceMatrix CooccurrenceMatrix::FromTriples(
    size_t num_entities, size_t num_patterns,
    const std::vector<std::tuple<int32_t, int32_t, int64_t>> &triples) {
  std::map<std::pair<int32_t, int32_t>, int64_t> merged;
  for (const auto &[e, p, n] : triples) {
    if (e < 0 || static_cast<size_t>(e) >= num_entities || p < 0 ||
        static_cast<size_t>(p) >= num_patterns) {
      throw ConfigError("co-occurrence id out of range");
    }
    merged[{e, p}] += n;
  }

  CooccurrenceMatrix m;
  m.entity_marginals_.assign(num_entities, 0);
  m.pattern_marginals_.assign(num_patterns, 0);
  m.row_offsets_.assign(num_entities + 1, 0);
  m.column_offsets_.assign(num_patterns + 1, 0);
  for (const auto &[key, n] : merged) {
    if (n == 0) continue;
    if (n < 0) throw ConfigError("negative co-occurrence count");
    m.row_offsets_[key.first + 1]++;
    m.column_offsets_[key.second + 1]++;
    m.entity_marginals_[key.first] += n;
    m.pattern_marginals_[key.second] += n;
    m.total_ += n;
  }
  for (size_t i = 0; i < num_entities; ++i) {
    m.row_offsets_[i + 1] += m.row_offsets_[i];
  }
  for (size_t i = 0; i < num_patterns; ++i) {
    m.column_offsets_[i + 1] += m.column_offsets_[i];
  }

  // The map is ordered by (entity, pattern), so rows fill in sorted order;
  // columns fill in entity order as well.
  m.row_cells_.reserve(m.row_offsets_.back());
  m.column_cells_.resize(m.column_offsets_.back());
  std::vector<size_t> column_fill(m.column_offsets_.begin(),
                                  m.column_offsets_.end() - 1);
  for (const auto &[key, n] : merged) {
    if (n == 0) continue;
    m.row_cells_.push_back(Cell{key.second, n});
    m.column_cells_[column_fill[key.second]++] = Cell{key.first, n};
  }
  return m;
}

int64_t CooccurrenceMatrix::Count(int32_t entity, int32_t pattern) const {
  std::span<const Cell> row = EntityRow(entity);
  auto it = std::lower_bound(
      row.begin(), row.end(), pattern,
      [](const Cell &cell, int32_t id) { return cell.id < id; });
  if (it == row.end() || it->id != pattern) return 0;
  return it->count;
}

std::span<const CooccurrenceMatrix::Cell> CooccurrenceMatrix::EntityRow(
    int32_t entity) const {
  return std::span<const Cell>(row_cells_.data() + row_offsets_[entity],
                               row_offsets_[entity + 1] - row_offsets_[entity]);
}

std::span<const CooccurrenceMatrix::Cell> CooccurrenceMatrix::PatternColumn(
    int32_t pattern) const {
  return std::span<const Cell>(
      column_cells_.data() + column_offsets_[pattern],
      column_offsets_[pattern + 1] - column_offsets_[pattern]);
}

bool CooccurrenceMatrix::operator==(const CooccurrenceMatrix &other) const {
  auto same_cells = [](const std::vector<Cell> &a, const std::vector<Cell> &b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const Cell &x, const Cell &y) {
                        return x.id == y.id && x.count == y.count;
                      });
  };
  return row_offsets_ == other.row_offsets_ &&
         same_cells(row_cells_, other.row_cells_) &&
         entity_marginals_ == other.entity_marginals_ &&
         pattern_marginals_ == other.pattern_marginals_ &&
         total_ == other.total_;
}

int32_t PatternVocabulary::Add(const Pattern &pattern) {
  size_t before = rendered_.size();
  int32_t id = rendered_.Add(RenderPattern(pattern));
  if (rendered_.size() > before) patterns_.push_back(pattern);
  return id;
}

PatternIndex GeneratePatterns(const UnlabeledCorpus &corpus, int window,
                              const Vocabulary &entities) {
  if (window < 1) throw ConfigError("pattern window must be >= 1");
  PatternIndex index;
  std::vector<std::tuple<int32_t, int32_t, int64_t>> triples;
  const size_t w = static_cast<size_t>(window);

  for (const Span &span : corpus.spans) {
    const Sentence &sentence = corpus.sentences[span.sentence];
    std::optional<int32_t> entity =
        entities.Find(SpanSurface(sentence, span));
    if (!entity) throw ConfigError("mention missing from entity vocabulary");

    Pattern pattern;
    pattern.side = Side::kLeft;
    for (size_t n = 1; n <= std::min(w, span.start); ++n) {
      pattern.tokens.insert(pattern.tokens.begin(),
                            sentence[span.start - n]);
      triples.emplace_back(*entity, index.patterns.Add(pattern), 1);
    }
    pattern.side = Side::kRight;
    pattern.tokens.clear();
    for (size_t n = 1; n <= std::min(w, sentence.size() - span.end); ++n) {
      pattern.tokens.push_back(sentence[span.end + n - 1]);
      triples.emplace_back(*entity, index.patterns.Add(pattern), 1);
    }
  }
  index.cooc = CooccurrenceMatrix::FromTriples(
      entities.size(), index.patterns.size(), triples);
  return index;
}

CorpusIndex BuildCorpusIndex(const UnlabeledCorpus &corpus,
                             const IndexOptions &options) {
  Vocabulary all_entities = ExtractEntities(corpus);
  PatternIndex generated = GeneratePatterns(corpus, options.window,
                                            all_entities);
  if (options.min_entity_frequency <= 1 &&
      options.min_pattern_frequency <= 1) {
    return CorpusIndex{std::move(all_entities), std::move(generated.patterns),
                       std::move(generated.cooc)};
  }

  CorpusIndex index;
  std::vector<int32_t> entity_map(all_entities.size(), -1);
  for (size_t e = 0; e < all_entities.size(); ++e) {
    const int32_t id = static_cast<int32_t>(e);
    if (all_entities.count(id) >= options.min_entity_frequency) {
      entity_map[e] = index.entities.Add(all_entities.key(id),
                                         all_entities.count(id));
    }
  }

  // Pattern totals after entity pruning.
  std::vector<int64_t> pattern_totals(generated.patterns.size(), 0);
  for (size_t e = 0; e < all_entities.size(); ++e) {
    if (entity_map[e] < 0) continue;
    for (const auto &cell :
         generated.cooc.EntityRow(static_cast<int32_t>(e))) {
      pattern_totals[cell.id] += cell.count;
    }
  }
  const int64_t min_pattern = std::max<int64_t>(1, options.min_pattern_frequency);
  std::vector<int32_t> pattern_map(generated.patterns.size(), -1);
  for (size_t p = 0; p < generated.patterns.size(); ++p) {
    if (pattern_totals[p] >= min_pattern) {
      pattern_map[p] = index.patterns.Add(
          generated.patterns.pattern(static_cast<int32_t>(p)));
    }
  }

  std::vector<std::tuple<int32_t, int32_t, int64_t>> triples;
  for (size_t e = 0; e < all_entities.size(); ++e) {
    if (entity_map[e] < 0) continue;
    for (const auto &cell :
         generated.cooc.EntityRow(static_cast<int32_t>(e))) {
      if (pattern_map[cell.id] < 0) continue;
      triples.emplace_back(entity_map[e], pattern_map[cell.id], cell.count);
    }
  }
  index.cooc = CooccurrenceMatrix::FromTriples(
      index.entities.size(), index.patterns.size(), triples);
  return index;
}

}  // namespace emboot
