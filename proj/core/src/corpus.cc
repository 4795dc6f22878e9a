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

#include "emboot/corpus.h"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "emboot/errors.h"

namespace emboot {
namespace {

std::vector<std::string> SplitColumns(const std::string &line) {
  std::vector<std::string> columns;
  std::istringstream in(line);
  std::string column;
  while (in >> column) columns.push_back(column);
  return columns;
}

bool IsBlank(const std::string &line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

size_t ColumnCount(ConllFormat format) {
  return format == ConllFormat::kConll2003 ? 4 : 2;
}

// Accumulates one sentence at a time and closes BIO runs.
class SentenceBuilder {
 public:
  explicit SentenceBuilder(Corpus *corpus) : corpus_(corpus) {}

  void AddToken(const std::string &token, const std::string &tag,
                size_t line_number) {
    std::string category;
    char prefix = 'O';
    if (tag != "O") {
      if (tag.size() < 3 || tag[1] != '-' ||
          (tag[0] != 'B' && tag[0] != 'I')) {
        throw ParseError(line_number, "invalid BIO tag '" + tag + "'");
      }
      prefix = tag[0];
      category = tag.substr(2);
    }

    size_t position = tokens_.size();
    bool continues = prefix == 'I' && open_ && open_label_ == category;
    if (!continues) {
      CloseMention(position);
      if (prefix != 'O') {
        open_ = true;
        open_start_ = position;
        open_label_ = category;
      }
    }
    tokens_.push_back(token);
  }

  void Finish() {
    CloseMention(tokens_.size());
    if (!tokens_.empty()) {
      for (Mention &m : pending_) m.span.sentence = corpus_->sentences.size();
      corpus_->sentences.push_back(std::move(tokens_));
      corpus_->mentions.insert(corpus_->mentions.end(), pending_.begin(),
                               pending_.end());
    }
    tokens_.clear();
    pending_.clear();
  }

 private:
  void CloseMention(size_t end) {
    if (!open_) return;
    pending_.push_back(Mention{Span{0, open_start_, end}, open_label_});
    open_ = false;
  }

  Corpus *corpus_;
  Sentence tokens_;
  std::vector<Mention> pending_;
  bool open_ = false;
  size_t open_start_ = 0;
  std::string open_label_;
};

}  // namespace

UnlabeledCorpus Corpus::WithoutLabels() const {
  UnlabeledCorpus view;
  view.sentences = sentences;
  view.spans.reserve(mentions.size());
  for (const Mention &m : mentions) view.spans.push_back(m.span);
  return view;
}

size_t Corpus::NumTokens() const {
  size_t n = 0;
  for (const Sentence &s : sentences) n += s.size();
  return n;
}

void Corpus::Validate() const {
  std::map<size_t, std::vector<std::pair<size_t, size_t>>> by_sentence;
  for (const Mention &m : mentions) {
    const Span &s = m.span;
    if (s.sentence >= sentences.size() || s.start >= s.end ||
        s.end > sentences[s.sentence].size()) {
      throw ConfigError("mention span out of range in sentence " +
                        std::to_string(s.sentence));
    }
    by_sentence[s.sentence].emplace_back(s.start, s.end);
  }
  for (auto &[sentence, spans] : by_sentence) {
    std::sort(spans.begin(), spans.end());
    for (size_t i = 1; i < spans.size(); ++i) {
      if (spans[i].first < spans[i - 1].second) {
        throw ConfigError("overlapping mentions in sentence " +
                          std::to_string(sentence));
      }
    }
  }
}

Corpus ParseConll(std::istream &in, ConllFormat format) {
  Corpus corpus;
  SentenceBuilder builder(&corpus);
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) {
      builder.Finish();
      continue;
    }
    std::vector<std::string> columns = SplitColumns(line);
    if (columns[0] == "-DOCSTART-") {
      builder.Finish();
      continue;
    }
    if (format == ConllFormat::kAuto) {
      if (columns.size() == 4) {
        format = ConllFormat::kConll2003;
      } else if (columns.size() == 2) {
        format = ConllFormat::kTwoColumn;
      } else {
        throw ParseError(line_number,
                         "expected 2 or 4 columns, got " +
                             std::to_string(columns.size()));
      }
    }
    if (columns.size() != ColumnCount(format)) {
      throw ParseError(line_number,
                       "expected " + std::to_string(ColumnCount(format)) +
                           " columns, got " + std::to_string(columns.size()));
    }
    builder.AddToken(columns.front(), columns.back(), line_number);
  }
  builder.Finish();
  return corpus;
}

Corpus ParseConll(std::string_view text, ConllFormat format) {
  std::istringstream in{std::string(text)};
  return ParseConll(in, format);
}

void WriteConll(const Corpus &corpus, std::ostream &out) {
  std::vector<std::vector<const Mention *>> by_sentence(
      corpus.sentences.size());
  for (const Mention &m : corpus.mentions) {
    by_sentence[m.span.sentence].push_back(&m);
  }
  for (size_t s = 0; s < corpus.sentences.size(); ++s) {
    const Sentence &tokens = corpus.sentences[s];
    std::vector<std::string> tags(tokens.size(), "O");
    for (const Mention *m : by_sentence[s]) {
      for (size_t i = m->span.start; i < m->span.end; ++i) {
        tags[i] = (i == m->span.start ? "B-" : "I-") + m->label;
      }
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
      out << tokens[i] << ' ' << tags[i] << '\n';
    }
    out << '\n';
  }
}

std::string SpanSurface(const Sentence &sentence, const Span &span) {
  std::string surface;
  for (size_t i = span.start; i < span.end; ++i) {
    if (i > span.start) surface += ' ';
    surface += sentence[i];
  }
  return surface;
}

int32_t Vocabulary::Add(std::string_view key, int64_t count) {
  auto it = index_.find(std::string(key));
  if (it != index_.end()) {
    counts_[it->second] += count;
    return it->second;
  }
  int32_t id = static_cast<int32_t>(keys_.size());
  keys_.emplace_back(key);
  counts_.push_back(count);
  index_.emplace(keys_.back(), id);
  return id;
}

std::optional<int32_t> Vocabulary::Find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary ExtractEntities(const UnlabeledCorpus &corpus) {
  Vocabulary entities;
  for (const Span &span : corpus.spans) {
    entities.Add(SpanSurface(corpus.sentences[span.sentence], span));
  }
  return entities;
}

std::unordered_map<std::string, std::string> GoldLabels(const Corpus &corpus) {
  // surface -> label -> (count, first position)
  std::unordered_map<std::string,
                     std::map<std::string, std::pair<int64_t, size_t>>>
      tallies;
  for (size_t i = 0; i < corpus.mentions.size(); ++i) {
    const Mention &m = corpus.mentions[i];
    auto &slot = tallies[SpanSurface(corpus.sentences[m.span.sentence],
                                     m.span)][m.label];
    if (slot.first == 0) slot.second = i;
    ++slot.first;
  }
  std::unordered_map<std::string, std::string> gold;
  for (const auto &[surface, labels] : tallies) {
    const std::string *best = nullptr;
    std::pair<int64_t, size_t> best_key{0, 0};
    for (const auto &[label, tally] : labels) {
      if (best == nullptr || tally.first > best_key.first ||
          (tally.first == best_key.first && tally.second < best_key.second)) {
        best = &label;
        best_key = tally;
      }
    }
    gold.emplace(surface, *best);
  }
  return gold;
}

}  // namespace emboot
