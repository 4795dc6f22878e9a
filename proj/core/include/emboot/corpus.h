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

// Annotated corpora: CoNLL-style ingestion, entity mentions, and the
// label-free view that training code consumes.

#ifndef EMBOOT_CORPUS_H_
#define EMBOOT_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace emboot {

using Sentence = std::vector<std::string>;

// Token span [start, end) inside one sentence.
struct Span {
  size_t sentence = 0;
  size_t start = 0;
  size_t end = 0;

  bool operator==(const Span &) const = default;
};

struct Mention {
  Span span;
  std::string label;

  bool operator==(const Mention &) const = default;
};

// Sentences plus mention boundaries, with the gold labels stripped. This is
// the only corpus type the bootstrapping code paths accept.
struct UnlabeledCorpus {
  std::vector<Sentence> sentences;
  std::vector<Span> spans;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::vector<Mention> mentions;

  UnlabeledCorpus WithoutLabels() const;
  size_t NumTokens() const;

  // Throws ConfigError if a span is out of range or two spans in one
  // sentence overlap.
  void Validate() const;

  bool operator==(const Corpus &) const = default;
};

enum class ConllFormat {
  kAuto,        // decided by the column count of the first token line
  kConll2003,   // token POS chunk tag
  kTwoColumn,   // token tag
};

// Parses whitespace-separated column text with one token per line and blank
// lines between sentences. The last column is a BIO entity tag. An I- tag that
// does not continue a run of the same category opens a new mention.
// `-DOCSTART-` lines are skipped. Throws ParseError with the line number.
Corpus ParseConll(std::istream &in, ConllFormat format = ConllFormat::kAuto);
Corpus ParseConll(std::string_view text,
                  ConllFormat format = ConllFormat::kAuto);

// Writes the corpus in two-column BIO format.
void WriteConll(const Corpus &corpus, std::ostream &out);

// Surface string of a span: its tokens joined by single spaces.
std::string SpanSurface(const Sentence &sentence, const Span &span);

// Insertion-ordered string vocabulary with per-key counts.
class Vocabulary {
 public:
  // Adds one occurrence of `key` and returns its id.
  int32_t Add(std::string_view key, int64_t count = 1);

  std::optional<int32_t> Find(std::string_view key) const;
  const std::string &key(int32_t id) const { return keys_[id]; }
  int64_t count(int32_t id) const { return counts_[id]; }
  size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  const std::vector<std::string> &keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;
  std::vector<int64_t> counts_;
  std::unordered_map<std::string, int32_t> index_;
};

// Unique entity surface forms with their mention frequencies, in order of
// first appearance. Surfaces keep their original case.
Vocabulary ExtractEntities(const UnlabeledCorpus &corpus);

// Majority gold label per entity surface; ties go to the label seen first.
std::unordered_map<std::string, std::string> GoldLabels(const Corpus &corpus);

}  // namespace emboot

#endif  // EMBOOT_CORPUS_H_
