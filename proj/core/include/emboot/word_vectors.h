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

#ifndef EMBOOT_WORD_VECTORS_H_
#define EMBOOT_WORD_VECTORS_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace emboot {

// Pretrained word embeddings, read-only after loading.
class WordVectors {
 public:
  WordVectors() = default;
  explicit WordVectors(size_t dim) : dim_(dim) {}

  // One word per line followed by its components, separated by tabs or
  // spaces. The dimension is taken from the first row; every row must match
  // it. Throws ParseError with the line number.
  static WordVectors Load(std::istream &in);

  void Add(std::string word, std::vector<double> vector);

  size_t dim() const { return dim_; }
  size_t size() const { return index_.size(); }
  bool empty() const { return index_.empty(); }

  std::optional<std::span<const double>> Find(std::string_view word) const;

  // Mean of the in-vocabulary token vectors; the zero vector when none are
  // in vocabulary. `found` receives the number of in-vocabulary tokens.
  std::vector<double> Average(const std::vector<std::string> &tokens,
                              size_t *found = nullptr) const;

  // Words in insertion order.
  const std::vector<std::string> &words() const { return words_; }

 private:
  size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::unordered_map<std::string, size_t> index_;
};

// Splits on single spaces, the way entity surfaces are joined.
std::vector<std::string> SplitSurface(std::string_view surface);

}  // namespace emboot

#endif  // EMBOOT_WORD_VECTORS_H_
