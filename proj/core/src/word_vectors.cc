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

#include "emboot/word_vectors.h"

#include <cmath>
#include <istream>
#include <sstream>

#include "emboot/errors.h"

namespace emboot {

WordVectors WordVectors::Load(std::istream &in) {
  WordVectors vectors;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    std::vector<double> values;
    std::string field;
    while (fields >> field) {
      try {
        size_t used = 0;
        double v = std::stod(field, &used);
        if (used != field.size() || !std::isfinite(v)) throw std::exception();
        values.push_back(v);
      } catch (const std::exception &) {
        throw ParseError(line_number, "invalid vector component '" + field +
                                          "'");
      }
    }
    if (values.empty()) throw ParseError(line_number, "word without vector");
    if (vectors.dim_ == 0) vectors.dim_ = values.size();
    if (values.size() != vectors.dim_) {
      throw ParseError(line_number,
                       "expected " + std::to_string(vectors.dim_) +
                           " components, got " + std::to_string(values.size()));
    }
    vectors.Add(std::move(word), std::move(values));
  }
  return vectors;
}

void WordVectors::Add(std::string word, std::vector<double> vector) {
  if (dim_ == 0) dim_ = vector.size();
  if (vector.size() != dim_) {
    throw ConfigError("word vector for '" + word + "' has wrong dimension");
  }
  auto it = index_.find(word);
  if (it != index_.end()) {
    std::copy(vector.begin(), vector.end(), data_.begin() + it->second * dim_);
    return;
  }
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  data_.insert(data_.end(), vector.begin(), vector.end());
}

std::optional<std::span<const double>> WordVectors::Find(
    std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const double>(data_.data() + it->second * dim_, dim_);
}

std::vector<double> WordVectors::Average(
    const std::vector<std::string> &tokens, size_t *found) const {
  std::vector<double> mean(dim_, 0.0);
  size_t hits = 0;
  for (const std::string &token : tokens) {
    auto v = Find(token);
    if (!v) continue;
    for (size_t i = 0; i < dim_; ++i) mean[i] += (*v)[i];
    ++hits;
  }
  if (hits > 0) {
    for (double &x : mean) x /= static_cast<double>(hits);
  }
  if (found != nullptr) *found = hits;
  return mean;
}

std::vector<std::string> SplitSurface(std::string_view surface) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < surface.size()) {
    size_t next = surface.find(' ', pos);
    if (next == std::string_view::npos) next = surface.size();
    if (next > pos) tokens.emplace_back(surface.substr(pos, next - pos));
    pos = next + 1;
  }
  return tokens;
}

}  // namespace emboot
