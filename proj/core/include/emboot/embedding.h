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

#ifndef EMBOOT_EMBEDDING_H_
#define EMBOOT_EMBEDDING_H_

#include <cstdint>
#include <span>
#include <vector>

namespace emboot {

// Reference to an entity or a pattern row of an EmbeddingTable.
struct Item {
  enum class Kind : uint8_t { kEntity, kPattern };
  Kind kind = Kind::kEntity;
  int32_t id = 0;

  static Item Entity(int32_t id) { return Item{Kind::kEntity, id}; }
  static Item Pattern(int32_t id) { return Item{Kind::kPattern, id}; }

  bool operator==(const Item &) const = default;
};

// Dense vectors for every entity and every pattern, stored row-major.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  // Zero-initialized table.
  EmbeddingTable(size_t num_entities, size_t num_patterns, size_t dim);

  // Components drawn i.i.d. uniform on [-0.5/dim, 0.5/dim]; the same seed
  // gives a bitwise-identical table.
  static EmbeddingTable Random(size_t num_entities, size_t num_patterns,
                               size_t dim, uint64_t seed);

  size_t dim() const { return dim_; }
  size_t num_entities() const { return num_entities_; }
  size_t num_patterns() const { return num_patterns_; }

  std::span<double> entity(int32_t id) {
    return {entities_.data() + static_cast<size_t>(id) * dim_, dim_};
  }
  std::span<const double> entity(int32_t id) const {
    return {entities_.data() + static_cast<size_t>(id) * dim_, dim_};
  }
  std::span<double> pattern(int32_t id) {
    return {patterns_.data() + static_cast<size_t>(id) * dim_, dim_};
  }
  std::span<const double> pattern(int32_t id) const {
    return {patterns_.data() + static_cast<size_t>(id) * dim_, dim_};
  }
  std::span<double> vec(Item item) {
    return item.kind == Item::Kind::kEntity ? entity(item.id)
                                            : pattern(item.id);
  }
  std::span<const double> vec(Item item) const {
    return item.kind == Item::Kind::kEntity ? entity(item.id)
                                            : pattern(item.id);
  }
  bool Contains(Item item) const;

  // Flat parameter access; entity rows come first, then pattern rows.
  std::span<double> parameters_entities() { return entities_; }
  std::span<double> parameters_patterns() { return patterns_; }

  bool AllFinite() const;
  bool operator==(const EmbeddingTable &) const = default;

 private:
  size_t dim_ = 0;
  size_t num_entities_ = 0;
  size_t num_patterns_ = 0;
  std::vector<double> entities_;
  std::vector<double> patterns_;
};

// Logistic function. The result is clamped into the open interval (0, 1).
double Sigmoid(double x);

// log(Sigmoid(x)) without overflow or underflow for large |x|.
double LogSigmoid(double x);

double Dot(std::span<const double> u, std::span<const double> v);

// Cosine similarity; 0 when either vector has zero norm. Throws ConfigError
// on a dimension mismatch.
double Cosine(std::span<const double> u, std::span<const double> v);

// Componentwise mean of the given rows; zero vector when `rows` is empty.
std::vector<double> Mean(const std::vector<std::span<const double>> &rows,
                         size_t dim);

}  // namespace emboot

#endif  // EMBOOT_EMBEDDING_H_
