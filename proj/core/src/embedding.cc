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

#include "emboot/embedding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "emboot/errors.h"

namespace emboot {
namespace {

constexpr double kSigmoidMax = 1.0 - std::numeric_limits<double>::epsilon() / 2;
constexpr double kSigmoidMin = std::numeric_limits<double>::denorm_min();

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementation.
double UnitUniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

EmbeddingTable::EmbeddingTable(size_t num_entities, size_t num_patterns,
                               size_t dim)
    : dim_(dim),
      num_entities_(num_entities),
      num_patterns_(num_patterns),
      entities_(num_entities * dim, 0.0),
      patterns_(num_patterns * dim, 0.0) {
  if (dim == 0) throw ConfigError("embedding dimension must be >= 1");
}

EmbeddingTable EmbeddingTable::Random(size_t num_entities, size_t num_patterns,
                                      size_t dim, uint64_t seed) {
  EmbeddingTable table(num_entities, num_patterns, dim);
  std::mt19937_64 rng(seed);
  const double half_width = 0.5 / static_cast<double>(dim);
  for (double &x : table.entities_) {
    x = (2.0 * UnitUniform(rng) - 1.0) * half_width;
  }
  for (double &x : table.patterns_) {
    x = (2.0 * UnitUniform(rng) - 1.0) * half_width;
  }
  return table;
}

bool EmbeddingTable::Contains(Item item) const {
  if (item.id < 0) return false;
  const size_t limit =
      item.kind == Item::Kind::kEntity ? num_entities_ : num_patterns_;
  return static_cast<size_t>(item.id) < limit;
}

bool EmbeddingTable::AllFinite() const {
  auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(entities_.begin(), entities_.end(), finite) &&
         std::all_of(patterns_.begin(), patterns_.end(), finite);
}

double Sigmoid(double x) {
  double s;
  if (x >= 0) {
    s = 1.0 / (1.0 + std::exp(-x));
  } else {
    const double e = std::exp(x);
    s = e / (1.0 + e);
  }
  return std::clamp(s, kSigmoidMin, kSigmoidMax);
}

double LogSigmoid(double x) {
  if (x >= 0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double Dot(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

double Cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw ConfigError("cosine of vectors with dimensions " +
                      std::to_string(u.size()) + " and " +
                      std::to_string(v.size()));
  }
  const double uu = Dot(u, u);
  const double vv = Dot(v, v);
  if (uu == 0.0 || vv == 0.0) return 0.0;
  return std::clamp(Dot(u, v) / std::sqrt(uu * vv), -1.0, 1.0);
}

std::vector<double> Mean(const std::vector<std::span<const double>> &rows,
                         size_t dim) {
  std::vector<double> mean(dim, 0.0);
  if (rows.empty()) return mean;
  for (std::span<const double> row : rows) {
    for (size_t i = 0; i < dim; ++i) mean[i] += row[i];
  }
  for (double &x : mean) x /= static_cast<double>(rows.size());
  return mean;
}

}  // namespace emboot
