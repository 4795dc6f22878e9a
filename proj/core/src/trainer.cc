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

#include "emboot/trainer.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "emboot/errors.h"

namespace emboot {
namespace {

// Eligible patterns drawn without replacement in proportion to `weights`.
std::vector<int32_t> SampleFromEligible(const std::vector<int32_t> &eligible,
                                        std::vector<double> weights, size_t k,
                                        std::mt19937_64 &rng) {
  std::vector<int32_t> chosen;
  std::vector<int32_t> pool = eligible;
  while (chosen.size() < k && !pool.empty()) {
    double sum = 0.0;
    for (double w : weights) sum += w;
    size_t pick;
    if (sum > 0.0) {
      std::discrete_distribution<size_t> dist(weights.begin(), weights.end());
      pick = dist(rng);
    } else {
      pick = std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng);
    }
    chosen.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return chosen;
}

}  // namespace

void TrainConfig::Validate() const {
  if (inner_epochs < 0) throw ConfigError("inner epochs must be >= 0");
  if (!(learning_rate > 0.0) || !(final_learning_rate > 0.0)) {
    throw ConfigError("learning rates must be positive");
  }
  if (negative_samples < 1) throw ConfigError("negative samples must be >= 1");
}

NegativeSampler::NegativeSampler(const CooccurrenceMatrix &cooc, double power)
    : cooc_(&cooc), probabilities_(cooc.num_patterns(), 0.0) {
  double sum = 0.0;
  for (size_t p = 0; p < cooc.num_patterns(); ++p) {
    probabilities_[p] = std::pow(
        static_cast<double>(cooc.PatternMarginal(static_cast<int32_t>(p))),
        power);
    sum += probabilities_[p];
  }
  if (sum > 0.0) {
    for (double &w : probabilities_) w /= sum;
    distribution_ = std::discrete_distribution<int32_t>(probabilities_.begin(),
                                                        probabilities_.end());
  }
}

std::vector<int32_t> NegativeSampler::Sample(int32_t entity, size_t k,
                                             std::mt19937_64 &rng) const {
  const auto row = cooc_->EntityRow(entity);
  const size_t num_patterns = cooc_->num_patterns();
  const size_t num_eligible = num_patterns - row.size();
  std::vector<int32_t> chosen;
  if (num_eligible == 0 || k == 0) return chosen;

  auto is_positive = [&](int32_t p) {
    return std::binary_search(
        row.begin(), row.end(), CooccurrenceMatrix::Cell{p, 0},
        [](const auto &a, const auto &b) { return a.id < b.id; });
  };

  if (num_eligible <= k) {
    for (size_t p = 0; p < num_patterns; ++p) {
      if (!is_positive(static_cast<int32_t>(p))) {
        chosen.push_back(static_cast<int32_t>(p));
      }
    }
    return chosen;
  }

  // Rejection sampling against the full distribution. Falls back to exact
  // sampling over the eligible set when rejections dominate.
  const size_t max_attempts = 64 * k;
  for (size_t attempt = 0; attempt < max_attempts && chosen.size() < k;
       ++attempt) {
    const int32_t p = distribution_(rng);
    if (is_positive(p) ||
        std::find(chosen.begin(), chosen.end(), p) != chosen.end()) {
      continue;
    }
    chosen.push_back(p);
  }
  if (chosen.size() < k) {
    std::vector<int32_t> eligible;
    std::vector<double> weights;
    for (size_t p = 0; p < num_patterns; ++p) {
      const int32_t id = static_cast<int32_t>(p);
      if (is_positive(id) ||
          std::find(chosen.begin(), chosen.end(), id) != chosen.end()) {
        continue;
      }
      eligible.push_back(id);
      weights.push_back(probabilities_[p]);
    }
    std::vector<int32_t> rest =
        SampleFromEligible(eligible, weights, k - chosen.size(), rng);
    chosen.insert(chosen.end(), rest.begin(), rest.end());
  }
  return chosen;
}

NegativeAssignment SampleNegativeAssignment(const CooccurrenceMatrix &cooc,
                                            size_t k, std::mt19937_64 &rng) {
  NegativeSampler sampler(cooc);
  NegativeAssignment negatives(cooc.num_entities());
  for (size_t e = 0; e < cooc.num_entities(); ++e) {
    const int32_t entity = static_cast<int32_t>(e);
    for (const auto &cell : cooc.EntityRow(entity)) {
      for (int64_t n = 0; n < cell.count; ++n) {
        std::vector<int32_t> drawn = sampler.Sample(entity, k, rng);
        negatives[e].insert(negatives[e].end(), drawn.begin(), drawn.end());
      }
    }
  }
  return negatives;
}

EmbeddingTable TrainInner(EmbeddingTable table, const CooccurrenceMatrix &cooc,
                          const PoolState &pools, const TrainConfig &config) {
  config.Validate();
  if (config.inner_epochs == 0) return table;
  for (size_t c = 0; c < pools.num_categories(); ++c) {
    for (Item item : pools.Items(c)) {
      if (!table.Contains(item)) {
        throw ConfigError("pooled item " + std::to_string(item.id) +
                          " has no embedding");
      }
    }
  }
  if (cooc.num_entities() > table.num_entities() ||
      cooc.num_patterns() > table.num_patterns()) {
    throw ConfigError("co-occurrence matrix is larger than the table");
  }

  std::mt19937_64 rng(config.rng_seed);
  NegativeSampler sampler(cooc);
  const size_t dim = table.dim();
  const size_t k = static_cast<size_t>(config.negative_samples);

  std::vector<std::pair<int32_t, int32_t>> positives;
  positives.reserve(static_cast<size_t>(cooc.total()));
  for (size_t e = 0; e < cooc.num_entities(); ++e) {
    for (const auto &cell : cooc.EntityRow(static_cast<int32_t>(e))) {
      for (int64_t n = 0; n < cell.count; ++n) {
        positives.emplace_back(static_cast<int32_t>(e), cell.id);
      }
    }
  }

  std::vector<std::vector<Item>> items(pools.num_categories());
  for (size_t c = 0; c < pools.num_categories(); ++c) items[c] = pools.Items(c);

  std::vector<double> entity_update(dim);
  std::vector<double> old_x(dim);

  auto fail = [](int epoch, const char *phase, size_t step) {
    throw TrainingError("non-finite value at inner epoch " +
                        std::to_string(epoch) + ", " + phase + " step " +
                        std::to_string(step));
  };

  // One ascent step on log s(sign * x.y) for both vectors.
  auto pair_step = [&](std::span<double> x, std::span<double> y, double sign,
                       double lr) -> bool {
    const double dot = Dot(x, y);
    if (!std::isfinite(dot)) return false;
    const double g = lr * LogSigmoidSlope(dot, sign);
    std::copy(x.begin(), x.end(), old_x.begin());
    for (size_t i = 0; i < dim; ++i) x[i] += g * y[i];
    for (size_t i = 0; i < dim; ++i) y[i] += g * old_x[i];
    return true;
  };

  const int epochs = config.inner_epochs;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    const double progress =
        epochs > 1 ? static_cast<double>(epoch) / (epochs - 1) : 0.0;
    const double lr =
        config.learning_rate +
        (config.final_learning_rate - config.learning_rate) * progress;

    std::shuffle(positives.begin(), positives.end(), rng);
    for (size_t step = 0; step < positives.size(); ++step) {
      const auto [e, p] = positives[step];
      auto ve = table.entity(e);
      std::fill(entity_update.begin(), entity_update.end(), 0.0);

      auto sg_step = [&](int32_t pattern, double sign) {
        auto vp = table.pattern(pattern);
        const double dot = Dot(ve, vp);
        if (!std::isfinite(dot)) fail(epoch, "skip-gram", step);
        const double g = lr * LogSigmoidSlope(dot, sign);
        for (size_t i = 0; i < dim; ++i) entity_update[i] += g * vp[i];
        for (size_t i = 0; i < dim; ++i) vp[i] += g * ve[i];
      };
      sg_step(p, 1.0);
      for (int32_t np : sampler.Sample(e, k, rng)) sg_step(np, -1.0);
      for (size_t i = 0; i < dim; ++i) ve[i] += entity_update[i];
    }

    size_t pair_index = 0;
    for (const auto &pool : items) {
      for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i + 1; j < pool.size(); ++j, ++pair_index) {
          if (!pair_step(table.vec(pool[i]), table.vec(pool[j]), 1.0, lr)) {
            fail(epoch, "attract", pair_index);
          }
        }
      }
    }
    pair_index = 0;
    for (size_t c1 = 0; c1 < items.size(); ++c1) {
      for (size_t c2 = c1 + 1; c2 < items.size(); ++c2) {
        for (Item x : items[c1]) {
          for (Item y : items[c2]) {
            if (!pair_step(table.vec(x), table.vec(y), -1.0, lr)) {
              fail(epoch, "repel", pair_index);
            }
            ++pair_index;
          }
        }
      }
    }
    if (!table.AllFinite()) fail(epoch, "end of epoch", 0);
  }
  return table;
}

}  // namespace emboot
