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

#include "emboot/features.h"

#include <algorithm>
#include <cmath>

#include "emboot/edit_distance.h"
#include "emboot/promotion.h"

namespace emboot {
namespace {

std::vector<double> Normalized(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  const double norm = std::sqrt(Dot(out, out));
  if (norm == 0.0) return out;
  for (double &x : out) x /= norm;
  return out;
}

}  // namespace

FeatureExtractor::FeatureExtractor(const CorpusIndex &index,
                                   const WordVectors *pretrained)
    : index_(&index), pretrained_(pretrained) {
  const size_t n = index.entities.size();
  surfaces_.reserve(n);
  pretrained_vectors_.resize(n);
  for (size_t e = 0; e < n; ++e) {
    const std::string &surface = index.entities.key(static_cast<int32_t>(e));
    surfaces_.push_back(DecodeUtf8(surface));
    if (pretrained_ != nullptr && !pretrained_->empty()) {
      pretrained_vectors_[e] =
          Normalized(pretrained_->Average(SplitSurface(surface)));
    }
  }
}

void FeatureExtractor::Prepare(const PoolState &pools,
                               const EmbeddingTable *custom) {
  pools_ = &pools;
  custom_ = custom;
  num_categories_ = pools.num_categories();
  members_.assign(num_categories_, {});
  pattern_pmi_.clear();
  for (size_t c = 0; c < num_categories_; ++c) {
    for (const PoolEntry &entry : pools.entities(c)) {
      Member member{entry.id, {}};
      if (custom_ != nullptr) member.custom = Normalized(custom_->entity(entry.id));
      members_[c].push_back(std::move(member));
    }
    for (const PoolEntry &entry : pools.patterns(c)) {
      const double pmi = Pmi(entry.id, c, index_->cooc, pools);
      pattern_pmi_[entry.id] = std::isfinite(pmi) ? pmi : 0.0;
    }
  }
}

std::vector<double> FeatureExtractor::Featurize(int32_t entity) const {
  std::vector<double> features(dim(), 0.0);
  const std::u32string &surface = surfaces_[entity];
  const std::vector<double> &pretrained = pretrained_vectors_[entity];
  std::vector<double> custom;
  if (custom_ != nullptr) custom = Normalized(custom_->entity(entity));

  for (size_t c = 0; c < num_categories_; ++c) {
    double *block = features.data() + c * kFeaturesPerCategory;
    double min_ed = 1.0, sum_ed = 0.0;
    double sum_custom = 0.0, max_custom = -1.0;
    double sum_pre = 0.0, max_pre = -1.0;
    size_t compared = 0;
    for (const Member &member : members_[c]) {
      if (member.entity == entity) continue;
      ++compared;
      const double ed =
          NormalizedEditDistance(surface, surfaces_[member.entity]);
      min_ed = std::min(min_ed, ed);
      sum_ed += ed;
      if (!custom.empty()) {
        const double cos = std::clamp(Dot(custom, member.custom), -1.0, 1.0);
        sum_custom += cos;
        max_custom = std::max(max_custom, cos);
      }
      if (!pretrained.empty()) {
        const auto &other = pretrained_vectors_[member.entity];
        const double cos = std::clamp(Dot(pretrained, other), -1.0, 1.0);
        sum_pre += cos;
        max_pre = std::max(max_pre, cos);
      }
    }
    if (compared == 0) {
      block[kMinEditDistance] = 1.0;
      block[kMeanEditDistance] = 1.0;
    } else {
      const double n = static_cast<double>(compared);
      block[kMinEditDistance] = min_ed;
      block[kMeanEditDistance] = sum_ed / n;
      if (!custom.empty()) {
        block[kMeanCosineCustom] = sum_custom / n;
        block[kMaxCosineCustom] = max_custom;
      }
      if (!pretrained.empty()) {
        block[kMeanCosinePretrained] = sum_pre / n;
        block[kMaxCosinePretrained] = max_pre;
      }
    }
  }

  for (const auto &cell : index_->cooc.EntityRow(entity)) {
    std::optional<size_t> owner = pools_->PatternOwner(cell.id);
    if (!owner) continue;
    features[*owner * kFeaturesPerCategory + kSumPmi] +=
        pattern_pmi_.at(cell.id);
  }
  return features;
}

std::vector<double> Featurize(int32_t entity, const PoolState &pools,
                              const CorpusIndex &index,
                              const EmbeddingTable *custom,
                              const WordVectors *pretrained) {
  FeatureExtractor extractor(index, pretrained);
  extractor.Prepare(pools, custom);
  return extractor.Featurize(entity);
}

}  // namespace emboot
