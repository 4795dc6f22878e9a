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

#include "emboot/baselines.h"

#include <algorithm>

#include "emboot/errors.h"

namespace emboot {

BootstrapResult RunEpb(BootstrapConfig config, const CorpusIndex &index,
                       const PoolState &seeds, const WordVectors *pretrained) {
  config.custom_embeddings = false;
  return RunBootstrap(config, index, seeds, pretrained);
}

DecisionList BuildEpbDecisionList(const Trace &epb_trace,
                                  const CorpusIndex &index,
                                  const WordVectors &pretrained) {
  if (epb_trace.snapshots.empty()) throw ConfigError("empty trace");
  const int epoch = static_cast<int>(epb_trace.snapshots.size()) - 1;
  return BuildPretrainedDecisionList(epb_trace.snapshots.back(),
                                     index.entities, index.patterns,
                                     pretrained, epoch);
}

Trace RunLpBootstrap(const BootstrapConfig &config, const CorpusIndex &index,
                     const PoolState &seeds,
                     const LabelPropagationConfig &lp) {
  config.Validate();
  const size_t num_entities = index.entities.size();
  const size_t num_categories = seeds.num_categories();
  if (num_categories < 2) {
    throw ConfigError("bootstrapping needs at least two categories");
  }
  double gamma = 1.0 / static_cast<double>(std::max<size_t>(1, index.patterns.size()));
  if (lp.gamma) {
    if (!(*lp.gamma > 0.0)) throw ConfigError("RBF gamma must be positive");
    gamma = *lp.gamma;
  }
  const Eigen::MatrixXd affinity = RbfAffinity(index.cooc, gamma);

  Trace trace;
  trace.system = "lp";
  trace.snapshots.push_back(seeds);
  PoolState pools = seeds;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::vector<std::optional<size_t>> labels(num_entities);
    for (size_t e = 0; e < num_entities; ++e) {
      labels[e] = pools.EntityOwner(static_cast<int32_t>(e));
    }
    const Eigen::MatrixXd dist =
        PropagateLabels(affinity, labels, num_categories, lp);

    struct Ranked {
      int32_t entity;
      double entropy;
      size_t category;
      double probability;
    };
    std::vector<Ranked> ranked;
    for (size_t e = 0; e < num_entities; ++e) {
      if (labels[e]) continue;
      std::vector<double> row(num_categories);
      for (size_t c = 0; c < num_categories; ++c) {
        row[c] = dist(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(c));
      }
      const size_t best = static_cast<size_t>(
          std::max_element(row.begin(), row.end()) - row.begin());
      ranked.push_back(Ranked{static_cast<int32_t>(e), Entropy(row), best,
                              row[best]});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](const Ranked &a, const Ranked &b) {
                       if (a.entropy != b.entropy) return a.entropy < b.entropy;
                       const int64_t fa = index.entities.count(a.entity);
                       const int64_t fb = index.entities.count(b.entity);
                       if (fa != fb) return fa > fb;
                       return index.entities.key(a.entity) <
                              index.entities.key(b.entity);
                     });

    std::vector<size_t> taken(num_categories, 0);
    size_t full = 0;
    for (const Ranked &r : ranked) {
      if (full == num_categories) break;
      if (taken[r.category] >= config.entities_per_epoch) continue;
      pools.AddEntity(r.category, r.entity, epoch, r.probability);
      if (++taken[r.category] == config.entities_per_epoch) ++full;
    }
    trace.snapshots.push_back(pools);
  }
  return trace;
}

}  // namespace emboot
