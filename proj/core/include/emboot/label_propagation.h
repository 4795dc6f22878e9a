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

#ifndef EMBOOT_LABEL_PROPAGATION_H_
#define EMBOOT_LABEL_PROPAGATION_H_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "emboot/cooccurrence.h"

namespace emboot {

struct LabelPropagationConfig {
  // RBF kernel width; unset selects 1 / feature dimension.
  std::optional<double> gamma;
  int max_iterations = 1000;
  // Stop when no distribution component moves by this much.
  double tolerance = 1e-6;
};

// exp(-gamma ||x_i - x_j||^2) for every pair of rows. Throws ConfigError for
// gamma <= 0.
Eigen::MatrixXd RbfAffinity(const Eigen::MatrixXd &features, double gamma);

// Same kernel over the raw entity x pattern count rows of `cooc`.
Eigen::MatrixXd RbfAffinity(const CooccurrenceMatrix &cooc, double gamma);

// Iterates F <- T F with T the row-normalized affinity, clamping labeled
// rows to their one-hot label. Unlabeled rows start uniform. Returns one
// distribution per row.
Eigen::MatrixXd PropagateLabels(const Eigen::MatrixXd &affinity,
                                std::span<const std::optional<size_t>> labels,
                                size_t num_classes,
                                const LabelPropagationConfig &config);

// RbfAffinity + PropagateLabels, resolving the default gamma. Throws
// ConfigError for an explicit gamma <= 0.
Eigen::MatrixXd LabelPropagation(const Eigen::MatrixXd &features,
                                 std::span<const std::optional<size_t>> labels,
                                 size_t num_classes,
                                 const LabelPropagationConfig &config);
Eigen::MatrixXd LabelPropagation(const CooccurrenceMatrix &cooc,
                                 std::span<const std::optional<size_t>> labels,
                                 size_t num_classes,
                                 const LabelPropagationConfig &config);

// Shannon entropy (nats) of a distribution row.
double Entropy(std::span<const double> distribution);

}  // namespace emboot

#endif  // EMBOOT_LABEL_PROPAGATION_H_
