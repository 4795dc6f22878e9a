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

#ifndef EMBOOT_CLASSIFIER_H_
#define EMBOOT_CLASSIFIER_H_

#include <span>
#include <vector>

namespace emboot {

struct ClassifierConfig {
  double l2 = 1.0;
  int iterations = 200;
  // Step size on the mean log-likelihood.
  double learning_rate = 0.5;
};

// Multinomial logistic regression over standardized features, fit by
// full-batch gradient ascent on the L2-penalized log-likelihood
//
//   sum_i log p(y_i | x_i) - (l2 / 2) ||W||^2
//
// Biases are not penalized. Standardization uses the training-set mean and
// standard deviation; constant features map to 0.
class PromotionModel {
 public:
  // Throws ConfigError with fewer than two classes, an empty class, or
  // ragged rows.
  static PromotionModel Fit(const std::vector<std::vector<double>> &features,
                            const std::vector<size_t> &labels,
                            size_t num_classes,
                            const ClassifierConfig &config = {});

  size_t num_classes() const { return bias_.size(); }
  size_t num_features() const { return mean_.size(); }

  std::vector<double> Predict(std::span<const double> features) const;

  // Sum of log p(y_i | x_i).
  double LogLikelihood(const std::vector<std::vector<double>> &features,
                       const std::vector<size_t> &labels) const;

 private:
  std::vector<double> Standardize(std::span<const double> features) const;
  std::vector<double> Scores(const std::vector<double> &z) const;

  std::vector<double> mean_;
  std::vector<double> scale_;
  std::vector<double> weights_;  // num_classes x num_features, row-major
  std::vector<double> bias_;
};

// In-place numerically stable softmax.
void Softmax(std::span<double> scores);

}  // namespace emboot

#endif  // EMBOOT_CLASSIFIER_H_
