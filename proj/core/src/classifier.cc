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

#include "emboot/classifier.h"

#include <algorithm>
#include <cmath>

#include "emboot/errors.h"

namespace emboot {

void Softmax(std::span<double> scores) {
  if (scores.empty()) return;
  const double max = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (double &s : scores) {
    s = std::exp(s - max);
    sum += s;
  }
  for (double &s : scores) s /= sum;
}

PromotionModel PromotionModel::Fit(
    const std::vector<std::vector<double>> &features,
    const std::vector<size_t> &labels, size_t num_classes,
    const ClassifierConfig &config) {
  if (num_classes < 2) throw ConfigError("classifier needs >= 2 classes");
  if (features.size() != labels.size() || features.empty()) {
    throw ConfigError("classifier needs one label per feature row");
  }
  const size_t n = features.size();
  const size_t d = features.front().size();
  std::vector<size_t> class_counts(num_classes, 0);
  for (size_t i = 0; i < n; ++i) {
    if (features[i].size() != d) throw ConfigError("ragged feature rows");
    if (labels[i] >= num_classes) throw ConfigError("label out of range");
    ++class_counts[labels[i]];
  }
  for (size_t c = 0; c < num_classes; ++c) {
    if (class_counts[c] == 0) {
      throw ConfigError("class " + std::to_string(c) + " has no examples");
    }
  }

  PromotionModel model;
  model.mean_.assign(d, 0.0);
  model.scale_.assign(d, 1.0);
  for (const auto &row : features) {
    for (size_t j = 0; j < d; ++j) model.mean_[j] += row[j];
  }
  for (double &m : model.mean_) m /= static_cast<double>(n);
  std::vector<double> variance(d, 0.0);
  for (const auto &row : features) {
    for (size_t j = 0; j < d; ++j) {
      const double diff = row[j] - model.mean_[j];
      variance[j] += diff * diff;
    }
  }
  for (size_t j = 0; j < d; ++j) {
    const double sd = std::sqrt(variance[j] / static_cast<double>(n));
    model.scale_[j] = sd > 1e-12 ? sd : 0.0;
  }

  std::vector<std::vector<double>> z(n);
  for (size_t i = 0; i < n; ++i) z[i] = model.Standardize(features[i]);

  model.weights_.assign(num_classes * d, 0.0);
  model.bias_.assign(num_classes, 0.0);
  std::vector<double> grad_w(num_classes * d);
  std::vector<double> grad_b(num_classes);
  const double step = config.learning_rate / static_cast<double>(n);

  for (int iter = 0; iter < config.iterations; ++iter) {
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    std::fill(grad_b.begin(), grad_b.end(), 0.0);
    for (size_t i = 0; i < n; ++i) {
      std::vector<double> p = model.Scores(z[i]);
      Softmax(p);
      for (size_t c = 0; c < num_classes; ++c) {
        const double residual = (labels[i] == c ? 1.0 : 0.0) - p[c];
        grad_b[c] += residual;
        double *gw = grad_w.data() + c * d;
        for (size_t j = 0; j < d; ++j) gw[j] += residual * z[i][j];
      }
    }
    for (size_t k = 0; k < grad_w.size(); ++k) {
      grad_w[k] -= config.l2 * model.weights_[k];
      model.weights_[k] += step * grad_w[k];
    }
    for (size_t c = 0; c < num_classes; ++c) model.bias_[c] += step * grad_b[c];
  }
  return model;
}

std::vector<double> PromotionModel::Standardize(
    std::span<const double> features) const {
  if (features.size() != mean_.size()) {
    throw ConfigError("feature vector has wrong dimension");
  }
  std::vector<double> z(features.size());
  for (size_t j = 0; j < z.size(); ++j) {
    z[j] = scale_[j] > 0.0 ? (features[j] - mean_[j]) / scale_[j] : 0.0;
  }
  return z;
}

std::vector<double> PromotionModel::Scores(const std::vector<double> &z) const {
  const size_t d = mean_.size();
  std::vector<double> scores(bias_);
  for (size_t c = 0; c < scores.size(); ++c) {
    const double *w = weights_.data() + c * d;
    for (size_t j = 0; j < d; ++j) scores[c] += w[j] * z[j];
  }
  return scores;
}

std::vector<double> PromotionModel::Predict(
    std::span<const double> features) const {
  std::vector<double> p = Scores(Standardize(features));
  Softmax(p);
  return p;
}

double PromotionModel::LogLikelihood(
    const std::vector<std::vector<double>> &features,
    const std::vector<size_t> &labels) const {
  double sum = 0.0;
  for (size_t i = 0; i < features.size(); ++i) {
    sum += std::log(Predict(features[i])[labels[i]]);
  }
  return sum;
}

}  // namespace emboot
