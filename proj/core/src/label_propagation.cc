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

#include "emboot/label_propagation.h"

#include <cmath>

#include <Eigen/Sparse>

#include "emboot/errors.h"

namespace emboot {

namespace {

Eigen::MatrixXd AffinityFromGram(const Eigen::MatrixXd &gram, double gamma) {
  const Eigen::VectorXd norms = gram.diagonal();
  const Eigen::Index n = gram.rows();
  Eigen::MatrixXd affinity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d2 = std::max(0.0, norms(i) + norms(j) - 2.0 * gram(i, j));
      affinity(i, j) = std::exp(-gamma * d2);
    }
  }
  return affinity;
}

double ResolveGamma(const LabelPropagationConfig &config, size_t dim) {
  if (config.gamma) {
    if (!(*config.gamma > 0.0)) throw ConfigError("RBF gamma must be positive");
    return *config.gamma;
  }
  return dim > 0 ? 1.0 / static_cast<double>(dim) : 1.0;
}

}  // namespace

Eigen::MatrixXd RbfAffinity(const Eigen::MatrixXd &features, double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("RBF gamma must be positive");
  return AffinityFromGram(features * features.transpose(), gamma);
}

Eigen::MatrixXd RbfAffinity(const CooccurrenceMatrix &cooc, double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("RBF gamma must be positive");
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(cooc.num_nonzero());
  for (size_t e = 0; e < cooc.num_entities(); ++e) {
    for (const auto &cell : cooc.EntityRow(static_cast<int32_t>(e))) {
      triplets.emplace_back(static_cast<Eigen::Index>(e), cell.id,
                            static_cast<double>(cell.count));
    }
  }
  Eigen::SparseMatrix<double> x(static_cast<Eigen::Index>(cooc.num_entities()),
                                static_cast<Eigen::Index>(cooc.num_patterns()));
  x.setFromTriplets(triplets.begin(), triplets.end());
  const Eigen::SparseMatrix<double> xt = x.transpose();
  Eigen::SparseMatrix<double> gram = x * xt;
  return AffinityFromGram(Eigen::MatrixXd(gram), gamma);
}

Eigen::MatrixXd PropagateLabels(const Eigen::MatrixXd &affinity,
                                std::span<const std::optional<size_t>> labels,
                                size_t num_classes,
                                const LabelPropagationConfig &config) {
  const Eigen::Index n = affinity.rows();
  if (affinity.cols() != n || labels.size() != static_cast<size_t>(n)) {
    throw ConfigError("affinity and labels disagree in size");
  }
  if (num_classes == 0) throw ConfigError("label propagation needs classes");

  Eigen::MatrixXd transition = affinity;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double row_sum = transition.row(i).sum();
    if (row_sum > 0.0) {
      transition.row(i) /= row_sum;
    } else {
      transition.row(i).setZero();
      transition(i, i) = 1.0;
    }
  }

  const Eigen::Index k = static_cast<Eigen::Index>(num_classes);
  Eigen::MatrixXd dist =
      Eigen::MatrixXd::Constant(n, k, 1.0 / static_cast<double>(num_classes));
  auto clamp = [&](Eigen::MatrixXd &f) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!labels[i]) continue;
      if (*labels[i] >= num_classes) throw ConfigError("label out of range");
      f.row(i).setZero();
      f(i, static_cast<Eigen::Index>(*labels[i])) = 1.0;
    }
  };
  clamp(dist);

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    Eigen::MatrixXd next = transition * dist;
    clamp(next);
    // Rows of a stochastic matrix times distributions stay normalized up to
    // rounding; renormalize to keep them exact.
    for (Eigen::Index i = 0; i < n; ++i) {
      const double s = next.row(i).sum();
      if (s > 0.0) next.row(i) /= s;
    }
    const double change = (next - dist).cwiseAbs().maxCoeff();
    dist = std::move(next);
    if (change < config.tolerance) break;
  }
  return dist;
}

Eigen::MatrixXd LabelPropagation(const Eigen::MatrixXd &features,
                                 std::span<const std::optional<size_t>> labels,
                                 size_t num_classes,
                                 const LabelPropagationConfig &config) {
  const double gamma =
      ResolveGamma(config, static_cast<size_t>(features.cols()));
  return PropagateLabels(RbfAffinity(features, gamma), labels, num_classes,
                         config);
}

Eigen::MatrixXd LabelPropagation(const CooccurrenceMatrix &cooc,
                                 std::span<const std::optional<size_t>> labels,
                                 size_t num_classes,
                                 const LabelPropagationConfig &config) {
  const double gamma = ResolveGamma(config, cooc.num_patterns());
  return PropagateLabels(RbfAffinity(cooc, gamma), labels, num_classes, config);
}

double Entropy(std::span<const double> distribution) {
  double h = 0.0;
  for (double p : distribution) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace emboot
