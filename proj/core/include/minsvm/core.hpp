// Copyright 2026 The minsvm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINSVM_CORE_HPP
#define MINSVM_CORE_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "minsvm/config.hpp"

namespace minsvm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// n samples in R^k with labels in {-1, +1}.
///
/// Construction validates every invariant; a LabeledDataset that exists is
/// always well formed.
class LabeledDataset {
 public:
  /// Throws ValidationError on empty input, non-finite features, or labels
  /// other than -1/+1.
  LabeledDataset(Matrix samples, Vector labels);

  const Matrix& samples() const noexcept { return samples_; }
  const Vector& labels() const noexcept { return labels_; }
  Eigen::Index n() const noexcept { return samples_.rows(); }
  Eigen::Index k() const noexcept { return samples_.cols(); }

  auto sample(Eigen::Index i) const { return samples_.row(i); }
  double label(Eigen::Index i) const { return labels_(i); }

  Eigen::Index count_positive() const;
  Eigen::Index count_negative() const { return n() - count_positive(); }
  bool has_both_classes() const;

  /// Throws ValidationError unless both classes are present.
  void require_both_classes() const;

  LabeledDataset subset(const std::vector<Eigen::Index>& indices) const;

  /// Same features, every label negated.
  LabeledDataset with_negated_labels() const;

 private:
  Matrix samples_;
  Vector labels_;
};

/// Samples with a constant 1 appended as the last coordinate.
struct AugmentedView {
  Matrix augmented_samples;

  Eigen::Index n() const noexcept { return augmented_samples.rows(); }
  Eigen::Index dim() const noexcept { return augmented_samples.cols(); }
};

AugmentedView augment(const LabeledDataset& dataset);

struct SvmModel {
  Vector w;
  double b = 0.0;
  TrainConfig config;

  Eigen::Index k() const noexcept { return w.size(); }

  /// [w, b]
  Vector augmented_weights() const;
  static SvmModel from_augmented(const Vector& w_aug, const TrainConfig& config = {});
};

inline constexpr double kDefaultSvThreshold = 1e-6;

struct SlackReport {
  Vector xi;
  std::vector<Eigen::Index> sv_indices;
  std::size_t n_sv = 0;
  double threshold = kDefaultSvThreshold;
};

/// w^T x + b. Throws DimensionError if dim(x) != dim(w).
double decision_value(const SvmModel& model, const Eigen::Ref<const Vector>& x);

/// +1 when the decision value is >= 0, else -1.
int predict(const SvmModel& model, const Eigen::Ref<const Vector>& x);

/// Decision values for every sample of the dataset.
Vector decision_values(const SvmModel& model, const LabeledDataset& dataset);

/// xi_i = max(0, 1 - y_i (w^T x_i + b)); support vectors are the samples with
/// xi_i > threshold.
SlackReport slack(const SvmModel& model, const LabeledDataset& dataset,
                  double threshold = kDefaultSvThreshold);

/// 2 / ||w||, bias excluded. Throws ValidationError when w = 0.
double margin_width(const SvmModel& model);

}  // namespace minsvm

#endif  // MINSVM_CORE_HPP
