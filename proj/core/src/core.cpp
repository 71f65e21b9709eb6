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

#include "minsvm/core.hpp"

#include <cmath>
#include <string>

#include "minsvm/errors.hpp"

namespace minsvm {

void TrainConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  if (!(C > 0.0) || !std::isfinite(C)) fail("C must be a positive finite number");
  if (!(p > 0.0 && p <= 1.0)) fail("p must lie in (0, 1]");
  if (!(s > 0.0) || !std::isfinite(s)) fail("s must be a positive finite number");
  if (!(eta > 0.0) || !std::isfinite(eta)) fail("eta must be a positive finite number");
  if (!(eps >= 0.0 && eps < 1.0)) fail("eps must lie in [0, 1)");
  if (!(tol_obj > 0.0)) fail("tol_obj must be positive");
  if (!(tol_grad > 0.0)) fail("tol_grad must be positive");
  if (max_iter < 1) fail("max_iter must be at least 1");
}

LabeledDataset::LabeledDataset(Matrix samples, Vector labels)
    : samples_(std::move(samples)), labels_(std::move(labels)) {
  if (samples_.rows() < 1) throw ValidationError("dataset must contain at least one sample");
  if (samples_.cols() < 1) throw ValidationError("feature dimension must be at least 1");
  if (labels_.size() != samples_.rows()) {
    throw ValidationError("label count " + std::to_string(labels_.size()) +
                          " does not match sample count " + std::to_string(samples_.rows()));
  }
  for (Eigen::Index i = 0; i < labels_.size(); ++i) {
    if (labels_(i) != 1.0 && labels_(i) != -1.0) {
      throw ValidationError("label of sample " + std::to_string(i) + " is not -1 or +1");
    }
  }
  if (!samples_.allFinite()) throw ValidationError("feature values must be finite");
}

Eigen::Index LabeledDataset::count_positive() const {
  return (labels_.array() > 0.0).count();
}

bool LabeledDataset::has_both_classes() const {
  const auto pos = count_positive();
  return pos > 0 && pos < n();
}

void LabeledDataset::require_both_classes() const {
  if (!has_both_classes()) {
    throw ValidationError("training data must contain both classes");
  }
}

LabeledDataset LabeledDataset::subset(const std::vector<Eigen::Index>& indices) const {
  Matrix x(static_cast<Eigen::Index>(indices.size()), k());
  Vector y(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const auto i = indices[r];
    if (i < 0 || i >= n()) throw ValidationError("subset index out of range");
    x.row(static_cast<Eigen::Index>(r)) = samples_.row(i);
    y(static_cast<Eigen::Index>(r)) = labels_(i);
  }
  return LabeledDataset(std::move(x), std::move(y));
}

LabeledDataset LabeledDataset::with_negated_labels() const {
  return LabeledDataset(samples_, -labels_);
}

AugmentedView augment(const LabeledDataset& dataset) {
  AugmentedView view;
  view.augmented_samples.resize(dataset.n(), dataset.k() + 1);
  view.augmented_samples.leftCols(dataset.k()) = dataset.samples();
  view.augmented_samples.col(dataset.k()).setOnes();
  return view;
}

Vector SvmModel::augmented_weights() const {
  Vector w_aug(w.size() + 1);
  w_aug.head(w.size()) = w;
  w_aug(w.size()) = b;
  return w_aug;
}

SvmModel SvmModel::from_augmented(const Vector& w_aug, const TrainConfig& config) {
  if (w_aug.size() < 2) throw DimensionError("augmented weights need dimension >= 2");
  SvmModel model;
  model.w = w_aug.head(w_aug.size() - 1);
  model.b = w_aug(w_aug.size() - 1);
  model.config = config;
  return model;
}

namespace {

void check_dims(const SvmModel& model, Eigen::Index k) {
  if (model.k() != k) {
    throw DimensionError("dimension mismatch: model has k=" + std::to_string(model.k()) +
                         ", data has k=" + std::to_string(k));
  }
}

}  // namespace

double decision_value(const SvmModel& model, const Eigen::Ref<const Vector>& x) {
  check_dims(model, x.size());
  return model.w.dot(x) + model.b;
}

int predict(const SvmModel& model, const Eigen::Ref<const Vector>& x) {
  return decision_value(model, x) >= 0.0 ? 1 : -1;
}

Vector decision_values(const SvmModel& model, const LabeledDataset& dataset) {
  check_dims(model, dataset.k());
  Vector f = dataset.samples() * model.w;
  f.array() += model.b;
  return f;
}

SlackReport slack(const SvmModel& model, const LabeledDataset& dataset, double threshold) {
  if (!(threshold >= 0.0)) throw ValidationError("support-vector threshold must be >= 0");
  const Vector f = decision_values(model, dataset);
  SlackReport report;
  report.threshold = threshold;
  report.xi = (1.0 - dataset.labels().array() * f.array()).max(0.0);
  for (Eigen::Index i = 0; i < report.xi.size(); ++i) {
    if (report.xi(i) > threshold) report.sv_indices.push_back(i);
  }
  report.n_sv = report.sv_indices.size();
  return report;
}

double margin_width(const SvmModel& model) {
  const double norm = model.w.norm();
  if (!(norm > 0.0)) throw ValidationError("margin width undefined for w = 0");
  return 2.0 / norm;
}

}  // namespace minsvm
