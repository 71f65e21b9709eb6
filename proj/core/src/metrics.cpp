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

#include "minsvm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minsvm/data.hpp"
#include "minsvm/errors.hpp"
#include "minsvm/solver.hpp"

namespace minsvm {

double accuracy(const SvmModel& model, const LabeledDataset& dataset) {
  const Vector f = decision_values(model, dataset);
  Eigen::Index correct = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    const double predicted = f(i) >= 0.0 ? 1.0 : -1.0;
    if (predicted == dataset.label(i)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(dataset.n());
}

double angle_theta(const Vector& w1, const Vector& w2) {
  if (w1.size() != w2.size()) throw DimensionError("angle_theta: vectors differ in size");
  const double n1 = w1.norm();
  const double n2 = w2.norm();
  if (!(n1 > 0.0) || !(n2 > 0.0)) throw ValidationError("angle_theta: zero weight vector");
  // Half-angle form on the unit vectors: exact 0 for w1 = w2 and 180 for
  // w1 = -w2, where acos of a rounded cosine loses about 1e-6 degrees.
  const Vector u = w1 / n1;
  const Vector v = w2 / n2;
  const double angle = 2.0 * std::atan2((u - v).norm(), (u + v).norm());
  return std::clamp(angle * (180.0 / std::numbers::pi), 0.0, 180.0);
}

double dist_d(const Vector& w1, const Vector& w2) {
  if (w1.size() != w2.size()) throw DimensionError("dist_d: vectors differ in size");
  const double ref = w1.norm();
  if (!(ref > 0.0)) throw ValidationError("dist_d: reference weight vector is zero");
  return (w1 - w2).norm() / ref;
}

namespace {

struct FoldData {
  LabeledDataset train;
  LabeledDataset test;
};

FoldData fold_data(const LabeledDataset& dataset, const FoldSplit& split, int fold,
                   bool standardize) {
  LabeledDataset train = dataset.subset(split.train_indices(fold));
  LabeledDataset test = dataset.subset(split.test_indices(fold));
  if (!standardize) return {std::move(train), std::move(test)};
  const Standardizer st = Standardizer::fit(train);
  return {st.apply(train), st.apply(test)};
}

void validate_options(const ComparisonOptions& options) {
  if (!(options.sv_threshold >= 0.0)) {
    throw ValidationError("support-vector threshold must be >= 0");
  }
}

}  // namespace

ComparisonReport run_comparison(const LabeledDataset& dataset, const TrainConfig& cfg_std,
                                const TrainConfig& cfg_min, const ComparisonOptions& options) {
  cfg_std.validate();
  cfg_min.validate();
  validate_options(options);
  const FoldSplit split = kfold(dataset, options.k, options.seed);

  ComparisonReport report;
  report.cfg_std = cfg_std;
  report.cfg_min = cfg_min;
  report.options = options;

  for (int fold = 0; fold < options.k; ++fold) {
    const FoldData data = fold_data(dataset, split, fold, options.standardize);
    const SvmModel std_model = train(data.train, cfg_std).model;
    const SvmModel min_model = train(data.train, cfg_min).model;

    ComparisonRecord rec;
    rec.test_acc_std = accuracy(std_model, data.test);
    rec.train_acc_std = accuracy(std_model, data.train);
    rec.n_sv_std = static_cast<double>(slack(std_model, data.train, options.sv_threshold).n_sv);
    rec.test_acc_min = accuracy(min_model, data.test);
    rec.train_acc_min = accuracy(min_model, data.train);
    rec.n_sv_min = static_cast<double>(slack(min_model, data.train, options.sv_threshold).n_sv);
    rec.angle_theta_degrees = angle_theta(std_model.w, min_model.w);
    rec.dist_d = dist_d(std_model.w, min_model.w);
    report.folds.push_back(rec);
  }

  auto mean_of = [&](double ComparisonRecord::*field) {
    double sum = 0.0;
    for (const auto& r : report.folds) sum += r.*field;
    return sum / static_cast<double>(report.folds.size());
  };
  for (auto field : {&ComparisonRecord::test_acc_std, &ComparisonRecord::train_acc_std,
                     &ComparisonRecord::n_sv_std, &ComparisonRecord::test_acc_min,
                     &ComparisonRecord::train_acc_min, &ComparisonRecord::n_sv_min,
                     &ComparisonRecord::angle_theta_degrees, &ComparisonRecord::dist_d}) {
    report.mean.*field = mean_of(field);
  }
  return report;
}

CvReport run_cv(const LabeledDataset& dataset, const TrainConfig& cfg,
                const ComparisonOptions& options) {
  cfg.validate();
  validate_options(options);
  const FoldSplit split = kfold(dataset, options.k, options.seed);

  CvReport report;
  report.cfg = cfg;
  report.options = options;
  for (int fold = 0; fold < options.k; ++fold) {
    const FoldData data = fold_data(dataset, split, fold, options.standardize);
    const TrainResult result = train(data.train, cfg);
    CvFold rec;
    rec.train_acc = accuracy(result.model, data.train);
    rec.test_acc = accuracy(result.model, data.test);
    rec.n_sv = static_cast<double>(slack(result.model, data.train, options.sv_threshold).n_sv);
    rec.iterations = result.trace.iterations;
    rec.converged = result.trace.converged;
    report.folds.push_back(rec);
  }
  for (const auto& f : report.folds) {
    report.mean.train_acc += f.train_acc;
    report.mean.test_acc += f.test_acc;
    report.mean.n_sv += f.n_sv;
  }
  const double k = static_cast<double>(report.folds.size());
  report.mean.train_acc /= k;
  report.mean.test_acc /= k;
  report.mean.n_sv /= k;
  return report;
}

}  // namespace minsvm
