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

#ifndef MINSVM_METRICS_HPP
#define MINSVM_METRICS_HPP

#include <cstdint>
#include <vector>

#include "minsvm/config.hpp"
#include "minsvm/core.hpp"

namespace minsvm {

/// Fraction of samples whose predicted label matches. Throws DimensionError on
/// mismatched k.
double accuracy(const SvmModel& model, const LabeledDataset& dataset);

/// Angle between two weight vectors in degrees, in [0, 180]. Exact for
/// parallel and antiparallel inputs, never NaN. Throws ValidationError for a
/// zero vector, DimensionError for mismatched sizes.
double angle_theta(const Vector& w1, const Vector& w2);

/// ||w1 - w2|| / ||w1||, with w1 the reference. Throws ValidationError when
/// w1 = 0.
double dist_d(const Vector& w1, const Vector& w2);

/// One row of the standard-vs-minimal comparison.
struct ComparisonRecord {
  double test_acc_std = 0.0;
  double train_acc_std = 0.0;
  double n_sv_std = 0.0;
  double test_acc_min = 0.0;
  double train_acc_min = 0.0;
  double n_sv_min = 0.0;
  double angle_theta_degrees = 0.0;
  double dist_d = 0.0;
};

struct ComparisonOptions {
  int k = 5;
  std::uint64_t seed = 0;
  double sv_threshold = kDefaultSvThreshold;
  /// Fit zero-mean/unit-variance scaling on each training split.
  bool standardize = false;
};

struct ComparisonReport {
  TrainConfig cfg_std;
  TrainConfig cfg_min;
  ComparisonOptions options;
  std::vector<ComparisonRecord> folds;
  ComparisonRecord mean;
};

/// k-fold cross-validated comparison of the standard (p = 1) and minimal
/// (p < 1) solvers. Support vectors are counted on each training split; theta
/// and d compare the two weight vectors, bias excluded. Deterministic for a
/// given input.
ComparisonReport run_comparison(const LabeledDataset& dataset, const TrainConfig& cfg_std,
                                const TrainConfig& cfg_min, const ComparisonOptions& options);

/// Per-fold evaluation of a single configuration.
struct CvFold {
  double train_acc = 0.0;
  double test_acc = 0.0;
  double n_sv = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct CvReport {
  TrainConfig cfg;
  ComparisonOptions options;
  std::vector<CvFold> folds;
  CvFold mean;  ///< iterations/converged are not averaged
};

CvReport run_cv(const LabeledDataset& dataset, const TrainConfig& cfg,
                const ComparisonOptions& options);

}  // namespace minsvm

#endif  // MINSVM_METRICS_HPP
