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

#ifndef MINSVM_SOLVER_HPP
#define MINSVM_SOLVER_HPP

#include <string_view>
#include <vector>

#include "minsvm/config.hpp"
#include "minsvm/core.hpp"

namespace minsvm {

/// (1/s) log(1 + exp(s x)), evaluated without overflow for any finite x.
double smoothed_plus(double x, double s);

/// log of smoothed_plus(x, s). Stays finite where smoothed_plus underflows.
double log_smoothed_plus(double x, double s);

/// Smoothed training objective at w_aug = [w, b].
/// Throws DimensionError on size mismatch and NumericalError when the value is
/// not finite.
double objective(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                 const TrainConfig& cfg);

/// Analytic gradient of objective().
///
/// The per-sample coefficient sigma(s z) * n^(p-1) is assembled in the log
/// domain so neither exp(s z) overflow nor 0 * inf can occur.
Vector gradient(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                const TrainConfig& cfg);

/// Unsmoothed primal objective 1/2 ||w||^2 (+ 1/2 b^2) + C sum_i xi_i^p with the
/// exact hinge.
double primal_objective(const SvmModel& model, const LabeledDataset& dataset, double C,
                        double p, bool regularize_bias);

enum class StopReason { kObjectiveTolerance, kGradientTolerance, kIterationCap };

std::string_view to_string(StopReason reason);
/// Throws ValidationError for unknown names.
StopReason stop_reason_from_string(std::string_view name);

struct TrainTrace {
  /// Objective at the initial point followed by one entry per iteration.
  std::vector<double> objective_history;
  /// Gradient norm at the iterate produced by each iteration.
  std::vector<double> grad_norm_history;
  double initial_grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  StopReason stop_reason = StopReason::kIterationCap;

  double initial_objective() const { return objective_history.front(); }
  double final_objective() const { return objective_history.back(); }
};

struct TrainResult {
  SvmModel model;
  TrainTrace trace;
};

/// Momentum gradient descent from w_aug = 0, v = 0:
///   v <- eps v - eta grad J(w_aug),  w_aug <- w_aug + v
/// until the relative objective change drops below tol_obj, the gradient norm
/// drops below tol_grad, or max_iter iterations have run.
///
/// Throws DivergenceError if the objective or gradient becomes non-finite and
/// ValidationError for an invalid config or single-class data.
TrainResult train(const LabeledDataset& dataset, const TrainConfig& cfg);

}  // namespace minsvm

#endif  // MINSVM_SOLVER_HPP
