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

#ifndef MINSVM_ORACLE_HPP
#define MINSVM_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "minsvm/config.hpp"
#include "minsvm/core.hpp"

namespace minsvm {

/// Central differences (J(w + h e_j) - J(w - h e_j)) / 2h of the smoothed
/// objective, one coordinate at a time.
Vector fd_gradient(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                   const TrainConfig& cfg, double step);

struct DualCdOptions {
  double tol = 1e-12;  ///< stop when no coordinate step improves the dual by more
  /// ...and every projected partial derivative is at most this large.
  double pg_tol = 1e-9;
  int max_sweeps = 100000;
  std::uint64_t seed = 0;  ///< seeds the per-sweep visiting order
};

/// Reference solution of the standard (L1-slack) SVM
///   min 1/2 ||[w, b]||^2 + C sum_i xi_i
/// with the bias folded into the regularized weights.
struct DualSolution {
  Vector alpha;
  SvmModel model;
  bool converged = false;
  int sweeps = 0;
  /// Dual objective sum(alpha) - 1/2 ||sum alpha_i y_i x'_i||^2 after each sweep.
  std::vector<double> dual_objective_history;
  /// Smallest alpha_i / largest alpha_i - C seen at any point during the run.
  double min_alpha_seen = 0.0;
  double max_alpha_excess_seen = 0.0;

  double dual_objective() const { return dual_objective_history.back(); }
};

/// Dual coordinate descent: each coordinate is minimized exactly over
/// [0, C] while w' = sum alpha_i y_i x'_i is kept up to date.
DualSolution dual_cd_train(const LabeledDataset& dataset, double C, const DualCdOptions& opts = {});

/// Violations of the optimality conditions of the Lp-slack SVM for a primal
/// point (w, b) and multipliers alpha. Slacks are recomputed as
/// xi_i = max(0, 1 - y_i f(x_i)) where alpha_i > 0 and xi_i = 0 where
/// alpha_i = 0, so an infeasible primal point with inactive multipliers shows
/// up as a feasibility violation.
struct KktReport {
  /// ||w - sum alpha_i y_i x_i||, over [w, b] when the bias is regularized.
  double stationarity_residual = 0.0;
  /// |sum alpha_i y_i|; only a KKT condition when the bias is unregularized.
  double dual_balance_residual = 0.0;
  /// max_i |alpha_i (y_i f(x_i) - 1 + xi_i)|
  double complementarity_residual = 0.0;
  /// max_i max(0, 1 - xi_i - y_i f(x_i))
  double feasibility_violation = 0.0;
  /// max_i max(-alpha_i, alpha_i - C, 0); the upper bound applies at p = 1.
  double box_violation = 0.0;
  /// max_i |xi_i (p C xi_i^(p-1) - alpha_i)| over samples with xi_i > 0.
  double slack_complementarity_residual = 0.0;

  /// Largest residual that applies to the given bias mode.
  double max_residual(bool bias_regularized = true) const;
};

KktReport kkt_check(const SvmModel& model, const Vector& alpha, const LabeledDataset& dataset,
                    double C, bool bias_regularized = true, double p = 1.0);

}  // namespace minsvm

#endif  // MINSVM_ORACLE_HPP
