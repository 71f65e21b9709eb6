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

#include "minsvm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "minsvm/errors.hpp"
#include "minsvm/rng.hpp"
#include "minsvm/solver.hpp"

namespace minsvm {

Vector fd_gradient(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                   const TrainConfig& cfg, double step) {
  if (!(step > 0.0)) throw ValidationError("finite-difference step must be positive");
  Vector g(w_aug.size());
  Vector probe = w_aug;
  for (Eigen::Index j = 0; j < w_aug.size(); ++j) {
    probe(j) = w_aug(j) + step;
    const double up = objective(probe, data, labels, cfg);
    probe(j) = w_aug(j) - step;
    const double down = objective(probe, data, labels, cfg);
    probe(j) = w_aug(j);
    g(j) = (up - down) / (2.0 * step);
  }
  return g;
}

namespace {

double dual_value(const Vector& alpha, const Vector& w_aug) {
  return alpha.sum() - 0.5 * w_aug.squaredNorm();
}

}  // namespace

DualSolution dual_cd_train(const LabeledDataset& dataset, double C, const DualCdOptions& opts) {
  if (!(C > 0.0) || !std::isfinite(C)) throw ValidationError("C must be a positive finite number");
  if (opts.max_sweeps < 1) throw ValidationError("max_sweeps must be at least 1");
  dataset.require_both_classes();

  const AugmentedView data = augment(dataset);
  const Matrix& x = data.augmented_samples;
  const Vector& y = dataset.labels();
  const Eigen::Index n = data.n();

  const Vector q_diag = x.rowwise().squaredNorm();
  Vector alpha = Vector::Zero(n);
  Vector w = Vector::Zero(data.dim());

  DualSolution sol;
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  Rng rng(opts.seed);

  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    rng.shuffle(order.begin(), order.end());
    double best_gain = 0.0;
    double max_pg = 0.0;
    for (const auto i : order) {
      // d/d alpha_i of the (negated) dual: y_i w'^T x'_i - 1
      const double grad = y(i) * x.row(i).dot(w) - 1.0;
      double pg = grad;
      if (alpha(i) <= 0.0) pg = std::min(grad, 0.0);
      if (alpha(i) >= C) pg = std::max(grad, 0.0);
      max_pg = std::max(max_pg, std::abs(pg));
      const double updated = std::clamp(alpha(i) - grad / q_diag(i), 0.0, C);
      const double delta = updated - alpha(i);
      if (delta == 0.0) continue;
      const double gain = -grad * delta - 0.5 * q_diag(i) * delta * delta;
      best_gain = std::max(best_gain, gain);
      alpha(i) = updated;
      w += (delta * y(i)) * x.row(i).transpose();
      sol.min_alpha_seen = std::min(sol.min_alpha_seen, alpha(i));
      sol.max_alpha_excess_seen = std::max(sol.max_alpha_excess_seen, alpha(i) - C);
    }
    sol.dual_objective_history.push_back(dual_value(alpha, w));
    sol.sweeps = sweep;
    if (best_gain < opts.tol && max_pg <= opts.pg_tol) {
      sol.converged = true;
      break;
    }
  }

  // Rebuild w' from alpha to drop the drift of incremental updates.
  const Vector w_exact = x.transpose() * alpha.cwiseProduct(y);
  TrainConfig cfg;
  cfg.C = C;
  cfg.p = 1.0;
  cfg.regularize_bias = true;
  sol.model = SvmModel::from_augmented(w_exact, cfg);
  sol.alpha = std::move(alpha);
  return sol;
}

double KktReport::max_residual(bool bias_regularized) const {
  double m = std::max({stationarity_residual, complementarity_residual, feasibility_violation,
                       box_violation, slack_complementarity_residual});
  if (!bias_regularized) m = std::max(m, dual_balance_residual);
  return m;
}

KktReport kkt_check(const SvmModel& model, const Vector& alpha, const LabeledDataset& dataset,
                    double C, bool bias_regularized, double p) {
  if (alpha.size() != dataset.n()) {
    throw DimensionError("alpha has " + std::to_string(alpha.size()) + " entries, dataset has " +
                         std::to_string(dataset.n()) + " samples");
  }
  const Vector f = decision_values(model, dataset);
  const Vector& y = dataset.labels();
  const Vector ay = alpha.cwiseProduct(y);

  KktReport r;
  const Vector w_from_alpha = dataset.samples().transpose() * ay;
  double stat_sq = (model.w - w_from_alpha).squaredNorm();
  if (bias_regularized) {
    const double b_gap = model.b - ay.sum();
    stat_sq += b_gap * b_gap;
  }
  r.stationarity_residual = std::sqrt(stat_sq);
  r.dual_balance_residual = std::abs(ay.sum());

  for (Eigen::Index i = 0; i < dataset.n(); ++i) {
    const double margin = y(i) * f(i);
    // Hinge slack where the multiplier is active; alpha_i = 0 forces xi_i = 0.
    const double xi = alpha(i) > 0.0 ? std::max(0.0, 1.0 - margin) : 0.0;
    const double constraint = margin - 1.0 + xi;
    r.complementarity_residual =
        std::max(r.complementarity_residual, std::abs(alpha(i) * constraint));
    r.feasibility_violation = std::max(r.feasibility_violation, std::max(0.0, -constraint));
    r.box_violation = std::max({r.box_violation, -alpha(i), alpha(i) - C});
    if (xi > 0.0) {
      const double slope = p * C * std::pow(xi, p - 1.0);
      r.slack_complementarity_residual =
          std::max(r.slack_complementarity_residual, std::abs(xi * (slope - alpha(i))));
    }
  }
  return r;
}

}  // namespace minsvm
