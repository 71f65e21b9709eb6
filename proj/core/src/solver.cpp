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

#include "minsvm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minsvm/errors.hpp"

namespace minsvm {

namespace {

// log(1 + e^t) for any t, including +-inf.
double softplus(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double log_sigmoid(double t) { return -softplus(-t); }

Vector margins(const Vector& w_aug, const AugmentedView& data, const Vector& labels) {
  if (w_aug.size() != data.dim()) {
    throw DimensionError("weight dimension " + std::to_string(w_aug.size()) +
                         " does not match augmented data dimension " +
                         std::to_string(data.dim()));
  }
  if (labels.size() != data.n()) {
    throw DimensionError("label count does not match sample count");
  }
  const Vector f = data.augmented_samples * w_aug;
  return (1.0 - labels.array() * f.array()).matrix();
}

double regularizer(const Vector& w_aug, bool regularize_bias) {
  const auto k = w_aug.size() - 1;
  double r = 0.5 * w_aug.head(k).squaredNorm();
  if (regularize_bias) r += 0.5 * w_aug(k) * w_aug(k);
  return r;
}

double objective_unchecked(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                           const TrainConfig& cfg) {
  const Vector z = margins(w_aug, data, labels);
  double penalty = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    penalty += std::exp(cfg.p * log_smoothed_plus(z(i), cfg.s));
  }
  return regularizer(w_aug, cfg.regularize_bias) + cfg.C * penalty;
}

Vector gradient_unchecked(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                          const TrainConfig& cfg) {
  const Vector z = margins(w_aug, data, labels);
  Vector weighted(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    // sigma(s z) * n^(p-1), with n = smoothed_plus(z, s)
    const double log_coef =
        log_sigmoid(cfg.s * z(i)) + (cfg.p - 1.0) * log_smoothed_plus(z(i), cfg.s);
    weighted(i) = std::exp(log_coef) * labels(i);
  }
  Vector g = (-cfg.p * cfg.C) * (data.augmented_samples.transpose() * weighted);
  const auto k = w_aug.size() - 1;
  g.head(k) += w_aug.head(k);
  if (cfg.regularize_bias) g(k) += w_aug(k);
  return g;
}

}  // namespace

double smoothed_plus(double x, double s) {
  if (x > 0.0) return x + std::log1p(std::exp(-s * x)) / s;
  return std::log1p(std::exp(s * x)) / s;
}

double log_smoothed_plus(double x, double s) {
  if (x > 0.0) return std::log(smoothed_plus(x, s));
  const double t = s * x;
  // log(log1p(e^t)) = t + log(log1p(u) / u) with u = e^t; the series gives
  // t - u/2 once u is far below machine epsilon.
  if (t < -30.0) return t - 0.5 * std::exp(t) - std::log(s);
  return std::log(std::log1p(std::exp(t))) - std::log(s);
}

double objective(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                 const TrainConfig& cfg) {
  const double value = objective_unchecked(w_aug, data, labels, cfg);
  if (!std::isfinite(value)) throw NumericalError("objective is not finite");
  return value;
}

Vector gradient(const Vector& w_aug, const AugmentedView& data, const Vector& labels,
                const TrainConfig& cfg) {
  Vector g = gradient_unchecked(w_aug, data, labels, cfg);
  if (!g.allFinite()) throw NumericalError("gradient is not finite");
  return g;
}

double primal_objective(const SvmModel& model, const LabeledDataset& dataset, double C, double p,
                        bool regularize_bias) {
  const SlackReport report = slack(model, dataset, 0.0);
  double penalty = 0.0;
  for (Eigen::Index i = 0; i < report.xi.size(); ++i) {
    if (report.xi(i) > 0.0) penalty += std::pow(report.xi(i), p);
  }
  double r = 0.5 * model.w.squaredNorm();
  if (regularize_bias) r += 0.5 * model.b * model.b;
  return r + C * penalty;
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kObjectiveTolerance:
      return "objective-tolerance";
    case StopReason::kGradientTolerance:
      return "gradient-tolerance";
    case StopReason::kIterationCap:
      return "iteration-cap";
  }
  return "unknown";
}

StopReason stop_reason_from_string(std::string_view name) {
  for (auto r : {StopReason::kObjectiveTolerance, StopReason::kGradientTolerance,
                 StopReason::kIterationCap}) {
    if (to_string(r) == name) return r;
  }
  throw ValidationError("unknown stop reason '" + std::string(name) + "'");
}

TrainResult train(const LabeledDataset& dataset, const TrainConfig& cfg) {
  cfg.validate();
  dataset.require_both_classes();

  const AugmentedView data = augment(dataset);
  const Vector& y = dataset.labels();
  const auto dim = data.dim();

  Vector w = Vector::Zero(dim);
  Vector v = Vector::Zero(dim);

  TrainTrace trace;
  trace.objective_history.reserve(static_cast<std::size_t>(cfg.max_iter) + 1);
  trace.grad_norm_history.reserve(static_cast<std::size_t>(cfg.max_iter));

  auto diverged = [](const char* what, int iteration) {
    return DivergenceError(std::string(what) + " became non-finite at iteration " +
                               std::to_string(iteration),
                           iteration);
  };

  double current = objective_unchecked(w, data, y, cfg);
  Vector g = gradient_unchecked(w, data, y, cfg);
  if (!std::isfinite(current)) throw diverged("objective", 0);
  if (!g.allFinite()) throw diverged("gradient", 0);
  trace.objective_history.push_back(current);
  trace.initial_grad_norm = g.norm();

  if (trace.initial_grad_norm < cfg.tol_grad) {
    trace.converged = true;
    trace.stop_reason = StopReason::kGradientTolerance;
    return {SvmModel::from_augmented(w, cfg), std::move(trace)};
  }

  for (int t = 1; t <= cfg.max_iter; ++t) {
    v = cfg.eps * v - cfg.eta * g;
    w += v;

    const double next = objective_unchecked(w, data, y, cfg);
    if (!std::isfinite(next)) throw diverged("objective", t);
    g = gradient_unchecked(w, data, y, cfg);
    if (!g.allFinite()) throw diverged("gradient", t);
    const double grad_norm = g.norm();

    trace.objective_history.push_back(next);
    trace.grad_norm_history.push_back(grad_norm);
    trace.iterations = t;

    const double rel_change = std::abs(next - current) / std::max(1.0, std::abs(current));
    current = next;
    if (rel_change < cfg.tol_obj) {
      trace.converged = true;
      trace.stop_reason = StopReason::kObjectiveTolerance;
      break;
    }
    if (grad_norm < cfg.tol_grad) {
      trace.converged = true;
      trace.stop_reason = StopReason::kGradientTolerance;
      break;
    }
  }
  if (!trace.converged) trace.stop_reason = StopReason::kIterationCap;

  return {SvmModel::from_augmented(w, cfg), std::move(trace)};
}

}  // namespace minsvm
