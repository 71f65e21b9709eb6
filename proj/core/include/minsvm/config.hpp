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

#ifndef MINSVM_CONFIG_HPP
#define MINSVM_CONFIG_HPP

namespace minsvm {

/// Solver knobs for the Lp-slack SVM trained by momentum gradient descent.
///
/// The objective is
///   1/2 w'^T D w' + C * sum_i softplus_s(1 - y_i w'^T x'_i)^p
/// where w' = [w, b], x' = [x, 1] and D is the identity with the bias entry
/// zeroed unless `regularize_bias` is set.
struct TrainConfig {
  double C = 1.0;
  double p = 0.5;
  double s = 100.0;  ///< smoothing sharpness
  double eta = 1e-3;  ///< learning rate
  double eps = 0.9;  ///< momentum coefficient
  double tol_obj = 1e-8;  ///< relative objective change
  double tol_grad = 1e-5;
  int max_iter = 5000;
  bool regularize_bias = false;

  /// Throws ValidationError naming the first offending field.
  void validate() const;
};

}  // namespace minsvm

#endif  // MINSVM_CONFIG_HPP
