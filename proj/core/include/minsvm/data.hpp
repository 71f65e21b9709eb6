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

#ifndef MINSVM_DATA_HPP
#define MINSVM_DATA_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "minsvm/core.hpp"

namespace minsvm {

/// Two isotropic Gaussian blobs in 2-D. The defaults overlap, so the classes
/// are not linearly separable.
struct ToySpec {
  std::uint64_t seed = 0;
  int n_per_class = 50;
  std::array<double, 2> mean_pos{2.0, 2.0};
  std::array<double, 2> mean_neg{0.0, 0.0};
  double cov_scale = 1.0;  ///< per-axis standard deviation

  void validate() const;
};

/// Positive class first, then negative. Deterministic per seed.
LabeledDataset gen_toy(const ToySpec& spec);

/// `n_per_class` points per class drawn from N(+-center, sigma^2 I) in k
/// dimensions, center = (separation / 2) / sqrt(k) on each axis.
LabeledDataset gen_blobs(std::uint64_t seed, int n_per_class, int k, double separation,
                         double sigma = 1.0);

// CSV: optional header row, '#' comment lines, first column the label
// (+1/1/-1), remaining columns decimal features.
LabeledDataset read_csv(std::istream& in, bool has_header, std::string_view source = "<stream>");
LabeledDataset load_csv(const std::filesystem::path& path, bool has_header = false);

/// Labels as +1/-1; features in shortest round-trip decimal form.
void write_csv(std::ostream& out, const LabeledDataset& dataset);
void save_csv(const std::filesystem::path& path, const LabeledDataset& dataset);

/// Per-feature zero-mean, unit-variance transform. Constant features are
/// only centered.
class Standardizer {
 public:
  static Standardizer fit(const LabeledDataset& dataset);
  LabeledDataset apply(const LabeledDataset& dataset) const;

  const Vector& mean() const noexcept { return mean_; }
  const Vector& scale() const noexcept { return scale_; }

 private:
  Vector mean_;
  Vector scale_;
};

/// Stratified k-fold assignment.
struct FoldSplit {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<int> assignments;  ///< fold index per sample

  std::vector<Eigen::Index> test_indices(int fold) const;
  std::vector<Eigen::Index> train_indices(int fold) const;
};

/// Each class is shuffled with the seeded generator and dealt round-robin
/// into folds, continuing where the previous class stopped so overall fold
/// sizes stay balanced too. Throws ValidationError if k < 2 or a class has
/// fewer than k members.
FoldSplit kfold(const LabeledDataset& dataset, int k, std::uint64_t seed);

}  // namespace minsvm

#endif  // MINSVM_DATA_HPP
