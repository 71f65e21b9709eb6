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

#ifndef MINSVM_IO_HPP
#define MINSVM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minsvm/core.hpp"
#include "minsvm/metrics.hpp"
#include "minsvm/solver.hpp"

namespace minsvm {

// Model files are JSON:
//   {"format_version": 1, "w": [...], "b": ...,
//    "config": {"C", "p", "s", "eta", "eps", "tol_obj", "tol_grad", "max_iter",
//               "regularize_bias"},
//    "trace": {"iterations", "final_objective", "converged", "stop_reason"}}
// Doubles are written in shortest round-trip form, so load(save(m)) is
// bit-exact.

inline constexpr int kModelFormatVersion = 1;

struct TraceSummary {
  int iterations = 0;
  double final_objective = 0.0;
  bool converged = false;
  StopReason stop_reason = StopReason::kIterationCap;

  static TraceSummary from(const TrainTrace& trace);
};

struct ModelFile {
  int format_version = kModelFormatVersion;
  SvmModel model;
  TraceSummary trace;
};

std::string model_to_json(const ModelFile& file);
/// Throws ValidationError on malformed or incompatible documents.
ModelFile model_from_json(std::string_view text);

void save_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile load_model(const std::filesystem::path& path);

/// Header `iter,objective,grad_norm`, one row for the initial point and one per
/// iteration.
void write_trace_csv(std::ostream& out, const TrainTrace& trace);

struct FigurePoint {
  double x = 0.0;
  double y = 0.0;
  int label = 0;
  bool is_sv = false;
};

/// The locus w^T x + b = level, stored as w^T x + offset = 0.
struct FigureLine {
  int level = 0;
  Vector w;
  double offset = 0.0;
};

/// Plot data for a 2-D model: samples with support-vector flags and the lines
/// w^T x + b in {-1, 0, +1}.
struct FigureData {
  std::vector<FigurePoint> points;
  std::vector<FigureLine> lines;
  double margin_width = 0.0;
  std::size_t n_sv = 0;
  double sv_threshold = kDefaultSvThreshold;
  TrainConfig config;
};

/// Throws ValidationError unless the data is 2-D.
FigureData build_figure_data(const SvmModel& model, const LabeledDataset& dataset,
                             double sv_threshold = kDefaultSvThreshold);
std::string figure_to_json(const FigureData& figure);

std::string comparison_to_json(std::span<const ComparisonReport> reports);
/// One header row, then for each report k fold rows followed by a mean row.
void write_comparison_tsv(std::ostream& out, std::span<const ComparisonReport> reports);

std::string cv_to_json(const CvReport& report);
void write_cv_tsv(std::ostream& out, const CvReport& report);

/// Writes `contents` to `path`, throwing std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace minsvm

#endif  // MINSVM_IO_HPP
