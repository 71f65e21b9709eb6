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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "minsvm/data.hpp"
#include "minsvm/errors.hpp"
#include "minsvm/io.hpp"
#include "minsvm/metrics.hpp"
#include "minsvm/solver.hpp"

namespace minsvm::cli {

namespace {

// Shortest round-trip form.
std::string num(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

enum class EtaScaling { kNone, kInverseC };

struct TrainFlags {
  TrainConfig cfg;
  EtaScaling eta_scaling = EtaScaling::kNone;

  // Effective config for a given C.
  TrainConfig resolve(double C, double p) const {
    TrainConfig c = cfg;
    c.C = C;
    c.p = p;
    if (eta_scaling == EtaScaling::kInverseC) c.eta = cfg.eta / C;
    return c;
  }
};

void add_solver_flags(CLI::App* sub, TrainFlags& f, bool with_c_and_p) {
  if (with_c_and_p) {
    sub->add_option("--C", f.cfg.C, "Slack penalty weight")->capture_default_str();
    sub->add_option("--p", f.cfg.p, "Slack exponent in (0, 1]")->capture_default_str();
  }
  sub->add_option("--s", f.cfg.s, "Smoothing sharpness")->capture_default_str();
  sub->add_option("--eta", f.cfg.eta, "Learning rate")->capture_default_str();
  sub->add_option("--eps", f.cfg.eps, "Momentum coefficient in [0, 1)")->capture_default_str();
  sub->add_option("--tol-obj", f.cfg.tol_obj, "Relative objective-change tolerance")
      ->capture_default_str();
  sub->add_option("--tol-grad", f.cfg.tol_grad, "Gradient-norm tolerance")->capture_default_str();
  sub->add_option("--max-iter", f.cfg.max_iter, "Iteration cap")->capture_default_str();
  sub->add_flag("--regularize-bias", f.cfg.regularize_bias,
                "Penalize the bias like the weights");
  const std::map<std::string, EtaScaling> scalings{{"none", EtaScaling::kNone},
                                                  {"inverse-c", EtaScaling::kInverseC}};
  sub->add_option("--eta-scaling", f.eta_scaling, "none: use --eta as given; inverse-c: eta / C")
      ->transform(CLI::CheckedTransformer(scalings, CLI::ignore_case))
      ->capture_default_str();
}

struct DataFlags {
  std::string path;
  bool header = false;

  LabeledDataset load() const { return load_csv(path, header); }
};

void add_data_flags(CLI::App* sub, DataFlags& d) {
  sub->add_option("--data", d.path, "Data CSV (label first)")->required();
  sub->add_flag("--header", d.header, "The CSV has a header row");
}

int cmd_gen_toy(const ToySpec& spec, const std::string& out_path, std::ostream& out) {
  const LabeledDataset data = gen_toy(spec);
  save_csv(out_path, data);
  out << "wrote " << data.n() << " samples to " << out_path << '\n';
  return kExitOk;
}

int cmd_train(const DataFlags& data_flags, const TrainFlags& flags, const std::string& model_path,
              const std::string& trace_path, std::ostream& out) {
  const LabeledDataset data = data_flags.load();
  const TrainConfig cfg = flags.resolve(flags.cfg.C, flags.cfg.p);
  const TrainResult result = train(data, cfg);
  save_model(model_path, {kModelFormatVersion, result.model, TraceSummary::from(result.trace)});
  if (!trace_path.empty()) {
    std::ostringstream csv;
    write_trace_csv(csv, result.trace);
    write_text_file(trace_path, csv.str());
  }
  out << "iterations: " << result.trace.iterations << '\n'
      << "stop_reason: " << to_string(result.trace.stop_reason) << '\n'
      << "final_objective: " << num(result.trace.final_objective()) << '\n';
  return kExitOk;
}

int cmd_eval(const std::string& model_path, const DataFlags& data_flags, double threshold,
             std::ostream& out) {
  const ModelFile file = load_model(model_path);
  const LabeledDataset data = data_flags.load();
  const double acc = accuracy(file.model, data);
  const SlackReport sl = slack(file.model, data, threshold);
  out << "n: " << data.n() << '\n'
      << "accuracy: " << num(acc) << '\n'
      << "n_sv: " << sl.n_sv << '\n'
      << "sv_threshold: " << num(threshold) << '\n';
  if (file.model.w.norm() > 0.0) {
    out << "margin_width: " << num(margin_width(file.model)) << '\n';
  } else {
    out << "margin_width: undefined (w = 0)\n";
  }
  return kExitOk;
}

int cmd_cv(const DataFlags& data_flags, const TrainFlags& flags, const ComparisonOptions& options,
           const std::string& json_path, const std::string& tsv_path, std::ostream& out) {
  const LabeledDataset data = data_flags.load();
  const CvReport report = run_cv(data, flags.resolve(flags.cfg.C, flags.cfg.p), options);
  std::ostringstream tsv;
  write_cv_tsv(tsv, report);
  if (!json_path.empty()) write_text_file(json_path, cv_to_json(report));
  if (!tsv_path.empty()) write_text_file(tsv_path, tsv.str());
  if (json_path.empty() && tsv_path.empty()) out << tsv.str();
  return kExitOk;
}

int cmd_compare(const DataFlags& data_flags, const TrainFlags& flags,
                const std::vector<double>& c_list, double p_min,
                const ComparisonOptions& options, const std::string& json_path,
                const std::string& tsv_path, std::ostream& out) {
  const LabeledDataset data = data_flags.load();
  std::vector<ComparisonReport> reports;
  for (double C : c_list) {
    reports.push_back(
        run_comparison(data, flags.resolve(C, 1.0), flags.resolve(C, p_min), options));
  }
  std::ostringstream tsv;
  write_comparison_tsv(tsv, reports);
  if (!json_path.empty()) write_text_file(json_path, comparison_to_json(reports));
  if (!tsv_path.empty()) write_text_file(tsv_path, tsv.str());
  if (json_path.empty() && tsv_path.empty()) out << tsv.str();
  return kExitOk;
}

int cmd_figure(const std::string& model_path, const DataFlags& data_flags, double threshold,
               const std::string& out_path, std::ostream& out) {
  const ModelFile file = load_model(model_path);
  const LabeledDataset data = data_flags.load();
  const FigureData fig = build_figure_data(file.model, data, threshold);
  write_text_file(out_path, figure_to_json(fig));
  out << "n_sv: " << fig.n_sv << '\n'
      << "margin_width: " << num(fig.margin_width) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear SVM with an Lp (0 < p <= 1) slack penalty", "minsvm"};
  app.require_subcommand(1);

  // gen-toy
  ToySpec toy;
  std::vector<double> mean_pos{toy.mean_pos[0], toy.mean_pos[1]};
  std::vector<double> mean_neg{toy.mean_neg[0], toy.mean_neg[1]};
  std::string toy_out;
  auto* gen = app.add_subcommand("gen-toy", "Generate two overlapping 2-D Gaussian classes");
  gen->add_option("--seed", toy.seed, "RNG seed")->capture_default_str();
  gen->add_option("--n-per-class", toy.n_per_class, "Points per class")->capture_default_str();
  gen->add_option("--mean-pos", mean_pos, "Positive class mean x,y")
      ->delimiter(',')
      ->expected(2);
  gen->add_option("--mean-neg", mean_neg, "Negative class mean x,y")
      ->delimiter(',')
      ->expected(2);
  gen->add_option("--std", toy.cov_scale, "Per-axis standard deviation")->capture_default_str();
  gen->add_option("--out", toy_out, "Output CSV")->required();

  // train
  DataFlags train_data;
  TrainFlags train_flags;
  std::string model_out, trace_out;
  auto* tr = app.add_subcommand("train", "Train a model by momentum gradient descent");
  add_data_flags(tr, train_data);
  add_solver_flags(tr, train_flags, true);
  tr->add_option("--out", model_out, "Output model JSON")->required();
  tr->add_option("--trace", trace_out, "Optional per-iteration trace CSV");

  // eval
  DataFlags eval_data;
  std::string eval_model;
  double eval_threshold = kDefaultSvThreshold;
  auto* ev = app.add_subcommand("eval", "Accuracy, support vectors and margin of a model");
  ev->add_option("--model", eval_model, "Model JSON")->required();
  add_data_flags(ev, eval_data);
  ev->add_option("--sv-threshold", eval_threshold, "Slack above which a sample is an SV")
      ->capture_default_str();

  // cv
  DataFlags cv_data;
  TrainFlags cv_flags;
  ComparisonOptions cv_opts;
  std::string cv_json, cv_tsv;
  auto* cv = app.add_subcommand("cv", "Stratified k-fold cross-validation of one configuration");
  add_data_flags(cv, cv_data);
  add_solver_flags(cv, cv_flags, true);
  cv->add_option("--k", cv_opts.k, "Fold count")->capture_default_str();
  cv->add_option("--seed", cv_opts.seed, "Fold seed")->capture_default_str();
  cv->add_option("--sv-threshold", cv_opts.sv_threshold)->capture_default_str();
  cv->add_flag("--standardize", cv_opts.standardize, "Standardize with train-fold statistics");
  cv->add_option("--out-json", cv_json, "Report JSON");
  cv->add_option("--out-tsv", cv_tsv, "Report TSV (stdout when no output is given)");

  // compare
  DataFlags cmp_data;
  TrainFlags cmp_flags;
  ComparisonOptions cmp_opts;
  std::vector<double> c_list{1.0};
  double p_min = 0.5;
  std::string cmp_json, cmp_tsv;
  auto* cmp = app.add_subcommand("compare", "Cross-validated p = 1 vs p < 1 comparison");
  add_data_flags(cmp, cmp_data);
  add_solver_flags(cmp, cmp_flags, false);
  cmp->add_option("--c-list", c_list, "Comma-separated C values")->delimiter(',');
  cmp->add_option("--p", p_min, "Slack exponent of the minimal solver")->capture_default_str();
  cmp->add_option("--k", cmp_opts.k, "Fold count")->capture_default_str();
  cmp->add_option("--seed", cmp_opts.seed, "Fold seed")->capture_default_str();
  cmp->add_option("--sv-threshold", cmp_opts.sv_threshold)->capture_default_str();
  cmp->add_flag("--standardize", cmp_opts.standardize, "Standardize with train-fold statistics");
  cmp->add_option("--out-json", cmp_json, "Report JSON");
  cmp->add_option("--out-tsv", cmp_tsv, "Report TSV (stdout when no output is given)");

  // figure
  DataFlags fig_data;
  std::string fig_model, fig_out;
  double fig_threshold = kDefaultSvThreshold;
  auto* fig = app.add_subcommand("figure", "Export 2-D plot data for a trained model");
  fig->add_option("--model", fig_model, "Model JSON")->required();
  add_data_flags(fig, fig_data);
  fig->add_option("--sv-threshold", fig_threshold)->capture_default_str();
  fig->add_option("--out", fig_out, "Output JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      toy.mean_pos = {mean_pos[0], mean_pos[1]};
      toy.mean_neg = {mean_neg[0], mean_neg[1]};
      return cmd_gen_toy(toy, toy_out, out);
    }
    if (tr->parsed()) return cmd_train(train_data, train_flags, model_out, trace_out, out);
    if (ev->parsed()) return cmd_eval(eval_model, eval_data, eval_threshold, out);
    if (cv->parsed()) return cmd_cv(cv_data, cv_flags, cv_opts, cv_json, cv_tsv, out);
    if (cmp->parsed()) {
      if (c_list.empty()) throw ValidationError("--c-list must name at least one C");
      return cmd_compare(cmp_data, cmp_flags, c_list, p_min, cmp_opts, cmp_json, cmp_tsv, out);
    }
    if (fig->parsed()) return cmd_figure(fig_model, fig_data, fig_threshold, fig_out, out);
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace minsvm::cli
