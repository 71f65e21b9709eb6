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

#include "minsvm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "minsvm/errors.hpp"

namespace minsvm {

using nlohmann::json;

namespace {

std::string fmt(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

json config_to_json(const TrainConfig& c) {
  return json{{"C", c.C},
              {"p", c.p},
              {"s", c.s},
              {"eta", c.eta},
              {"eps", c.eps},
              {"tol_obj", c.tol_obj},
              {"tol_grad", c.tol_grad},
              {"max_iter", c.max_iter},
              {"regularize_bias", c.regularize_bias}};
}

TrainConfig config_from_json(const json& j) {
  TrainConfig c;
  c.C = j.at("C").get<double>();
  c.p = j.at("p").get<double>();
  c.s = j.at("s").get<double>();
  c.eta = j.at("eta").get<double>();
  c.eps = j.at("eps").get<double>();
  c.tol_obj = j.at("tol_obj").get<double>();
  c.tol_grad = j.at("tol_grad").get<double>();
  c.max_iter = j.at("max_iter").get<int>();
  c.regularize_bias = j.at("regularize_bias").get<bool>();
  return c;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

TraceSummary TraceSummary::from(const TrainTrace& trace) {
  return {trace.iterations, trace.final_objective(), trace.converged, trace.stop_reason};
}

std::string model_to_json(const ModelFile& file) {
  json j;
  j["format_version"] = file.format_version;
  j["w"] = vector_to_json(file.model.w);
  j["b"] = file.model.b;
  j["config"] = config_to_json(file.model.config);
  j["trace"] = {{"iterations", file.trace.iterations},
                {"final_objective", file.trace.final_objective},
                {"converged", file.trace.converged},
                {"stop_reason", std::string(to_string(file.trace.stop_reason))}};
  return j.dump(2) + "\n";
}

ModelFile model_from_json(std::string_view text) {
  ModelFile file;
  try {
    const json j = json::parse(text);
    file.format_version = j.at("format_version").get<int>();
    if (file.format_version != kModelFormatVersion) {
      throw ValidationError("unsupported model format_version " +
                            std::to_string(file.format_version));
    }
    const auto w = j.at("w").get<std::vector<double>>();
    if (w.empty()) throw ValidationError("model has an empty weight vector");
    file.model.w = Eigen::Map<const Vector>(w.data(), static_cast<Eigen::Index>(w.size()));
    file.model.b = j.at("b").get<double>();
    file.model.config = config_from_json(j.at("config"));
    const json& t = j.at("trace");
    file.trace.iterations = t.at("iterations").get<int>();
    file.trace.final_objective = t.at("final_objective").get<double>();
    file.trace.converged = t.at("converged").get<bool>();
    file.trace.stop_reason = stop_reason_from_string(t.at("stop_reason").get<std::string>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed model file: ") + e.what());
  }
  if (!file.model.w.allFinite() || !std::isfinite(file.model.b)) {
    throw ValidationError("model contains non-finite values");
  }
  return file;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
  write_text_file(path, model_to_json(file));
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

void write_trace_csv(std::ostream& out, const TrainTrace& trace) {
  out << "iter,objective,grad_norm\n";
  for (std::size_t t = 0; t < trace.objective_history.size(); ++t) {
    const double gn = t == 0 ? trace.initial_grad_norm : trace.grad_norm_history[t - 1];
    out << t << ',' << fmt(trace.objective_history[t]) << ',' << fmt(gn) << '\n';
  }
}

FigureData build_figure_data(const SvmModel& model, const LabeledDataset& dataset,
                             double sv_threshold) {
  if (dataset.k() != 2) {
    throw ValidationError("figure export is 2-D only; data has k=" +
                          std::to_string(dataset.k()));
  }
  const SlackReport report = slack(model, dataset, sv_threshold);
  FigureData fig;
  fig.points.reserve(static_cast<std::size_t>(dataset.n()));
  for (Eigen::Index i = 0; i < dataset.n(); ++i) {
    fig.points.push_back({dataset.samples()(i, 0), dataset.samples()(i, 1),
                          dataset.label(i) > 0 ? 1 : -1, report.xi(i) > sv_threshold});
  }
  for (int level : {-1, 0, 1}) fig.lines.push_back({level, model.w, model.b - level});
  fig.margin_width = margin_width(model);
  fig.n_sv = report.n_sv;
  fig.sv_threshold = sv_threshold;
  fig.config = model.config;
  return fig;
}

std::string figure_to_json(const FigureData& figure) {
  json points = json::array();
  for (const auto& p : figure.points) {
    points.push_back({{"x", p.x}, {"y", p.y}, {"label", p.label}, {"is_sv", p.is_sv}});
  }
  json lines = json::array();
  for (const auto& l : figure.lines) {
    lines.push_back({{"level", l.level}, {"w", vector_to_json(l.w)}, {"b", l.offset}});
  }
  json j;
  j["points"] = std::move(points);
  j["lines"] = std::move(lines);
  j["margin_width"] = figure.margin_width;
  j["n_sv"] = figure.n_sv;
  j["sv_threshold"] = figure.sv_threshold;
  j["config"] = config_to_json(figure.config);
  return j.dump(2) + "\n";
}

namespace {

json record_to_json(const ComparisonRecord& r) {
  return json{{"test_acc_std", r.test_acc_std},
              {"train_acc_std", r.train_acc_std},
              {"n_sv_std", r.n_sv_std},
              {"test_acc_min", r.test_acc_min},
              {"train_acc_min", r.train_acc_min},
              {"n_sv_min", r.n_sv_min},
              {"angle_theta_degrees", r.angle_theta_degrees},
              {"dist_d", r.dist_d}};
}

json options_to_json(const ComparisonOptions& o) {
  return json{{"k", o.k},
              {"seed", o.seed},
              {"sv_threshold", o.sv_threshold},
              {"standardize", o.standardize}};
}

void write_record_tsv(std::ostream& out, const ComparisonRecord& r) {
  out << fmt(r.test_acc_std) << '\t' << fmt(r.train_acc_std) << '\t' << fmt(r.n_sv_std) << '\t'
      << fmt(r.test_acc_min) << '\t' << fmt(r.train_acc_min) << '\t' << fmt(r.n_sv_min) << '\t'
      << fmt(r.angle_theta_degrees) << '\t' << fmt(r.dist_d) << '\n';
}

}  // namespace

std::string comparison_to_json(std::span<const ComparisonReport> reports) {
  json configs = json::array();
  for (const auto& rep : reports) {
    json folds = json::array();
    for (const auto& f : rep.folds) folds.push_back(record_to_json(f));
    configs.push_back({{"C", rep.cfg_min.C},
                       {"config_std", config_to_json(rep.cfg_std)},
                       {"config_min", config_to_json(rep.cfg_min)},
                       {"options", options_to_json(rep.options)},
                       {"folds", std::move(folds)},
                       {"mean", record_to_json(rep.mean)}});
  }
  return json{{"configurations", std::move(configs)}}.dump(2) + "\n";
}

void write_comparison_tsv(std::ostream& out, std::span<const ComparisonReport> reports) {
  out << "C\tp\tfold\ttest_acc_std\ttrain_acc_std\tn_sv_std\ttest_acc_min\ttrain_acc_min"
         "\tn_sv_min\tangle_theta\tdist_d\n";
  for (const auto& rep : reports) {
    const std::string prefix = fmt(rep.cfg_min.C) + '\t' + fmt(rep.cfg_min.p) + '\t';
    for (std::size_t f = 0; f < rep.folds.size(); ++f) {
      out << prefix << f << '\t';
      write_record_tsv(out, rep.folds[f]);
    }
    out << prefix << "mean\t";
    write_record_tsv(out, rep.mean);
  }
}

std::string cv_to_json(const CvReport& report) {
  auto fold_json = [](const CvFold& f) {
    return json{{"train_acc", f.train_acc},
                {"test_acc", f.test_acc},
                {"n_sv", f.n_sv},
                {"iterations", f.iterations},
                {"converged", f.converged}};
  };
  json folds = json::array();
  for (const auto& f : report.folds) folds.push_back(fold_json(f));
  json mean = {{"train_acc", report.mean.train_acc},
               {"test_acc", report.mean.test_acc},
               {"n_sv", report.mean.n_sv}};
  return json{{"config", config_to_json(report.cfg)},
              {"options", options_to_json(report.options)},
              {"folds", std::move(folds)},
              {"mean", std::move(mean)}}
             .dump(2) +
         "\n";
}

void write_cv_tsv(std::ostream& out, const CvReport& report) {
  out << "fold\ttrain_acc\ttest_acc\tn_sv\titerations\tconverged\n";
  for (std::size_t f = 0; f < report.folds.size(); ++f) {
    const auto& r = report.folds[f];
    out << f << '\t' << fmt(r.train_acc) << '\t' << fmt(r.test_acc) << '\t' << fmt(r.n_sv) << '\t'
        << r.iterations << '\t' << (r.converged ? "true" : "false") << '\n';
  }
  out << "mean\t" << fmt(report.mean.train_acc) << '\t' << fmt(report.mean.test_acc) << '\t'
      << fmt(report.mean.n_sv) << "\t\t\n";
}

}  // namespace minsvm
