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

#include "minsvm/data.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "minsvm/errors.hpp"
#include "minsvm/rng.hpp"

namespace minsvm {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, r2;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    r2 = u * u + v * v;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(r2) / r2);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

void ToySpec::validate() const {
  if (n_per_class < 1) throw ValidationError("n_per_class must be at least 1");
  if (!(cov_scale > 0.0) || !std::isfinite(cov_scale)) {
    throw ValidationError("cov_scale must be a positive finite number");
  }
  for (double m : {mean_pos[0], mean_pos[1], mean_neg[0], mean_neg[1]}) {
    if (!std::isfinite(m)) throw ValidationError("class means must be finite");
  }
}

LabeledDataset gen_toy(const ToySpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const Eigen::Index n = 2 * static_cast<Eigen::Index>(spec.n_per_class);
  Matrix x(n, 2);
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool positive = i < spec.n_per_class;
    const auto& mean = positive ? spec.mean_pos : spec.mean_neg;
    x(i, 0) = mean[0] + spec.cov_scale * rng.normal();
    x(i, 1) = mean[1] + spec.cov_scale * rng.normal();
    y(i) = positive ? 1.0 : -1.0;
  }
  return LabeledDataset(std::move(x), std::move(y));
}

LabeledDataset gen_blobs(std::uint64_t seed, int n_per_class, int k, double separation,
                         double sigma) {
  if (n_per_class < 1) throw ValidationError("n_per_class must be at least 1");
  if (k < 1) throw ValidationError("k must be at least 1");
  if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
  Rng rng(seed);
  const double offset = 0.5 * separation / std::sqrt(static_cast<double>(k));
  const Eigen::Index n = 2 * static_cast<Eigen::Index>(n_per_class);
  Matrix x(n, k);
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double label = i < n_per_class ? 1.0 : -1.0;
    for (Eigen::Index j = 0; j < k; ++j) x(i, j) = label * offset + sigma * rng.normal();
    y(i) = label;
  }
  return LabeledDataset(std::move(x), std::move(y));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_at(std::string_view source, std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << source << ": line " << line << ": " << msg;
  throw ValidationError(os.str());
}

double parse_number(std::string_view field, std::string_view source, std::size_t line) {
  std::string_view text = trim(field);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail_at(source, line, "cannot parse '" + std::string(trim(field)) + "' as a number");
  }
  if (!std::isfinite(value)) {
    fail_at(source, line, "non-finite value '" + std::string(trim(field)) + "'");
  }
  return value;
}

}  // namespace

LabeledDataset read_csv(std::istream& in, bool has_header, std::string_view source) {
  std::vector<double> values;
  std::vector<double> labels;
  Eigen::Index k = -1;
  bool header_pending = has_header;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() < 2) fail_at(source, line_no, "expected a label and at least one feature");

    const double label = parse_number(fields[0], source, line_no);
    if (label != 1.0 && label != -1.0) {
      fail_at(source, line_no,
              "label must be +1 or -1, got '" + std::string(trim(fields[0])) + "'");
    }
    const auto row_k = static_cast<Eigen::Index>(fields.size() - 1);
    if (k < 0) {
      k = row_k;
    } else if (row_k != k) {
      fail_at(source, line_no,
              "expected " + std::to_string(k) + " features, found " + std::to_string(row_k));
    }
    labels.push_back(label);
    for (std::size_t j = 1; j < fields.size(); ++j) {
      values.push_back(parse_number(fields[j], source, line_no));
    }
  }
  if (in.bad()) throw std::runtime_error(std::string(source) + ": read error");
  if (labels.empty()) throw ValidationError(std::string(source) + ": no data rows");

  const auto n = static_cast<Eigen::Index>(labels.size());
  Matrix x = Eigen::Map<const Matrix>(values.data(), n, k);
  Vector y = Eigen::Map<const Vector>(labels.data(), n);
  return LabeledDataset(std::move(x), std::move(y));
}

LabeledDataset load_csv(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return read_csv(in, has_header, path.string());
}

namespace {

void append_double(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

void write_csv(std::ostream& out, const LabeledDataset& dataset) {
  std::string line;
  for (Eigen::Index i = 0; i < dataset.n(); ++i) {
    line.clear();
    line += dataset.label(i) > 0 ? "+1" : "-1";
    for (Eigen::Index j = 0; j < dataset.k(); ++j) {
      line += ',';
      append_double(line, dataset.samples()(i, j));
    }
    line += '\n';
    out << line;
  }
}

void save_csv(const std::filesystem::path& path, const LabeledDataset& dataset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(out, dataset);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

Standardizer Standardizer::fit(const LabeledDataset& dataset) {
  Standardizer st;
  const auto& x = dataset.samples();
  st.mean_ = x.colwise().mean().transpose();
  st.scale_.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var = (x.col(j).array() - st.mean_(j)).square().mean();
    st.scale_(j) = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return st;
}

LabeledDataset Standardizer::apply(const LabeledDataset& dataset) const {
  if (dataset.k() != mean_.size()) {
    throw DimensionError("standardizer fitted on k=" + std::to_string(mean_.size()) +
                         ", data has k=" + std::to_string(dataset.k()));
  }
  Matrix x = dataset.samples();
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    x.col(j) = (x.col(j).array() - mean_(j)) / scale_(j);
  }
  return LabeledDataset(std::move(x), dataset.labels());
}

std::vector<Eigen::Index> FoldSplit::test_indices(int fold) const {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(static_cast<Eigen::Index>(i));
  }
  return out;
}

std::vector<Eigen::Index> FoldSplit::train_indices(int fold) const {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(static_cast<Eigen::Index>(i));
  }
  return out;
}

FoldSplit kfold(const LabeledDataset& dataset, int k, std::uint64_t seed) {
  if (k < 2) throw ValidationError("fold count must be at least 2");
  std::vector<Eigen::Index> pos, neg;
  for (Eigen::Index i = 0; i < dataset.n(); ++i) {
    (dataset.label(i) > 0 ? pos : neg).push_back(i);
  }
  if (static_cast<int>(pos.size()) < k || static_cast<int>(neg.size()) < k) {
    throw ValidationError("each class needs at least " + std::to_string(k) +
                          " samples for " + std::to_string(k) + "-fold splitting (have " +
                          std::to_string(pos.size()) + " positive, " +
                          std::to_string(neg.size()) + " negative)");
  }

  Rng rng(seed);
  FoldSplit split;
  split.k = k;
  split.seed = seed;
  split.assignments.assign(static_cast<std::size_t>(dataset.n()), -1);
  std::size_t next = 0;
  for (auto* members : {&pos, &neg}) {
    rng.shuffle(members->begin(), members->end());
    for (auto idx : *members) {
      split.assignments[static_cast<std::size_t>(idx)] = static_cast<int>(next % k);
      ++next;
    }
  }
  return split;
}

}  // namespace minsvm
