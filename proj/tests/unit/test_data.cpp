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

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "minsvm/data.hpp"
#include "minsvm/errors.hpp"
#include "minsvm/rng.hpp"

namespace minsvm {
namespace {

TEST(RngTest, ReproducibleAndInRange) {
  Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(a.below(13), 13u);
    b.below(13);
  }
}

TEST(RngTest, NormalMoments) {
  Rng rng(1);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

// The generator is std::mt19937_64; its 10000th output is fixed by the C++
// standard, which pins the raw stream across platforms.
TEST(RngTest, EngineMatchesStandardReference) {
  Rng rng(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next_u64();
  EXPECT_EQ(x, 9981545732273789042ull);
}

TEST(GenToyTest, ShapeAndLabels) {
  const auto d = gen_toy({});
  EXPECT_EQ(d.n(), 100);
  EXPECT_EQ(d.k(), 2);
  EXPECT_EQ(d.count_positive(), 50);
  EXPECT_EQ(d.count_negative(), 50);
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    EXPECT_TRUE(d.label(i) == 1.0 || d.label(i) == -1.0);
  }
}

TEST(GenToyTest, DeterministicPerSeed) {
  ToySpec spec;
  spec.seed = 42;
  const auto a = gen_toy(spec);
  const auto b = gen_toy(spec);
  EXPECT_TRUE(a.samples() == b.samples());
  EXPECT_TRUE(a.labels() == b.labels());
  std::ostringstream sa, sb;
  write_csv(sa, a);
  write_csv(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  spec.seed = 43;
  EXPECT_FALSE(gen_toy(spec).samples() == a.samples());
}

TEST(GenToyTest, ClassMeansNearSpec) {
  ToySpec spec;
  spec.n_per_class = 5000;
  const auto d = gen_toy(spec);
  const Eigen::RowVector2d pos = d.samples().topRows(5000).colwise().mean();
  const Eigen::RowVector2d neg = d.samples().bottomRows(5000).colwise().mean();
  EXPECT_NEAR(pos(0), 2.0, 0.05);
  EXPECT_NEAR(pos(1), 2.0, 0.05);
  EXPECT_NEAR(neg(0), 0.0, 0.05);
  EXPECT_NEAR(neg(1), 0.0, 0.05);
}

TEST(GenToyTest, Validation) {
  ToySpec spec;
  spec.n_per_class = 0;
  EXPECT_THROW(gen_toy(spec), ValidationError);
  spec.n_per_class = 5;
  spec.cov_scale = 0.0;
  EXPECT_THROW(gen_toy(spec), ValidationError);
}

TEST(ReadCsvTest, TwoRows) {
  std::istringstream in("+1,0.5,1.25\n-1,2.0,0.0\n");
  const auto d = read_csv(in, false);
  ASSERT_EQ(d.n(), 2);
  ASSERT_EQ(d.k(), 2);
  EXPECT_EQ(d.label(0), 1.0);
  EXPECT_EQ(d.label(1), -1.0);
  EXPECT_EQ(d.samples()(0, 1), 1.25);
  EXPECT_EQ(d.samples()(1, 0), 2.0);
}

TEST(ReadCsvTest, CommentsHeaderAndPlainOne) {
  std::istringstream in("# produced by hand\nlabel,a,b\n1,0.5,1\n# mid-file comment\n\n-1,3,4\r\n");
  const auto d = read_csv(in, true);
  EXPECT_EQ(d.n(), 2);
  EXPECT_EQ(d.label(0), 1.0);
  EXPECT_EQ(d.samples()(1, 1), 4.0);
}

std::string error_of(const std::string& text, bool header = false) {
  std::istringstream in(text);
  try {
    read_csv(in, header, "data.csv");
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(ReadCsvTest, ErrorsNameTheLine) {
  EXPECT_NE(error_of("+1,1\n-1,2\n2,3\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("+1,1\n-1,2\n2,3\n").find("label"), std::string::npos);
  EXPECT_NE(error_of("+1,1,2\n-1,2\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("+1,abc\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("+1,nan\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("+1,inf\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("+1\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("+1,1,\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("# only comments\n").find("no data"), std::string::npos);
}

TEST(CsvRoundTripTest, ShortestDecimalIsExact) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + rng.below(30));
    const auto k = static_cast<Eigen::Index>(1 + rng.below(5));
    Matrix x(n, k);
    Vector y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        x(i, j) = rng.normal() * std::pow(10.0, rng.uniform(-300, 300));
      }
      y(i) = rng.below(2) == 0 ? -1.0 : 1.0;
    }
    const LabeledDataset d(x, y);
    std::stringstream buf;
    write_csv(buf, d);
    const auto back = read_csv(buf, false);
    EXPECT_TRUE(back.samples() == d.samples());
    EXPECT_TRUE(back.labels() == d.labels());
  }
}

TEST(CsvFileTest, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "minsvm_test_data.csv";
  const auto d = gen_toy({});
  save_csv(path, d);
  const auto back = load_csv(path);
  EXPECT_TRUE(back.samples() == d.samples());
  std::filesystem::remove(path);
  EXPECT_THROW(load_csv(path), std::runtime_error);
}

TEST(StandardizerTest, TrainStatisticsApplied) {
  ToySpec spec;
  spec.mean_pos = {10.0, -3.0};
  const auto d = gen_toy(spec);
  const auto st = Standardizer::fit(d);
  const auto z = st.apply(d);
  for (Eigen::Index j = 0; j < 2; ++j) {
    EXPECT_NEAR(z.samples().col(j).mean(), 0.0, 1e-12);
    EXPECT_NEAR((z.samples().col(j).array().square()).mean(), 1.0, 1e-12);
  }
  EXPECT_TRUE(z.labels() == d.labels());

  Matrix c(2, 1);
  c << 4.0, 4.0;
  Vector y(2);
  y << 1.0, -1.0;
  const auto constant = Standardizer::fit(LabeledDataset(c, y)).apply(LabeledDataset(c, y));
  EXPECT_EQ(constant.samples()(0, 0), 0.0);
}

TEST(KfoldTest, BalancedExactDivision) {
  Matrix x = Matrix::Zero(10, 1);
  Vector y(10);
  y << 1, 1, 1, 1, 1, -1, -1, -1, -1, -1;
  const LabeledDataset d(x, y);
  const auto split = kfold(d, 5, 0);
  for (int f = 0; f < 5; ++f) {
    const auto test = split.test_indices(f);
    ASSERT_EQ(test.size(), 2u);
    EXPECT_NE(d.label(test[0]), d.label(test[1]));
  }
}

TEST(KfoldTest, PartitionPropertyAndBalance) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(6));
    const int n_pos = k + static_cast<int>(rng.below(40));
    const int n_neg = k + static_cast<int>(rng.below(40));
    Matrix x = Matrix::Zero(n_pos + n_neg, 1);
    Vector y(n_pos + n_neg);
    for (int i = 0; i < n_pos + n_neg; ++i) y(i) = i < n_pos ? 1.0 : -1.0;
    rng.shuffle(y.data(), y.data() + y.size());
    const LabeledDataset d(x, y);
    const auto split = kfold(d, k, rng.next_u64());

    std::set<Eigen::Index> seen;
    std::vector<int> pos(k, 0), neg(k, 0), total(k, 0);
    for (int f = 0; f < k; ++f) {
      const auto test = split.test_indices(f);
      const auto train = split.train_indices(f);
      EXPECT_EQ(test.size() + train.size(), static_cast<std::size_t>(d.n()));
      for (auto i : test) {
        EXPECT_TRUE(seen.insert(i).second);
        (d.label(i) > 0 ? pos : neg)[f]++;
        total[f]++;
      }
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(d.n()));
    auto spread = [](const std::vector<int>& v) {
      return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
    };
    EXPECT_LE(spread(pos), 1);
    EXPECT_LE(spread(neg), 1);
    EXPECT_LE(spread(total), 1);
  }
}

TEST(KfoldTest, DeterministicAndValidated) {
  const auto d = gen_toy({});
  EXPECT_EQ(kfold(d, 5, 3).assignments, kfold(d, 5, 3).assignments);
  EXPECT_NE(kfold(d, 5, 3).assignments, kfold(d, 5, 4).assignments);
  EXPECT_THROW(kfold(d, 1, 0), ValidationError);
  ToySpec small;
  small.n_per_class = 3;
  EXPECT_THROW(kfold(gen_toy(small), 5, 0), ValidationError);
}

}  // namespace
}  // namespace minsvm
