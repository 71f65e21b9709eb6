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

#include <benchmark/benchmark.h>

#include "minsvm/data.hpp"
#include "minsvm/oracle.hpp"
#include "minsvm/solver.hpp"

namespace {

using namespace minsvm;

void BM_Objective(benchmark::State& state) {
  const auto data = gen_blobs(1, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2.0);
  const auto view = augment(data);
  const Vector w = Vector::Constant(data.k() + 1, 0.1);
  const TrainConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(objective(w, view, data.labels(), cfg));
  state.SetItemsProcessed(state.iterations() * data.n());
}
BENCHMARK(BM_Objective)->Args({50, 2})->Args({500, 10})->Args({5000, 50});

void BM_Gradient(benchmark::State& state) {
  const auto data = gen_blobs(1, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2.0);
  const auto view = augment(data);
  const Vector w = Vector::Constant(data.k() + 1, 0.1);
  const TrainConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(gradient(w, view, data.labels(), cfg));
  state.SetItemsProcessed(state.iterations() * data.n());
}
BENCHMARK(BM_Gradient)->Args({50, 2})->Args({500, 10})->Args({5000, 50});

void BM_Train(benchmark::State& state) {
  const auto data = gen_toy({.n_per_class = static_cast<int>(state.range(0))});
  const TrainConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(train(data, cfg).model.b);
}
BENCHMARK(BM_Train)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_DualCd(benchmark::State& state) {
  const auto data = gen_toy({.n_per_class = static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(dual_cd_train(data, 1.0).model.b);
}
BENCHMARK(BM_DualCd)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
