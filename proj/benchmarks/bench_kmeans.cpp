// Copyright 2026 The kgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "kgraph/kmeans.hpp"

namespace {

using namespace kgraph;

std::vector<double> gaussian_points(std::size_t rows, std::size_t dim) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> data(rows * dim);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < dim; ++j) data[i * dim + j] = noise(rng) + (i % 2 ? 5.0 : 0.0);
  }
  return data;
}

void BM_KMeans(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = 64;
  const auto data = gaussian_points(rows, dim);
  KMeansOptions opt;
  opt.k = 2;
  opt.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kmeans(data, rows, dim, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KMeans)->Args({1000, 1})->Args({10000, 1})->Args({10000, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
