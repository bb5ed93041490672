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

#include "kgraph/keywords.hpp"
#include "kgraph/synthetic.hpp"
#include "kgraph/text.hpp"

namespace {

using namespace kgraph;

void BM_Normalize(benchmark::State& state) {
  const auto corpus = generate_abstracts(200, static_cast<std::size_t>(state.range(0)), 1);
  const Normalizer normalizer;
  std::size_t tokens = 0;
  for (auto _ : state) {
    for (const auto& d : corpus) tokens += normalizer.normalize(d).token_count;
  }
  state.counters["tokens/s"] = benchmark::Counter(static_cast<double>(tokens),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Normalize)->Arg(100)->Arg(400);

void BM_ExtractKeywords(benchmark::State& state) {
  const auto corpus = generate_abstracts(200, static_cast<std::size_t>(state.range(0)), 2);
  const Normalizer normalizer;
  std::vector<NormalizedDocument> docs;
  for (const auto& d : corpus) docs.push_back(normalizer.normalize(d));
  for (auto _ : state) {
    for (const auto& d : docs) benchmark::DoNotOptimize(extract_keywords(d));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_ExtractKeywords)->Arg(100)->Arg(400);

void BM_Levenshtein(benchmark::State& state) {
  const std::string a = "coronal mass ejection";
  const std::string b = "coronal mass ejections";
  for (auto _ : state) benchmark::DoNotOptimize(levenshtein_similarity(a, b));
}
BENCHMARK(BM_Levenshtein);

}  // namespace
