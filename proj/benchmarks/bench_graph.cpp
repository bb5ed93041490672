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

#include "kgraph/graph.hpp"
#include "kgraph/synthetic.hpp"

namespace {

using namespace kgraph;

struct Fixture {
  std::vector<NormalizedDocument> docs;
  std::map<std::string, std::vector<Keyword>> keywords;
  std::map<std::string, Domain> domains;
  std::set<std::string> ids;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture out;
    TwoDomainSpec spec;
    spec.docs_per_domain = 200;
    const auto gen = generate_two_domain(spec);
    const Normalizer normalizer;
    for (const auto* c : {&gen.a, &gen.b}) {
      for (const auto& d : *c) {
        out.docs.push_back(normalizer.normalize(d));
        out.keywords[d.id] = extract_keywords(out.docs.back());
        out.domains[d.id] = d.domain.value_or(Domain::Unknown);
        for (const auto& k : out.keywords[d.id]) out.ids.insert(k.norm);
      }
    }
    return out;
  }();
  return f;
}

void BM_Cooccurrence(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cooccurrence_edges(f.docs, f.ids, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Cooccurrence)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  const auto& f = fixture();
  const auto space = build_tfidf(f.docs);
  BuildOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(f.keywords, f.domains, f.docs, &space, opts));
  }
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMillisecond);

}  // namespace
