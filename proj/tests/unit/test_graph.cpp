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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kgraph/error.hpp"
#include "kgraph/graph.hpp"
#include "oracles.hpp"

namespace kgraph {
namespace {

using testing::make_doc;

Keyword kw(const std::string& surface, const std::string& norm, double score) {
  return {surface, norm, score, 1};
}

EntityNode node(const std::string& id, std::size_t freq) {
  EntityNode n;
  n.id = id;
  n.label = id;
  n.frequency = freq;
  n.score = 0.1;
  return n;
}

std::vector<Edge> as_sorted(std::vector<Edge> e) {
  std::sort(e.begin(), e.end(), edge_less);
  return e;
}

TEST(BuildNodes, MergesAcrossDocumentsAndDomains) {
  std::map<std::string, std::vector<Keyword>> dk = {
      {"d1", {kw("magnetic fields", "magnetic field", 0.3)}},
      {"d2", {kw("Magnetic Fields", "magnetic field", 0.1)}},
      {"d3", {kw("magnetic fields", "magnetic field", 0.2)}}};
  const std::map<std::string, Domain> dom = {
      {"d1", Domain::Heliophysics}, {"d2", Domain::Planetary}, {"d3", Domain::Heliophysics}};
  const auto nodes = build_nodes(dk, dom);
  ASSERT_EQ(nodes.size(), 1u);
  const auto& n = nodes.at("magnetic field");
  EXPECT_EQ(n.frequency, 3u);
  EXPECT_EQ(n.domains.size(), 2u);
  EXPECT_EQ(n.label, "magnetic fields");
  EXPECT_EQ(n.score, 0.1);
}

TEST(BuildNodes, LabelTiesGoToSmallestSurface) {
  std::map<std::string, std::vector<Keyword>> dk = {
      {"d1", {kw("Sun", "sun", 0.3)}}, {"d2", {kw("sun", "sun", 0.3)}}};
  EXPECT_EQ(build_nodes(dk, {}).at("sun").label, "Sun");
  EXPECT_TRUE(build_nodes({}, {}).empty());
}

TEST(Cooccurrence, MinimalCases) {
  const std::set<std::string> ids = {"x", "y", "z"};
  const std::vector<NormalizedDocument> one = {make_doc("d", {"x and y"})};
  const auto e = cooccurrence_edges(one, ids);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (Edge{"x", "y", EdgeKind::Cooccurrence, 1.0}));

  const std::vector<NormalizedDocument> lonely = {make_doc("d", {"x alone here"})};
  EXPECT_TRUE(cooccurrence_edges(lonely, ids).empty());
}

TEST(Cooccurrence, CountsSentencesNotOccurrences) {
  const std::set<std::string> ids = {"x", "y", "z"};
  const std::vector<NormalizedDocument> docs = {
      make_doc("d1", {"x y x y", "x z"}), make_doc("d2", {"y then x"})};
  const auto e = cooccurrence_edges(docs, ids);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], (Edge{"x", "y", EdgeKind::Cooccurrence, 2.0}));
  EXPECT_EQ(e[1], (Edge{"x", "z", EdgeKind::Cooccurrence, 1.0}));
}

TEST(Cooccurrence, MultiTokenIdsMatchContiguousRuns) {
  const std::set<std::string> ids = {"solar material", "magnetic field", "solar"};
  const std::vector<NormalizedDocument> docs = {
      make_doc("d", {"cool solar material in magnetic field", "solar |material magnetic field"})};
  const auto e = as_sorted(cooccurrence_edges(docs, ids));
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], (Edge{"magnetic field", "solar", EdgeKind::Cooccurrence, 2.0}));
  EXPECT_EQ(e[1], (Edge{"magnetic field", "solar material", EdgeKind::Cooccurrence, 1.0}));
  EXPECT_EQ(e[2], (Edge{"solar", "solar material", EdgeKind::Cooccurrence, 1.0}));
}

TEST(CooccurrenceProperty, MatchesBruteForceOracle) {
  std::mt19937_64 rng(31);
  std::vector<std::string> vocab;
  for (int i = 0; i < 14; ++i) vocab.push_back("w" + std::to_string(i));
  for (int iter = 0; iter < 60; ++iter) {
    const auto docs = testing::random_corpus(rng, vocab, 20, 8, 12, 0.15);
    std::set<std::string> ids;
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    for (int i = 0; i < 10; ++i) ids.insert(vocab[pick(rng)]);
    for (int i = 0; i < 4; ++i) ids.insert(vocab[pick(rng)] + " " + vocab[pick(rng)]);
    const auto want = testing::cooccurrence_oracle(docs, ids);
    for (unsigned workers : {1u, 3u}) {
      const auto got = cooccurrence_edges(docs, ids, workers);
      ASSERT_EQ(got.size(), want.size());
      for (const auto& e : got) {
        EXPECT_EQ(e.weight, static_cast<double>(want.at({e.a, e.b})));
      }
    }
  }
}

// Three single-token nodes with pairwise cosines 0.9 (a,b), 0.5 (a,c), 0.2 (b,c).
VectorSpace three_node_space() {
  const double b2 = std::sqrt(1.0 - 0.81);
  const double c2 = (0.2 - 0.45) / b2;
  const double c3 = std::sqrt(1.0 - 0.25 - c2 * c2);
  return VectorSpace::external({"a", "b", "c"}, 3, {1, 0, 0, 0.9, b2, 0, 0.5, c2, c3});
}

TEST(Similarity, ThreeNodeFixture) {
  const NodeMap nodes = {{"a", node("a", 1)}, {"b", node("b", 1)}, {"c", node("c", 1)}};
  const auto e = similarity_edges(nodes, three_node_space(), 0.6);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].a, "a");
  EXPECT_EQ(e[0].b, "b");
  EXPECT_NEAR(e[0].weight, 0.9, 1e-12);
  EXPECT_EQ(similarity_edges(nodes, three_node_space(), 0.45).size(), 2u);
}

TEST(Similarity, IdenticalEmbeddingsAndBoundaries) {
  const auto space = VectorSpace::external({"p", "q", "r"}, 2, {1, 1, 2, 2, 1, 0});
  const NodeMap nodes = {{"p", node("p", 1)}, {"q", node("q", 1)}, {"r", node("r", 1)}};
  const auto e = similarity_edges(nodes, space, 1.0);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].weight, 1.0);
  const NodeMap distinct = {{"p", node("p", 1)}, {"r", node("r", 1)}};
  EXPECT_TRUE(similarity_edges(distinct, space, 1.0).empty());
  EXPECT_THROW(similarity_edges(nodes, space, 0.0), ParameterError);
  EXPECT_THROW(similarity_edges(nodes, space, 1.5), ParameterError);
}

KnowledgeGraph freq_fixture() {
  KnowledgeGraph g;
  for (auto [id, f] : {std::pair{"one", 1}, {"three", 3}, {"five", 5}}) {
    g.nodes.emplace(id, node(id, static_cast<std::size_t>(f)));
  }
  g.edges = as_sorted({{"one", "three", EdgeKind::Cooccurrence, 4},
                       {"five", "three", EdgeKind::Cooccurrence, 1},
                       {"five", "three", EdgeKind::Similarity, 0.8},
                       {"five", "one", EdgeKind::Similarity, 0.9}});
  check_invariants(g);
  return g;
}

TEST(Prune, Examples) {
  const auto g = freq_fixture();
  const auto same = prune(g, 0, 0.0);
  EXPECT_EQ(same.nodes, g.nodes);
  EXPECT_EQ(same.edges, g.edges);
  EXPECT_EQ(same.meta.at("prune.min_node_freq"), "0");

  EXPECT_TRUE(prune(g, 6, 0.0).nodes.empty());
  EXPECT_TRUE(prune(g, 6, 0.0).edges.empty());

  const auto two = prune(g, 2, 0.0);
  EXPECT_EQ(two.nodes.size(), 2u);
  ASSERT_EQ(two.edges.size(), 2u);
  for (const auto& e : two.edges) {
    EXPECT_EQ(e.a, "five");
    EXPECT_EQ(e.b, "three");
  }
  const auto weighty = prune(g, 2, 0.9);
  ASSERT_EQ(weighty.edges.size(), 1u);
  EXPECT_EQ(weighty.edges[0].weight, 1.0);
}

TEST(PruneProperty, IdempotentAndMonotone) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = testing::random_graph(rng, 40);
    std::uniform_int_distribution<std::size_t> f(0, 600);
    std::uniform_real_distribution<double> w(0.0, 3.0);
    const std::size_t nf = f(rng);
    const double ew = w(rng);
    const auto p = prune(g, nf, ew);
    check_invariants(p);
    EXPECT_EQ(prune(p, nf, ew), p);
    const auto stricter = prune(g, nf + 50, ew + 0.5);
    EXPECT_LE(stricter.nodes.size(), p.nodes.size());
    EXPECT_LE(stricter.edges.size(), p.edges.size());
    for (const auto& [id, n] : stricter.nodes) EXPECT_TRUE(p.nodes.contains(id));
    for (const auto& e : stricter.edges) {
      EXPECT_TRUE(std::binary_search(p.edges.begin(), p.edges.end(), e, edge_less));
    }
  }
}

TEST(Stats, EmptyGraph) {
  const auto s = stats(KnowledgeGraph{});
  EXPECT_EQ(s.node_count, 0u);
  EXPECT_EQ(s.cooccurrence_edges, 0u);
  EXPECT_EQ(s.similarity_edges, 0u);
  EXPECT_EQ(s.components, 0u);
  EXPECT_EQ(s.degree, DegreeSummary{});
  EXPECT_TRUE(s.top_edges.empty());
}

TEST(Stats, DisjointEdgesAndFiveNodeFixture) {
  KnowledgeGraph g;
  for (const char* id : {"a", "b", "c", "d"}) g.nodes.emplace(id, node(id, 1));
  g.edges = {{"a", "b", EdgeKind::Cooccurrence, 1}, {"c", "d", EdgeKind::Cooccurrence, 1}};
  EXPECT_EQ(stats(g).components, 2u);

  g.nodes.emplace("e", node("e", 1));
  g.edges = as_sorted({{"a", "b", EdgeKind::Cooccurrence, 5},
                       {"a", "c", EdgeKind::Cooccurrence, 2},
                       {"a", "d", EdgeKind::Cooccurrence, 7},
                       {"d", "e", EdgeKind::Cooccurrence, 1},
                       {"b", "c", EdgeKind::Similarity, 0.75}});
  const auto s = stats(g, 2);
  // Degrees a3 b2 c2 d2 e1.
  EXPECT_EQ(s.degree.min, 1u);
  EXPECT_EQ(s.degree.median, 2.0);
  EXPECT_EQ(s.degree.max, 3u);
  EXPECT_EQ(s.components, 1u);
  EXPECT_EQ(s.cooccurrence_edges, 4u);
  EXPECT_EQ(s.similarity_edges, 1u);
  ASSERT_EQ(s.top_edges.size(), 3u);
  EXPECT_EQ(s.top_edges[0].weight, 7.0);
  EXPECT_EQ(s.top_edges[1].weight, 5.0);
  EXPECT_EQ(s.top_edges[2].kind, EdgeKind::Similarity);
}

TEST(Invariants, DetectBrokenGraphs) {
  KnowledgeGraph g;
  g.nodes.emplace("a", node("a", 1));
  g.nodes.emplace("b", node("b", 1));
  g.edges = {{"a", "a", EdgeKind::Cooccurrence, 1}};
  EXPECT_THROW(check_invariants(g), FormatError);
  g.edges = {{"b", "a", EdgeKind::Cooccurrence, 1}};
  EXPECT_THROW(check_invariants(g), FormatError);
  g.edges = {{"a", "zz", EdgeKind::Cooccurrence, 1}};
  EXPECT_THROW(check_invariants(g), FormatError);
  g.edges = {{"a", "b", EdgeKind::Cooccurrence, 1}, {"a", "b", EdgeKind::Cooccurrence, 2}};
  EXPECT_THROW(check_invariants(g), FormatError);
  g.edges = {{"a", "b", EdgeKind::Cooccurrence, 1.5}};
  EXPECT_THROW(check_invariants(g), FormatError);
  g.edges = {{"a", "b", EdgeKind::Similarity, 1.5}};
  EXPECT_THROW(check_invariants(g), FormatError);
  g.edges = {{"a", "b", EdgeKind::Cooccurrence, 1}, {"a", "b", EdgeKind::Similarity, 0.5}};
  EXPECT_NO_THROW(check_invariants(g));
}

TEST(BuildGraph, DeterministicAcrossWorkersAndOrder) {
  std::mt19937_64 rng(51);
  std::vector<std::string> vocab;
  for (int i = 0; i < 12; ++i) vocab.push_back("t" + std::to_string(i));
  auto docs = testing::random_corpus(rng, vocab, 15, 5, 10);
  std::map<std::string, std::vector<Keyword>> dk;
  std::map<std::string, Domain> dom;
  for (const auto& d : docs) {
    for (auto& k : extract_keywords(d)) dk[d.doc_id].push_back(k);
    dom[d.doc_id] = d.doc_id.size() % 2 ? Domain::Earth : Domain::Planetary;
  }
  const auto space = build_tfidf(docs);
  BuildOptions opts;
  opts.min_sim = 0.5;
  const auto g1 = build_graph(dk, dom, docs, &space, opts);
  opts.workers = 4;
  std::reverse(docs.begin(), docs.end());
  const auto g4 = build_graph(dk, dom, docs, &space, opts);
  EXPECT_EQ(g1, g4);
  check_invariants(g1);
  EXPECT_EQ(g1.meta.at("build.similarity_edges"), "true");

  opts.similarity = false;
  const auto plain = build_graph(dk, dom, docs, nullptr, opts);
  for (const auto& e : plain.edges) EXPECT_EQ(e.kind, EdgeKind::Cooccurrence);
}

}  // namespace
}  // namespace kgraph
