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

#include <filesystem>
#include <fstream>

#include "kgraph/config.hpp"
#include "kgraph/error.hpp"

namespace kgraph {
namespace {

std::string field_of(const std::string& json) {
  try {
    parse_config(json);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

TEST(Config, EmptyObjectGivesDefaults) {
  const auto cfg = parse_config("{}");
  EXPECT_EQ(cfg.keyword.top_k, 20u);
  EXPECT_EQ(cfg.keyword.window, 1u);
  EXPECT_EQ(cfg.keyword.max_ngram, 3u);
  EXPECT_EQ(cfg.keyword.dedup_threshold, 0.9);
  EXPECT_EQ(cfg.relevance.threshold, 0.35);
  EXPECT_EQ(cfg.graph.min_sim, 0.7);
  EXPECT_EQ(cfg.cluster.k, 2u);
  EXPECT_EQ(cfg.cluster.seed, 42u);
  EXPECT_EQ(cfg.collocation.min_count, 5u);
  EXPECT_EQ(cfg.vectors.kind, SpaceKind::TfidfCorpus);
  EXPECT_FALSE(cfg.stopword_path.has_value());
}

TEST(Config, OverridesOneKey) {
  const auto cfg = parse_config(R"({"keyword":{"top_k":20}})");
  EXPECT_EQ(cfg.keyword.top_k, 20u);
  const auto other = parse_config(R"({"keyword":{"top_k":7},"relevance":{"aggregation":"max-max"}})");
  EXPECT_EQ(other.keyword.top_k, 7u);
  EXPECT_EQ(other.relevance.aggregation, Aggregation::MaxMax);
}

TEST(Config, NamesTheOffendingField) {
  EXPECT_EQ(field_of(R"({"cluster":{"k":0}})"), "cluster.k");
  EXPECT_EQ(field_of(R"({"cluster":{"bogus":1}})"), "cluster.bogus");
  EXPECT_EQ(field_of(R"({"nonsense":true})"), "nonsense");
  EXPECT_EQ(field_of(R"({"keyword":{"top_k":"many"}})"), "keyword.top_k");
  EXPECT_EQ(field_of(R"({"keyword":{"top_k":-3}})"), "keyword.top_k");
  EXPECT_EQ(field_of(R"({"keyword":{"max_ngram":4}})"), "keyword.max_ngram");
  EXPECT_EQ(field_of(R"({"keyword":{"dedup_threshold":0}})"), "keyword.dedup_threshold");
  EXPECT_EQ(field_of(R"({"relevance":{"threshold":1.5}})"), "relevance.threshold");
  EXPECT_EQ(field_of(R"({"relevance":{"aggregation":"median"}})"), "relevance.aggregation");
  EXPECT_EQ(field_of(R"({"graph":{"min_sim":0}})"), "graph.min_sim");
  EXPECT_EQ(field_of(R"({"collocation":{"min_count":1}})"), "collocation.min_count");
  EXPECT_EQ(field_of(R"({"vectors":{"kind":"external"}})"), "vectors.path");
  EXPECT_EQ(field_of(R"({"stemmer":"snowball"})"), "stemmer");
  EXPECT_EQ(field_of("{not json"), "<root>");
  EXPECT_EQ(field_of("[]"), "<root>");
  EXPECT_EQ(field_of(R"({"vectors":{"kind":"external","path":"v.txt"}})"), "<accepted>");
}

TEST(Config, SerializationRoundTrips) {
  auto cfg = parse_config(R"({"stopword_path":"s.txt","keyword":{"top_k":9,"window":2},
    "graph":{"similarity_edges":false,"min_edge_weight":1.5},"cluster":{"seed":7,"tol":0}})");
  EXPECT_EQ(cfg.keyword.window, 2u);
  EXPECT_FALSE(cfg.graph.similarity_edges);
  EXPECT_EQ(cfg.cluster.tol, 0.0);
  const auto again = parse_config(config_to_json(cfg));
  EXPECT_EQ(config_to_json(again), config_to_json(cfg));
  EXPECT_EQ(again.stopword_path, cfg.stopword_path);
}

TEST(Config, LoadFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "kgraph_config_test.json";
  {
    std::ofstream(path) << R"({"cluster":{"max_iter":12}})";
  }
  EXPECT_EQ(load_config(path).cluster.max_iter, 12u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path), IoError);
}

TEST(Config, ValidateCatchesOverrides) {
  PipelineConfig cfg;
  EXPECT_NO_THROW(validate(cfg));
  cfg.keyword.top_k = 0;
  EXPECT_THROW(validate(cfg), ConfigError);
}

}  // namespace
}  // namespace kgraph
