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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kgraph/keywords.hpp"
#include "kgraph/kmeans.hpp"
#include "kgraph/relevance.hpp"
#include "kgraph/text.hpp"
#include "kgraph/vectors.hpp"

namespace kgraph {

struct CollocationConfig {
  bool enabled = true;
  std::size_t min_count = 5;
  double min_pmi = 3.0;
};

struct GraphConfig {
  double min_sim = 0.7;
  bool similarity_edges = true;
  std::size_t min_node_freq = 0;
  double min_edge_weight = 0.0;
};

struct ClusterConfig {
  std::size_t k = 2;
  std::uint64_t seed = 42;
  std::size_t max_iter = 300;
  double tol = 1e-4;
  double homonym_ceiling = 0.3;
  std::size_t homonym_min_count = 3;
};

struct VectorsConfig {
  SpaceKind kind = SpaceKind::TfidfCorpus;
  std::optional<std::string> path;
};

struct PipelineConfig {
  std::optional<std::string> stopword_path;
  StemmerKind stemmer = StemmerKind::SuffixStripper;
  CollocationConfig collocation;
  KeywordOptions keyword;
  RelevanceConfig relevance;
  GraphConfig graph;
  ClusterConfig cluster;
  VectorsConfig vectors;
};

/// Parse a JSON object; absent keys keep their defaults. Throws ConfigError
/// naming the dotted key on an unknown key, a wrong type, or a value out of
/// range.
PipelineConfig parse_config(std::string_view json_text);

/// Throws IoError when unreadable, ConfigError otherwise.
PipelineConfig load_config(const std::filesystem::path& path);

/// Range checks shared by parse_config and command-line overrides.
void validate(const PipelineConfig& cfg);

std::string config_to_json(const PipelineConfig& cfg);

}  // namespace kgraph
