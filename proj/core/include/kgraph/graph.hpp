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
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kgraph/corpus.hpp"
#include "kgraph/keywords.hpp"
#include "kgraph/text.hpp"
#include "kgraph/vectors.hpp"

namespace kgraph {

struct EntityNode {
  std::string id;  // keyword norm
  std::string label;
  std::size_t frequency = 1;
  std::set<Domain> domains;
  double score = 0.0;  // best (lowest) keyword score seen

  friend bool operator==(const EntityNode&, const EntityNode&) = default;
};

enum class EdgeKind { Cooccurrence, Similarity };

std::string_view to_string(EdgeKind k) noexcept;
EdgeKind parse_edge_kind(std::string_view name);

/// Undirected edge stored with a < b.
struct Edge {
  std::string a;
  std::string b;
  EdgeKind kind = EdgeKind::Cooccurrence;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Canonical edge order: (a, b, kind).
bool edge_less(const Edge& x, const Edge& y) noexcept;

using NodeMap = std::map<std::string, EntityNode>;

struct KnowledgeGraph {
  NodeMap nodes;
  std::vector<Edge> edges;  // canonical order
  std::map<std::string, std::string> meta;

  friend bool operator==(const KnowledgeGraph&, const KnowledgeGraph&) = default;
};

/// Throws FormatError describing the first broken invariant: self-loop,
/// unordered endpoints, unknown endpoint, duplicate (a, b, kind), or a
/// weight outside the kind's range.
void check_invariants(const KnowledgeGraph& g);

/// One node per distinct keyword norm. Frequency counts its appearances in
/// the keyword lists, label is the most common surface (ties: smallest),
/// score the minimum, domains the union of the documents' domains.
NodeMap build_nodes(const std::map<std::string, std::vector<Keyword>>& doc_keywords,
                    const std::map<std::string, Domain>& doc_domains);

/// Per-sentence presence counts: each unordered pair of distinct node ids
/// matched in a sentence adds 1. Multi-token ids (space-separated norms)
/// match contiguous token runs that do not cross a punctuation break.
std::vector<Edge> cooccurrence_edges(std::span<const NormalizedDocument> ndocs,
                                     const std::set<std::string>& node_ids,
                                     unsigned workers = 1);

/// Exact all-pairs cosine between node embeddings; pairs with
/// cosine >= min_sim become edges. Throws ParameterError unless
/// 0 < min_sim <= 1.
std::vector<Edge> similarity_edges(const NodeMap& nodes, const VectorSpace& space,
                                   double min_sim, unsigned workers = 1);

struct BuildOptions {
  double min_sim = 0.7;
  bool similarity = true;
  unsigned workers = 1;
};

/// Nodes, co-occurrence edges and (optionally) similarity edges in one
/// graph. `meta` is seeded with the build options.
KnowledgeGraph build_graph(const std::map<std::string, std::vector<Keyword>>& doc_keywords,
                           const std::map<std::string, Domain>& doc_domains,
                           std::span<const NormalizedDocument> ndocs,
                           const VectorSpace* space, const BuildOptions& options);

/// Drop nodes with frequency < min_node_freq, then edges with
/// weight < min_edge_weight or a dropped endpoint.
KnowledgeGraph prune(const KnowledgeGraph& g, std::size_t min_node_freq,
                     double min_edge_weight);

struct DegreeSummary {
  std::size_t min = 0;
  double median = 0.0;
  std::size_t max = 0;

  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t cooccurrence_edges = 0;
  std::size_t similarity_edges = 0;
  DegreeSummary degree;
  std::size_t components = 0;
  std::vector<Edge> top_edges;  // heaviest per kind, weight desc
};

GraphStats stats(const KnowledgeGraph& g, std::size_t top_n = 10);

}  // namespace kgraph
