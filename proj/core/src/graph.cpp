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

#include "kgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "kgraph/error.hpp"
#include "kgraph/parallel.hpp"

namespace kgraph {

namespace {

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string_view to_string(EdgeKind k) noexcept {
  return k == EdgeKind::Similarity ? "similarity" : "cooccurrence";
}

EdgeKind parse_edge_kind(std::string_view name) {
  if (name == "cooccurrence") return EdgeKind::Cooccurrence;
  if (name == "similarity") return EdgeKind::Similarity;
  throw FormatError("unknown edge kind '" + std::string(name) + "'");
}

bool edge_less(const Edge& x, const Edge& y) noexcept {
  return std::tie(x.a, x.b, x.kind) < std::tie(y.a, y.b, y.kind);
}

void check_invariants(const KnowledgeGraph& g) {
  for (const auto& [id, node] : g.nodes) {
    if (id != node.id) throw FormatError("node key '" + id + "' differs from its id");
    if (node.frequency < 1) throw FormatError("node '" + id + "' has frequency 0");
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const std::string where = "edge " + std::to_string(i) + " (" + e.a + ", " + e.b + ")";
    if (e.a == e.b) throw FormatError(where + ": self-loop");
    if (!(e.a < e.b)) throw FormatError(where + ": endpoints not ordered");
    if (!g.nodes.contains(e.a) || !g.nodes.contains(e.b))
      throw FormatError(where + ": unknown endpoint");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw FormatError(where + ": weight must be positive");
    if (e.kind == EdgeKind::Cooccurrence && e.weight != std::floor(e.weight))
      throw FormatError(where + ": co-occurrence weight must be an integer");
    if (e.kind == EdgeKind::Similarity && e.weight > 1.0)
      throw FormatError(where + ": similarity weight above 1");
    if (i > 0) {
      const Edge& prev = g.edges[i - 1];
      if (!edge_less(prev, e)) {
        throw FormatError(where + (edge_less(e, prev) ? ": edges out of order"
                                                      : ": duplicate (a, b, kind)"));
      }
    }
  }
}

NodeMap build_nodes(const std::map<std::string, std::vector<Keyword>>& doc_keywords,
                    const std::map<std::string, Domain>& doc_domains) {
  NodeMap nodes;
  std::map<std::string, std::map<std::string, std::size_t>> surfaces;
  for (const auto& [doc_id, keywords] : doc_keywords) {
    const auto dom = doc_domains.find(doc_id);
    for (const auto& kw : keywords) {
      auto [it, inserted] = nodes.try_emplace(kw.norm);
      EntityNode& node = it->second;
      if (inserted) {
        node.id = kw.norm;
        node.frequency = 0;
        node.score = kw.score;
      }
      ++node.frequency;
      node.score = std::min(node.score, kw.score);
      if (dom != doc_domains.end()) node.domains.insert(dom->second);
      ++surfaces[kw.norm][kw.surface];
    }
  }
  for (auto& [id, node] : nodes) {
    const auto& counts = surfaces[id];
    // std::map iterates surfaces in lexicographic order, so the first
    // maximum is the smallest surface among ties.
    std::size_t best = 0;
    for (const auto& [surface, n] : counts) {
      if (n > best) {
        best = n;
        node.label = surface;
      }
    }
  }
  return nodes;
}

std::vector<Edge> cooccurrence_edges(std::span<const NormalizedDocument> ndocs,
                                     const std::set<std::string>& node_ids, unsigned workers) {
  // Node index order equals id order, so index pairs (i < j) are canonical.
  std::vector<std::string> ids(node_ids.begin(), node_ids.end());
  std::vector<std::vector<std::string>> patterns;
  patterns.reserve(ids.size());
  std::unordered_map<std::string, std::vector<std::uint32_t>> by_first;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    patterns.push_back(split_phrase(ids[i]));
    if (patterns.back().empty()) continue;
    by_first[patterns.back().front()].push_back(static_cast<std::uint32_t>(i));
  }

  using Counts = std::unordered_map<std::uint64_t, std::uint64_t>;
  std::vector<Counts> per_doc(ndocs.size());
  parallel_for(ndocs.size(), workers, [&](std::size_t d) {
    Counts& counts = per_doc[d];
    std::vector<std::uint32_t> matched;
    for (const auto& sentence : ndocs[d].sentences) {
      const auto& toks = sentence.tokens;
      matched.clear();
      for (std::size_t p = 0; p < toks.size(); ++p) {
        auto it = by_first.find(toks[p].norm);
        if (it == by_first.end()) continue;
        for (std::uint32_t node : it->second) {
          const auto& pat = patterns[node];
          if (p + pat.size() > toks.size()) continue;
          bool ok = true;
          for (std::size_t k = 1; k < pat.size() && ok; ++k) {
            ok = !toks[p + k].follows_break && toks[p + k].norm == pat[k];
          }
          if (ok) matched.push_back(node);
        }
      }
      std::sort(matched.begin(), matched.end());
      matched.erase(std::unique(matched.begin(), matched.end()), matched.end());
      for (std::size_t i = 0; i < matched.size(); ++i) {
        for (std::size_t j = i + 1; j < matched.size(); ++j) {
          ++counts[(static_cast<std::uint64_t>(matched[i]) << 32) | matched[j]];
        }
      }
    }
  });

  std::map<std::uint64_t, std::uint64_t> total;
  for (const auto& counts : per_doc) {
    for (const auto& [key, n] : counts) total[key] += n;
  }
  std::vector<Edge> edges;
  edges.reserve(total.size());
  for (const auto& [key, n] : total) {
    edges.push_back({ids[key >> 32], ids[key & 0xFFFFFFFFu], EdgeKind::Cooccurrence,
                     static_cast<double>(n)});
  }
  return edges;
}

std::vector<Edge> similarity_edges(const NodeMap& nodes, const VectorSpace& space,
                                   double min_sim, unsigned workers) {
  if (!(min_sim > 0.0 && min_sim <= 1.0)) throw ParameterError("min_sim must be in (0, 1]");
  std::vector<const EntityNode*> list;
  std::vector<Vec> vecs;
  list.reserve(nodes.size());
  vecs.reserve(nodes.size());
  for (const auto& [id, node] : nodes) {
    list.push_back(&node);
    vecs.push_back(space.embed(split_phrase(id)));
  }
  std::vector<std::vector<Edge>> rows(list.size());
  parallel_for(list.size(), workers, [&](std::size_t i) {
    if (vecs[i].is_zero()) return;
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (vecs[j].is_zero()) continue;
      const double c = cosine(vecs[i], vecs[j]);
      if (c >= min_sim) {
        rows[i].push_back({list[i]->id, list[j]->id, EdgeKind::Similarity, std::min(c, 1.0)});
      }
    }
  });
  std::vector<Edge> edges;
  for (auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return edges;
}

KnowledgeGraph build_graph(const std::map<std::string, std::vector<Keyword>>& doc_keywords,
                           const std::map<std::string, Domain>& doc_domains,
                           std::span<const NormalizedDocument> ndocs,
                           const VectorSpace* space, const BuildOptions& options) {
  KnowledgeGraph g;
  g.nodes = build_nodes(doc_keywords, doc_domains);
  std::set<std::string> ids;
  for (const auto& [id, node] : g.nodes) ids.insert(id);
  g.edges = cooccurrence_edges(ndocs, ids, options.workers);
  if (options.similarity && space) {
    auto sim = similarity_edges(g.nodes, *space, options.min_sim, options.workers);
    g.edges.insert(g.edges.end(), sim.begin(), sim.end());
  }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  g.meta["build.documents"] = std::to_string(ndocs.size());
  g.meta["build.similarity_edges"] = options.similarity && space ? "true" : "false";
  if (options.similarity && space) {
    g.meta["build.min_sim"] = format_number(options.min_sim);
    g.meta["build.vectors"] = std::string(to_string(space->kind()));
  }
  return g;
}

KnowledgeGraph prune(const KnowledgeGraph& g, std::size_t min_node_freq, double min_edge_weight) {
  if (!(min_edge_weight >= 0.0)) throw ParameterError("min_edge_weight must be >= 0");
  KnowledgeGraph out;
  out.meta = g.meta;
  for (const auto& [id, node] : g.nodes) {
    if (node.frequency >= min_node_freq) out.nodes.emplace(id, node);
  }
  for (const auto& e : g.edges) {
    if (e.weight < min_edge_weight) continue;
    if (!out.nodes.contains(e.a) || !out.nodes.contains(e.b)) continue;
    out.edges.push_back(e);
  }
  out.meta["prune.min_node_freq"] = std::to_string(min_node_freq);
  out.meta["prune.min_edge_weight"] = format_number(min_edge_weight);
  return out;
}

GraphStats stats(const KnowledgeGraph& g, std::size_t top_n) {
  GraphStats st;
  st.node_count = g.nodes.size();
  std::unordered_map<std::string, std::size_t> index;
  std::size_t i = 0;
  for (const auto& [id, node] : g.nodes) index.emplace(id, i++);
  std::vector<std::size_t> degree(st.node_count, 0);
  UnionFind uf(st.node_count);
  for (const auto& e : g.edges) {
    (e.kind == EdgeKind::Cooccurrence ? st.cooccurrence_edges : st.similarity_edges)++;
    const auto a = index.at(e.a);
    const auto b = index.at(e.b);
    ++degree[a];
    ++degree[b];
    uf.unite(a, b);
  }
  if (!degree.empty()) {
    std::vector<std::size_t> sorted = degree;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    st.degree.min = sorted.front();
    st.degree.max = sorted.back();
    st.degree.median = n % 2 == 1 ? static_cast<double>(sorted[n / 2])
                                  : (static_cast<double>(sorted[n / 2 - 1]) +
                                     static_cast<double>(sorted[n / 2])) / 2.0;
  }
  for (std::size_t v = 0; v < st.node_count; ++v) {
    if (uf.find(v) == v) ++st.components;
  }
  for (EdgeKind kind : {EdgeKind::Cooccurrence, EdgeKind::Similarity}) {
    std::vector<Edge> of_kind;
    for (const auto& e : g.edges) {
      if (e.kind == kind) of_kind.push_back(e);
    }
    std::stable_sort(of_kind.begin(), of_kind.end(),
                     [](const Edge& x, const Edge& y) { return x.weight > y.weight; });
    if (of_kind.size() > top_n) of_kind.resize(top_n);
    st.top_edges.insert(st.top_edges.end(), of_kind.begin(), of_kind.end());
  }
  return st;
}

}  // namespace kgraph
