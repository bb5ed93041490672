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

// Reference implementations written independently of the library, used as
// test oracles, plus random input generators.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/text.hpp"

namespace kgraph::testing {

/// Full-matrix Wagner-Fischer edit distance.
std::size_t edit_distance_oracle(const std::string& a, const std::string& b);

/// 1 - d / max(|a|, |b|), 1 for two empty strings.
double similarity_oracle(const std::string& a, const std::string& b);

using PairCounts = std::map<std::pair<std::string, std::string>, std::size_t>;

/// Enumerates, per sentence, which node ids occur (as contiguous norm runs
/// with no punctuation break inside), then counts every unordered pair.
PairCounts cooccurrence_oracle(const std::vector<NormalizedDocument>& docs,
                               const std::set<std::string>& node_ids);

/// Best agreement over every injective map from clusters to labels, by
/// trying all permutations. Suitable for k <= 7.
double best_map_oracle(const std::vector<std::size_t>& assignments,
                       const std::vector<std::size_t>& labels);

/// Builds a token directly; `stop` marks it as a stopword.
Token make_token(const std::string& norm, std::size_t offset, bool stop = false,
                 bool follows_break = false);

/// A document of sentences given as space-separated norms. A norm
/// prefixed with '|' follows a punctuation break.
NormalizedDocument make_doc(const std::string& id, const std::vector<std::string>& sentences);

/// Random corpus of pre-normalized documents over `vocab`.
std::vector<NormalizedDocument> random_corpus(std::mt19937_64& rng,
                                              const std::vector<std::string>& vocab,
                                              std::size_t max_docs, std::size_t max_sentences,
                                              std::size_t max_tokens, double break_rate = 0.0);

/// Random lowercase-ish word, length 1..max_len, from a small alphabet so
/// that collisions and shared substrings are common.
std::string random_word(std::mt19937_64& rng, std::size_t max_len, const std::string& alphabet);

/// Random valid graph with up to `max_nodes` nodes, mixed edge kinds,
/// awkward labels (XML/JSON metacharacters, UTF-8) and random meta.
KnowledgeGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes);

/// Dense dataset of Gaussian blobs, row-major, with per-row blob index.
struct Blobs {
  std::vector<double> data;
  std::vector<std::size_t> membership;
  std::size_t rows = 0;
  std::size_t dim = 0;
};
Blobs make_blobs(std::mt19937_64& rng, std::size_t per_blob, std::size_t blobs, std::size_t dim,
                 double separation, double spread);

/// Nearest centroid by direct enumeration; returns squared distance too.
std::pair<std::size_t, double> nearest_oracle(const std::vector<double>& centroids,
                                              std::size_t k, const double* point,
                                              std::size_t dim);

}  // namespace kgraph::testing
