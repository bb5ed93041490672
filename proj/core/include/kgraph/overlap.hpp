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
#include <span>
#include <string>
#include <vector>

#include "kgraph/kmeans.hpp"
#include "kgraph/text.hpp"
#include "kgraph/vectors.hpp"

namespace kgraph {

/// Row i is the embedding of all of document i's token norms.
FeatureMatrix featurize(std::span<const NormalizedDocument> ndocs, const VectorSpace& space,
                        std::span<const std::string> labels = {}, unsigned workers = 1);

struct OverlapConfig {
  KMeansOptions kmeans;  // k is forced to 2
  /// Shared terms whose cross-domain context cosine is below this are
  /// reported as homonym candidates.
  double homonym_ceiling = 0.3;
  /// Both per-domain counts must reach this to be considered.
  std::size_t homonym_min_count = 3;
  std::string label_a = "a";
  std::string label_b = "b";
};

struct SharedTerm {
  std::string term;
  std::size_t count_a = 0;
  std::size_t count_b = 0;

  friend bool operator==(const SharedTerm&, const SharedTerm&) = default;
};

struct HomonymCandidate {
  std::string term;
  double context_cosine = 0.0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
};

struct OverlapReport {
  double accuracy = 0.0;  // best-map agreement of the 2-way clustering
  double purity = 0.0;
  double inertia = 0.0;
  std::size_t iterations = 0;
  std::size_t docs_a = 0;
  std::size_t docs_b = 0;
  double jaccard_vocab = 0.0;
  std::vector<SharedTerm> shared_terms;  // min(count_a, count_b) desc, then term
  std::vector<HomonymCandidate> homonym_candidates;  // cosine asc, then term
  std::vector<std::string> doc_ids;
  std::vector<std::string> labels;
  std::vector<std::size_t> assignments;
};

/// Vocabulary statistics only (no clustering).
double jaccard_vocab(std::span<const NormalizedDocument> a,
                     std::span<const NormalizedDocument> b);
std::vector<SharedTerm> shared_terms(std::span<const NormalizedDocument> a,
                                     std::span<const NormalizedDocument> b);

/// Pool both corpora, cluster with k = 2, score against the corpus of
/// origin, and compare vocabularies. Throws ParameterError when either
/// corpus is empty.
OverlapReport overlap_report(std::span<const NormalizedDocument> corpus_a,
                             std::span<const NormalizedDocument> corpus_b,
                             const VectorSpace& space, const OverlapConfig& cfg);

}  // namespace kgraph
