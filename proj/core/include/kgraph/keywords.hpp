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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/text.hpp"

namespace kgraph {

struct NeighborCounts {
  std::size_t distinct = 0;
  std::size_t total = 0;

  friend bool operator==(const NeighborCounts&, const NeighborCounts&) = default;
};

/// Per-term statistics over one document. `sentence_indices` has one entry
/// per occurrence (sorted, with repeats); `sentence_frequency` counts the
/// distinct sentences.
struct TermStats {
  std::string norm;
  std::size_t tf = 0;
  std::size_t tf_upper_initial = 0;
  std::size_t tf_all_caps = 0;
  std::vector<std::size_t> sentence_indices;
  NeighborCounts left_neighbors;
  NeighborCounts right_neighbors;
  std::size_t sentence_frequency = 0;
};

struct Keyword {
  std::string surface;
  std::string norm;       // member token norms joined by ' '
  double score = 0.0;     // lower is more relevant
  std::size_t term_count = 1;

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

struct KeywordOptions {
  std::size_t window = 1;
  std::size_t max_ngram = 3;
  std::size_t top_k = 20;
  double dedup_threshold = 0.9;
};

/// Statistics for every distinct non-stopword norm. Neighbors are counted
/// within +/- `window` tokens of each occurrence, inside its sentence, with
/// stopwords included as neighbors. Sentence-initial tokens never count
/// toward `tf_upper_initial`. Throws ParameterError if window == 0.
std::map<std::string, TermStats> term_features(const NormalizedDocument& ndoc,
                                               std::size_t window = 1);

/// Single-term relevance weights (lower is better):
///
///   W_case = max(tf_upper_initial, tf_all_caps) / (1 + ln tf)
///   W_pos  = ln(ln(3 + median(sentence_indices)))
///   W_norm = tf / (mean_tf + stdev_tf)
///   W_rel  = 1 + (DL/TL + DR/TR) * tf / max_tf
///   W_sent = sentence_frequency / n_sentences
///   S(t)   = W_rel * W_pos / (W_case + W_norm / W_rel + W_sent / W_rel)
///
/// mean/stdev/max are over all entries of `stats`; stdev is the population
/// deviation. A neighbor ratio is 0 when its total is 0.
std::map<std::string, double> score_terms(const std::map<std::string, TermStats>& stats,
                                          std::size_t n_sentences);

/// Candidates are contiguous runs of 1..max_ngram non-stopword tokens inside
/// one sentence and one punctuation-delimited phrase. A candidate of terms
/// t1..tn occurring TF times scores prod S(ti) / (TF * (1 + sum S(ti))).
/// Sorted ascending by score, ties by norm, then deduplicated and cut to
/// top_k. Throws ParameterError on out-of-range options.
std::vector<Keyword> extract_keywords(const NormalizedDocument& ndoc,
                                      const KeywordOptions& options = {});

/// 1 - levenshtein(a, b) / max(|a|, |b|) over bytes; 1 when both are empty.
double levenshtein_similarity(std::string_view a, std::string_view b);

std::size_t levenshtein_distance(std::string_view a, std::string_view b);

/// Greedy scan in input order: keep a keyword iff its norm's similarity to
/// every kept norm is below `threshold`. Stops after `limit` keeps.
std::vector<Keyword> dedupe_keywords(std::span<const Keyword> keywords, double threshold,
                                     std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace kgraph
