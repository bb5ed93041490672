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
#include <string_view>
#include <vector>

#include "kgraph/collocations.hpp"
#include "kgraph/corpus.hpp"
#include "kgraph/keywords.hpp"
#include "kgraph/text.hpp"
#include "kgraph/vectors.hpp"

namespace kgraph {

enum class Aggregation { MaxMax, MeanOfMax };

Aggregation parse_aggregation(std::string_view name);
std::string_view to_string(Aggregation a) noexcept;

struct RelevanceConfig {
  std::size_t top_k = 20;
  double threshold = 0.35;
  Aggregation aggregation = Aggregation::MeanOfMax;
};

/// Throws ParameterError when top_k == 0 or threshold is outside [0, 1].
void validate(const RelevanceConfig& cfg);

struct ThesaurusTerm {
  std::string text;
  std::vector<std::string> norms;
};

/// Normalize raw thesaurus terms the same way documents were normalized
/// (including collocation merges, when a model is given).
std::vector<ThesaurusTerm> prepare_thesaurus(std::span<const std::string> terms,
                                             const Normalizer& normalizer,
                                             const CollocationModel* model = nullptr);

/// Thesaurus terms embedded once in a given space.
class EmbeddedThesaurus {
 public:
  /// Throws ParameterError on an empty thesaurus.
  EmbeddedThesaurus(const VectorSpace& space, std::span<const ThesaurusTerm> terms);

  /// max over terms of cosine(v, term), clamped to [0, 1].
  double best_match(const Vec& v) const;

  std::size_t size() const noexcept { return vectors_.size(); }

 private:
  std::vector<Vec> vectors_;
};

/// Per-keyword best thesaurus similarity, aggregated by max or mean.
/// An empty keyword list scores 0.
double doc_relevance(std::span<const Keyword> keywords, const EmbeddedThesaurus& thesaurus,
                     const VectorSpace& space, Aggregation aggregation);

double doc_relevance(std::span<const Keyword> keywords,
                     std::span<const ThesaurusTerm> thesaurus, const VectorSpace& space,
                     Aggregation aggregation);

struct RelevanceRow {
  std::string doc_id;
  double score = 0.0;
  bool kept = false;

  friend bool operator==(const RelevanceRow&, const RelevanceRow&) = default;
};

struct FilterResult {
  Corpus kept;
  std::vector<RelevanceRow> report;  // corpus order
};

/// Score every document from its top `cfg.top_k` keywords and keep those
/// with score >= threshold. `ndocs[i]` must belong to the i-th document.
FilterResult filter_corpus(const Corpus& corpus, std::span<const NormalizedDocument> ndocs,
                           std::span<const ThesaurusTerm> thesaurus, const VectorSpace& space,
                           const RelevanceConfig& cfg, KeywordOptions keyword_options = {},
                           unsigned workers = 1);

/// `doc_id,score,kept` with a header row.
std::string relevance_report_csv(std::span<const RelevanceRow> rows);

}  // namespace kgraph
