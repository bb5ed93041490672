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

#include "kgraph/relevance.hpp"

#include <algorithm>
#include <sstream>

#include "kgraph/error.hpp"
#include "kgraph/parallel.hpp"

namespace kgraph {

Aggregation parse_aggregation(std::string_view name) {
  if (name == "max-max") return Aggregation::MaxMax;
  if (name == "mean-of-max") return Aggregation::MeanOfMax;
  throw ParameterError("unknown aggregation '" + std::string(name) + "'");
}

std::string_view to_string(Aggregation a) noexcept {
  return a == Aggregation::MaxMax ? "max-max" : "mean-of-max";
}

void validate(const RelevanceConfig& cfg) {
  if (cfg.top_k == 0) throw ParameterError("relevance top_k must be >= 1");
  if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0))
    throw ParameterError("relevance threshold must be in [0, 1]");
}

std::vector<ThesaurusTerm> prepare_thesaurus(std::span<const std::string> terms,
                                             const Normalizer& normalizer,
                                             const CollocationModel* model) {
  std::vector<ThesaurusTerm> out;
  out.reserve(terms.size());
  for (const auto& text : terms) {
    const auto doc = normalizer.normalize("", text);
    const auto merged = model ? apply_collocations(doc, *model) : doc;
    ThesaurusTerm term;
    term.text = text;
    for (const auto& s : merged.sentences) {
      for (const auto& t : s.tokens) {
        if (!t.is_stopword) term.norms.push_back(t.norm);
      }
    }
    out.push_back(std::move(term));
  }
  return out;
}

EmbeddedThesaurus::EmbeddedThesaurus(const VectorSpace& space,
                                     std::span<const ThesaurusTerm> terms) {
  if (terms.empty()) throw ParameterError("thesaurus must not be empty");
  vectors_.reserve(terms.size());
  for (const auto& t : terms) {
    Vec v = space.embed(t.norms);
    if (!v.is_zero()) vectors_.push_back(std::move(v));
  }
}

double EmbeddedThesaurus::best_match(const Vec& v) const {
  if (v.is_zero()) return 0.0;
  double best = 0.0;
  for (const auto& t : vectors_) {
    best = std::max(best, std::clamp(cosine(v, t), 0.0, 1.0));
    if (best >= 1.0) break;
  }
  return best;
}

double doc_relevance(std::span<const Keyword> keywords, const EmbeddedThesaurus& thesaurus,
                     const VectorSpace& space, Aggregation aggregation) {
  if (keywords.empty()) return 0.0;
  double best = 0.0;
  double sum = 0.0;
  for (const auto& kw : keywords) {
    const double s = thesaurus.best_match(space.embed(split_phrase(kw.norm)));
    best = std::max(best, s);
    sum += s;
  }
  const double score =
      aggregation == Aggregation::MaxMax ? best : sum / static_cast<double>(keywords.size());
  return std::clamp(score, 0.0, 1.0);
}

double doc_relevance(std::span<const Keyword> keywords,
                     std::span<const ThesaurusTerm> thesaurus, const VectorSpace& space,
                     Aggregation aggregation) {
  return doc_relevance(keywords, EmbeddedThesaurus(space, thesaurus), space, aggregation);
}

FilterResult filter_corpus(const Corpus& corpus, std::span<const NormalizedDocument> ndocs,
                           std::span<const ThesaurusTerm> thesaurus, const VectorSpace& space,
                           const RelevanceConfig& cfg, KeywordOptions keyword_options,
                           unsigned workers) {
  validate(cfg);
  if (ndocs.size() != corpus.size()) {
    throw ParameterError("normalized documents (" + std::to_string(ndocs.size()) +
                         ") do not match corpus size (" + std::to_string(corpus.size()) + ")");
  }
  const auto& docs = corpus.documents();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (ndocs[i].doc_id != docs[i].id) {
      throw ParameterError("normalized document " + std::to_string(i) + " is '" +
                           ndocs[i].doc_id + "', expected '" + docs[i].id + "'");
    }
  }
  keyword_options.top_k = cfg.top_k;
  const EmbeddedThesaurus embedded(space, thesaurus);

  std::vector<double> scores(docs.size(), 0.0);
  parallel_for(docs.size(), workers, [&](std::size_t i) {
    const auto keywords = extract_keywords(ndocs[i], keyword_options);
    scores[i] = doc_relevance(keywords, embedded, space, cfg.aggregation);
  });

  FilterResult result;
  result.report.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const bool kept = scores[i] >= cfg.threshold;
    result.report.push_back({docs[i].id, scores[i], kept});
    if (kept) result.kept.add(docs[i]);
  }
  return result;
}

std::string relevance_report_csv(std::span<const RelevanceRow> rows) {
  std::ostringstream out;
  out.precision(17);
  out << "doc_id,score,kept\n";
  for (const auto& r : rows) {
    std::string id = r.doc_id;
    if (id.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : id) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
      }
      id = quoted + "\"";
    }
    out << id << ',' << r.score << ',' << (r.kept ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace kgraph
