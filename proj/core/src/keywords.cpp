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

#include "kgraph/keywords.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

double median_of_sorted(const std::vector<std::size_t>& v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

double ratio(const NeighborCounts& c) {
  return c.total == 0 ? 0.0 : static_cast<double>(c.distinct) / static_cast<double>(c.total);
}

struct Candidate {
  std::string surface;  // first occurrence
  std::vector<std::string> terms;
  std::size_t tf = 0;
};

}  // namespace

std::map<std::string, TermStats> term_features(const NormalizedDocument& ndoc,
                                               std::size_t window) {
  if (window == 0) throw ParameterError("keyword window must be >= 1");
  std::map<std::string, TermStats> stats;
  std::unordered_map<std::string, std::set<std::string>> left_seen;
  std::unordered_map<std::string, std::set<std::string>> right_seen;

  for (const auto& sentence : ndoc.sentences) {
    const auto& toks = sentence.tokens;
    for (std::size_t p = 0; p < toks.size(); ++p) {
      const Token& tok = toks[p];
      if (tok.is_stopword) continue;
      TermStats& st = stats[tok.norm];
      st.norm = tok.norm;
      ++st.tf;
      if (tok.case_class == CaseClass::AllUpper) {
        ++st.tf_all_caps;
      } else if (tok.case_class == CaseClass::InitialUpper && p != 0) {
        ++st.tf_upper_initial;
      }
      // Sentences are visited in index order, so the list stays sorted.
      if (st.sentence_indices.empty() || st.sentence_indices.back() != sentence.index) {
        ++st.sentence_frequency;
      }
      st.sentence_indices.push_back(sentence.index);

      auto& left = left_seen[tok.norm];
      for (std::size_t q = p >= window ? p - window : 0; q < p; ++q) {
        left.insert(toks[q].norm);
        ++st.left_neighbors.total;
      }
      auto& right = right_seen[tok.norm];
      for (std::size_t q = p + 1; q < toks.size() && q <= p + window; ++q) {
        right.insert(toks[q].norm);
        ++st.right_neighbors.total;
      }
    }
  }
  for (auto& [norm, st] : stats) {
    st.left_neighbors.distinct = left_seen[norm].size();
    st.right_neighbors.distinct = right_seen[norm].size();
  }
  return stats;
}

std::map<std::string, double> score_terms(const std::map<std::string, TermStats>& stats,
                                          std::size_t n_sentences) {
  std::map<std::string, double> scores;
  if (stats.empty()) return scores;

  double sum = 0.0;
  std::size_t max_tf = 0;
  for (const auto& [norm, st] : stats) {
    sum += static_cast<double>(st.tf);
    max_tf = std::max(max_tf, st.tf);
  }
  const double n = static_cast<double>(stats.size());
  const double mean = sum / n;
  double var = 0.0;
  for (const auto& [norm, st] : stats) {
    const double d = static_cast<double>(st.tf) - mean;
    var += d * d;
  }
  const double stdev = std::sqrt(var / n);
  const double sentences = static_cast<double>(std::max<std::size_t>(n_sentences, 1));

  for (const auto& [norm, st] : stats) {
    const double tf = static_cast<double>(st.tf);
    const double w_case = static_cast<double>(std::max(st.tf_upper_initial, st.tf_all_caps)) /
                          (1.0 + std::log(tf));
    const double w_pos = std::log(std::log(3.0 + median_of_sorted(st.sentence_indices)));
    const double w_norm = tf / (mean + stdev);
    const double w_rel = 1.0 + (ratio(st.left_neighbors) + ratio(st.right_neighbors)) * tf /
                                   static_cast<double>(max_tf);
    const double w_sent = static_cast<double>(st.sentence_frequency) / sentences;
    scores[norm] = (w_rel * w_pos) / (w_case + w_norm / w_rel + w_sent / w_rel);
  }
  return scores;
}

std::vector<Keyword> extract_keywords(const NormalizedDocument& ndoc,
                                      const KeywordOptions& options) {
  if (options.max_ngram < 1 || options.max_ngram > 3)
    throw ParameterError("max_ngram must be in [1, 3]");
  if (options.top_k < 1) throw ParameterError("top_k must be >= 1");
  if (!(options.dedup_threshold > 0.0 && options.dedup_threshold <= 1.0))
    throw ParameterError("dedup_threshold must be in (0, 1]");

  const auto stats = term_features(ndoc, options.window);
  if (stats.empty()) return {};
  const auto term_scores = score_terms(stats, ndoc.sentences.size());

  std::unordered_map<std::string, Candidate> candidates;
  for (const auto& sentence : ndoc.sentences) {
    const auto& toks = sentence.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].is_stopword) continue;
      std::string key;
      std::string surface;
      for (std::size_t n = 1; n <= options.max_ngram && i + n <= toks.size(); ++n) {
        const Token& t = toks[i + n - 1];
        if (t.is_stopword || (n > 1 && t.follows_break)) break;
        if (n > 1) {
          key.push_back(' ');
          surface.push_back(' ');
        }
        key += t.norm;
        surface += t.surface;
        auto [it, inserted] = candidates.try_emplace(key);
        Candidate& c = it->second;
        if (inserted) {
          c.surface = surface;
          for (std::size_t k = 0; k < n; ++k) c.terms.push_back(toks[i + k].norm);
        }
        ++c.tf;
      }
    }
  }

  std::vector<Keyword> ranked;
  ranked.reserve(candidates.size());
  for (auto& [norm, c] : candidates) {
    double product = 1.0;
    double sum = 0.0;
    for (const auto& term : c.terms) {
      const double s = term_scores.at(term);
      product *= s;
      sum += s;
    }
    Keyword kw;
    kw.norm = norm;
    kw.surface = std::move(c.surface);
    kw.score = product / (static_cast<double>(c.tf) * (1.0 + sum));
    kw.term_count = c.terms.size();
    ranked.push_back(std::move(kw));
  }
  std::sort(ranked.begin(), ranked.end(), [](const Keyword& a, const Keyword& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.norm < b.norm;
  });
  return dedupe_keywords(ranked, options.dedup_threshold, options.top_k);
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

double levenshtein_similarity(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_distance(a, b)) / static_cast<double>(longest);
}

std::vector<Keyword> dedupe_keywords(std::span<const Keyword> keywords, double threshold,
                                     std::size_t limit) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw ParameterError("dedup threshold must be in (0, 1]");
  std::vector<Keyword> kept;
  for (const auto& kw : keywords) {
    if (kept.size() >= limit) break;
    const bool distinct = std::all_of(kept.begin(), kept.end(), [&](const Keyword& k) {
      return levenshtein_similarity(kw.norm, k.norm) < threshold;
    });
    if (distinct) kept.push_back(kw);
  }
  return kept;
}

}  // namespace kgraph
