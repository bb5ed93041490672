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

#include <cmath>
#include <random>

#include "kgraph/error.hpp"
#include "kgraph/relevance.hpp"
#include "oracles.hpp"

namespace kgraph {
namespace {

// Unit vectors at a chosen cosine to the thesaurus direction (1, 0).
VectorSpace angled_space() {
  auto at = [](double c) { return std::vector<double>{c, std::sqrt(1.0 - c * c)}; };
  std::vector<std::string> terms = {"topic", "alpha", "beta", "gamma", "kfour", "keight", "opposite"};
  std::vector<double> data;
  for (const auto& v : {std::vector<double>{1, 0}, at(0.2), at(0.7), at(0.9), at(0.4), at(0.8),
                        std::vector<double>{-1, 0}}) {
    data.insert(data.end(), v.begin(), v.end());
  }
  return VectorSpace::external(terms, 2, data);
}

std::vector<ThesaurusTerm> topic_thesaurus() {
  const std::vector<std::string> terms = {"Topic"};
  return prepare_thesaurus(terms, Normalizer());
}

Keyword kw(const std::string& norm) { return {norm, norm, 0.1, 1}; }

TEST(DocRelevance, IdenticalKeywordScoresOne) {
  const auto space = angled_space();
  const std::vector<Keyword> kws = {kw("topic"), kw("alpha")};
  EXPECT_NEAR(doc_relevance(kws, topic_thesaurus(), space, Aggregation::MaxMax), 1.0, 1e-12);
}

TEST(DocRelevance, EmptyKeywordListScoresZero) {
  EXPECT_EQ(doc_relevance({}, topic_thesaurus(), angled_space(), Aggregation::MeanOfMax), 0.0);
}

TEST(DocRelevance, MeanOfMaxAndMaxMax) {
  const auto space = angled_space();
  const std::vector<Keyword> kws = {kw("kfour"), kw("keight")};
  EXPECT_NEAR(doc_relevance(kws, topic_thesaurus(), space, Aggregation::MeanOfMax), 0.6, 1e-12);
  EXPECT_NEAR(doc_relevance(kws, topic_thesaurus(), space, Aggregation::MaxMax), 0.8, 1e-12);
}

TEST(DocRelevance, NegativeCosineClampsToZero) {
  const std::vector<Keyword> kws = {kw("opposite")};
  EXPECT_EQ(doc_relevance(kws, topic_thesaurus(), angled_space(), Aggregation::MaxMax), 0.0);
}

TEST(DocRelevance, EmptyThesaurusIsRejected) {
  const std::vector<Keyword> kws = {kw("alpha")};
  EXPECT_THROW(doc_relevance(kws, std::vector<ThesaurusTerm>{}, angled_space(), Aggregation::MaxMax),
               ParameterError);
}

TEST(DocRelevance, AddingThesaurusTermsNeverLowersScore) {
  const auto space = angled_space();
  const Normalizer n;
  const std::vector<Keyword> kws = {kw("alpha"), kw("beta"), kw("kfour")};
  std::vector<std::string> terms = {"gamma"};
  double prev = doc_relevance(kws, prepare_thesaurus(terms, n), space, Aggregation::MeanOfMax);
  for (const char* extra : {"opposite", "keight", "topic", "alpha"}) {
    terms.push_back(extra);
    const double now = doc_relevance(kws, prepare_thesaurus(terms, n), space, Aggregation::MeanOfMax);
    EXPECT_GE(now, prev);
    prev = now;
  }
}

struct Fixture {
  Corpus corpus;
  std::vector<NormalizedDocument> ndocs;
};

Fixture three_docs() {
  Fixture f;
  const Normalizer n;
  for (const char* w : {"alpha", "beta", "gamma"}) {
    f.corpus.add({std::string("doc-") + w, w, Source::Arxiv, std::nullopt});
    f.ndocs.push_back(n.normalize(f.corpus.documents().back()));
  }
  return f;
}

TEST(FilterCorpus, HandComputedScores) {
  const auto f = three_docs();
  RelevanceConfig cfg;
  cfg.threshold = 0.5;
  const auto r = filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg);
  ASSERT_EQ(r.report.size(), 3u);
  EXPECT_NEAR(r.report[0].score, 0.2, 1e-12);
  EXPECT_NEAR(r.report[1].score, 0.7, 1e-12);
  EXPECT_NEAR(r.report[2].score, 0.9, 1e-12);
  ASSERT_EQ(r.kept.size(), 2u);
  EXPECT_EQ(r.kept.documents()[0].id, "doc-beta");
  EXPECT_EQ(r.kept.documents()[1].id, "doc-gamma");
  EXPECT_FALSE(r.report[0].kept);
  EXPECT_EQ(relevance_report_csv(r.report).substr(0, 19), "doc_id,score,kept\nd");
}

TEST(FilterCorpus, ThresholdBoundaries) {
  const auto f = three_docs();
  RelevanceConfig cfg;
  cfg.threshold = 0.0;
  EXPECT_EQ(filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg).kept.size(), 3u);
  cfg.threshold = 1.0;
  EXPECT_EQ(filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg).kept.size(), 0u);
  cfg.threshold = 1.0 + 1e-9;
  EXPECT_THROW(filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg),
               ParameterError);
  cfg.threshold = 0.5;
  cfg.top_k = 0;
  EXPECT_THROW(filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg),
               ParameterError);
}

TEST(FilterCorpus, MisalignedInputsRejected) {
  auto f = three_docs();
  RelevanceConfig cfg;
  std::swap(f.ndocs[0], f.ndocs[1]);
  EXPECT_THROW(filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg),
               ParameterError);
  f.ndocs.pop_back();
  EXPECT_THROW(filter_corpus(f.corpus, f.ndocs, topic_thesaurus(), angled_space(), cfg),
               ParameterError);
}

TEST(FilterProperty, MonotoneOrderedAndWorkerIndependent) {
  std::mt19937_64 rng(12);
  const std::vector<std::string> vocab = {"solar", "wind", "flare", "crater", "basalt", "orbit",
                                          "plasma", "rover", "the", "of"};
  const Normalizer n;
  const std::vector<std::string> terms = {"solar wind", "plasma flare", "orbit"};
  for (int iter = 0; iter < 30; ++iter) {
    Corpus corpus;
    std::vector<NormalizedDocument> ndocs;
    std::uniform_int_distribution<std::size_t> len(0, 30);
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    const std::size_t docs = 1 + static_cast<std::size_t>(iter);
    for (std::size_t d = 0; d < docs; ++d) {
      std::string text;
      const std::size_t l = len(rng);
      for (std::size_t i = 0; i < l; ++i) text += vocab[pick(rng)] + (i % 7 == 6 ? ". " : " ");
      corpus.add({"d" + std::to_string(d), text, Source::Arxiv, std::nullopt});
      ndocs.push_back(n.normalize(corpus.documents().back()));
    }
    const auto space = build_tfidf(ndocs);
    const auto thesaurus = prepare_thesaurus(terms, n);
    std::vector<std::string> prev_kept;
    for (int t = 0; t <= 10; ++t) {
      RelevanceConfig cfg;
      cfg.threshold = t / 10.0;
      const auto r = filter_corpus(corpus, ndocs, thesaurus, space, cfg);
      const auto r4 = filter_corpus(corpus, ndocs, thesaurus, space, cfg, {}, 4);
      EXPECT_EQ(r.report, r4.report);
      std::vector<std::string> kept;
      for (const auto& d : r.kept) kept.push_back(d.id);
      if (t == 0) EXPECT_EQ(kept.size(), corpus.size());
      // Descending chain, preserving corpus order.
      if (t > 0) {
        EXPECT_TRUE(std::includes(prev_kept.begin(), prev_kept.end(), kept.begin(), kept.end(),
                                  [](const std::string& a, const std::string& b) {
                                    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
                                  }));
      }
      for (const auto& row : r.report) {
        EXPECT_GE(row.score, 0.0);
        EXPECT_LE(row.score, 1.0);
        EXPECT_EQ(row.kept, row.score >= cfg.threshold);
      }
      prev_kept = kept;
    }
  }
}

}  // namespace
}  // namespace kgraph
