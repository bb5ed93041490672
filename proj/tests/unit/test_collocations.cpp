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

#include <algorithm>
#include <cmath>
#include <random>

#include "kgraph/collocations.hpp"
#include "kgraph/error.hpp"
#include "oracles.hpp"

namespace kgraph {
namespace {

using testing::make_doc;

std::vector<std::string> flat_norms(const NormalizedDocument& d) {
  std::vector<std::string> out;
  for (const auto& s : d.sentences) {
    for (const auto& t : s.tokens) out.push_back(t.norm);
  }
  return out;
}

// Every document holds "hubble space" once plus filler words that appear
// nowhere else, so the pair's PMI is large.
std::vector<NormalizedDocument> hubble_corpus(std::size_t docs, bool telescope) {
  std::vector<NormalizedDocument> out;
  for (std::size_t d = 0; d < docs; ++d) {
    std::string s = "hubble space";
    if (telescope) s += " telescope";
    for (int w = 0; w < 20; ++w) s += " f" + std::to_string(d) + "x" + std::to_string(w);
    out.push_back(make_doc("d" + std::to_string(d), {s}));
  }
  return out;
}

std::size_t adjacent_pairs(const std::vector<NormalizedDocument>& docs) {
  std::size_t n = 0;
  for (const auto& d : docs) {
    for (const auto& s : d.sentences) n += s.tokens.empty() ? 0 : s.tokens.size() - 1;
  }
  return n;
}

TEST(Collocations, MergesPairThatAlwaysCoOccurs) {
  const auto docs = hubble_corpus(6, false);
  const auto model = detect_collocations(docs, 5, 3.0);
  const std::vector<std::string> key = {"hubble", "space"};
  ASSERT_TRUE(model.merges.contains(key));
  EXPECT_EQ(model.merges.at(key), "hubble_space");
  const auto& st = model.stats.at(key);
  EXPECT_EQ(st.count, 6u);
  // c(w1) = c(w2) = c(w1,w2) = 6.
  const double n = static_cast<double>(adjacent_pairs(docs));
  EXPECT_NEAR(st.pmi, std::log(n * 6.0 / (6.0 * 6.0)), 1e-12);
}

TEST(Collocations, MinCountAboveTokenCountGivesEmptyModel) {
  const auto docs = hubble_corpus(6, false);
  std::size_t tokens = 0;
  for (const auto& d : docs) tokens += d.token_count;
  EXPECT_TRUE(detect_collocations(docs, tokens + 1, 0.0).merges.empty());
}

TEST(Collocations, StopwordPairsNeverMerge) {
  std::vector<NormalizedDocument> docs;
  for (int i = 0; i < 50; ++i) docs.push_back(make_doc("d" + std::to_string(i), {"of the"}));
  const auto model = detect_collocations(docs, 2, -1e9);
  EXPECT_TRUE(model.merges.empty());
}

TEST(Collocations, MinCountBelowTwoIsRejected) {
  EXPECT_THROW(detect_collocations({}, 1, 3.0), ParameterError);
}

TEST(Collocations, TrigramsFromSecondPass) {
  const auto docs = hubble_corpus(6, true);
  const auto model = detect_collocations(docs, 5, 3.0);
  const std::vector<std::string> tri = {"hubble", "space", "telescope"};
  ASSERT_TRUE(model.merges.contains(tri));
  for (const auto& [key, merged] : model.merges) {
    for (const auto& w : key) EXPECT_FALSE(StopwordSet::english().contains(w));
    EXPECT_GE(model.stats.at(key).count, 5u);
  }
  const auto applied = apply_collocations(docs[0], model);
  EXPECT_EQ(applied.sentences[0].tokens[0].norm, "hubble_space_telescope");
  EXPECT_EQ(applied.token_count, docs[0].token_count - 2);
}

TEST(ApplyCollocations, LongestMatchFirst) {
  CollocationModel m;
  m.merges[{"hubble", "space"}] = "hubble_space";
  m.merges[{"hubble", "space", "telescope"}] = "hubble_space_telescope";
  const auto d = make_doc("x", {"hubble space telescope"});
  const auto out = apply_collocations(d, m);
  ASSERT_EQ(out.token_count, 1u);
  EXPECT_EQ(out.sentences[0].tokens[0].norm, "hubble_space_telescope");
  EXPECT_EQ(out.sentences[0].tokens[0].surface, "hubble space telescope");
}

TEST(ApplyCollocations, LeftmostMatchWinsOnOverlap) {
  CollocationModel m;
  m.merges[{"a", "b"}] = "a_b";
  m.merges[{"b", "c"}] = "b_c";
  const auto out = apply_collocations(make_doc("x", {"a b c"}), m);
  EXPECT_EQ(flat_norms(out), (std::vector<std::string>{"a_b", "c"}));
  const std::vector<std::string> raw = {"a", "b", "c"};
  EXPECT_EQ(apply_collocations(raw, m), (std::vector<std::string>{"a_b", "c"}));
}

TEST(ApplyCollocations, EmptyModelIsIdentity) {
  const auto d = make_doc("x", {"hubble space telescope", "other words"});
  EXPECT_EQ(apply_collocations(d, CollocationModel{}), d);
}

TEST(ApplyCollocations, NeverMergesAcrossPunctuation) {
  CollocationModel m;
  m.merges[{"solar", "material"}] = "solar_material";
  const auto out = apply_collocations(make_doc("x", {"solar |material solar material"}), m);
  EXPECT_EQ(flat_norms(out), (std::vector<std::string>{"solar", "material", "solar_material"}));
}

TEST(CollocationProperty, DocumentOrderIndependent) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> vocab = {"alpha", "beta", "gamma", "delta", "the", "of",
                                          "solar", "wind", "flux", "rope"};
  for (int iter = 0; iter < 40; ++iter) {
    auto docs = testing::random_corpus(rng, vocab, 30, 6, 12, 0.1);
    const auto a = detect_collocations(docs, 2, 0.0);
    std::shuffle(docs.begin(), docs.end(), rng);
    const auto b = detect_collocations(docs, 2, 0.0);
    EXPECT_EQ(a.merges, b.merges);
    for (const auto& [key, st] : a.stats) {
      EXPECT_EQ(st.count, b.stats.at(key).count);
      EXPECT_NEAR(st.pmi, b.stats.at(key).pmi, 1e-12);
    }
  }
}

TEST(CollocationProperty, ApplyPreservesMemberSequence) {
  std::mt19937_64 rng(4);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "the"};
  for (int iter = 0; iter < 40; ++iter) {
    const auto docs = testing::random_corpus(rng, vocab, 20, 5, 10, 0.2);
    const auto model = detect_collocations(docs, 2, 0.0);
    for (const auto& d : docs) {
      const auto out = apply_collocations(d, model);
      std::string before;
      std::string after;
      for (const auto& n : flat_norms(d)) before += n + "_";
      for (const auto& n : flat_norms(out)) after += n + "_";
      EXPECT_EQ(before, after);
      std::size_t merged_away = 0;
      for (const auto& s : out.sentences) {
        for (const auto& t : s.tokens) {
          merged_away += static_cast<std::size_t>(std::count(t.norm.begin(), t.norm.end(), '_'));
        }
      }
      EXPECT_EQ(out.token_count + merged_away, d.token_count);
    }
  }
}

}  // namespace
}  // namespace kgraph
