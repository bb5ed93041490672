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

#include <set>

#include "kgraph/synthetic.hpp"
#include "kgraph/text.hpp"

namespace kgraph {
namespace {

TEST(Synthetic, WordsAreDistinctNonStopwords) {
  const auto words = synthetic_words(500, 3);
  EXPECT_EQ(words.size(), 500u);
  EXPECT_EQ(std::set<std::string>(words.begin(), words.end()).size(), 500u);
  for (const auto& w : words) {
    EXPECT_FALSE(StopwordSet::english().contains(w)) << w;
    EXPECT_EQ(stem(w), w);
  }
  EXPECT_EQ(synthetic_words(500, 3), words);
}

TEST(Synthetic, TwoDomainShape) {
  TwoDomainSpec spec;
  spec.vocabulary_size = 100;
  spec.shared_fraction = 0.3;
  spec.docs_per_domain = 25;
  const auto gen = generate_two_domain(spec);
  EXPECT_EQ(gen.a.size(), 25u);
  EXPECT_EQ(gen.b.size(), 25u);
  EXPECT_EQ(gen.shared.size(), 30u);
  EXPECT_EQ(gen.vocabulary_a.size(), 100u);
  EXPECT_EQ(gen.vocabulary_b.size(), 100u);
  std::set<std::string> a(gen.vocabulary_a.begin(), gen.vocabulary_a.end());
  std::set<std::string> b(gen.vocabulary_b.begin(), gen.vocabulary_b.end());
  std::size_t common = 0;
  for (const auto& w : a) common += b.count(w);
  EXPECT_EQ(common, 30u);
  for (const auto& d : gen.a) EXPECT_EQ(d.domain, Domain::Heliophysics);
  for (const auto& d : gen.b) EXPECT_EQ(d.domain, Domain::Planetary);
  EXPECT_EQ(gen.a.documents().front().id, "helio-00001");
  EXPECT_EQ(gen.b.documents().front().id, "planet-00001");

  const Normalizer norm;
  for (const auto& d : gen.a) {
    const auto n = norm.normalize(d);
    EXPECT_GE(n.token_count, spec.min_tokens);
    EXPECT_LE(n.token_count, spec.max_tokens);
  }
}

TEST(Synthetic, SeedControlsOutput) {
  TwoDomainSpec spec;
  spec.docs_per_domain = 5;
  const auto x = generate_two_domain(spec);
  EXPECT_EQ(generate_two_domain(spec).a, x.a);
  spec.seed = 2;
  EXPECT_NE(generate_two_domain(spec).a, x.a);
}

TEST(Synthetic, AbstractsHaveRequestedLength) {
  const auto c = generate_abstracts(20, 150, 5);
  ASSERT_EQ(c.size(), 20u);
  const Normalizer norm;
  for (const auto& d : c) {
    const auto n = norm.normalize(d);
    EXPECT_GE(n.token_count, 120u);
    EXPECT_LE(n.token_count, 180u);
  }
  EXPECT_EQ(generate_abstracts(20, 150, 5), c);
}

}  // namespace
}  // namespace kgraph
