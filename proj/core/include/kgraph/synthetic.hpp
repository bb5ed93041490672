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
#include <cstdint>
#include <string>
#include <vector>

#include "kgraph/corpus.hpp"

namespace kgraph {

/// Two labelled corpora drawn from overlapping synthetic vocabularies.
struct TwoDomainSpec {
  std::size_t vocabulary_size = 300;  // per domain
  double shared_fraction = 0.2;       // of each vocabulary
  std::size_t docs_per_domain = 200;
  std::size_t min_tokens = 40;
  std::size_t max_tokens = 80;
  std::uint64_t seed = 1;
};

struct TwoDomainCorpus {
  Corpus a;  // domain heliophysics
  Corpus b;  // domain planetary
  std::vector<std::string> vocabulary_a;
  std::vector<std::string> vocabulary_b;
  std::vector<std::string> shared;
};

/// Word frequencies are Zipfian within each domain vocabulary; sentences
/// are 6-14 content words with occasional stopwords, capitalized and
/// period-terminated. Deterministic for a given spec.
TwoDomainCorpus generate_two_domain(const TwoDomainSpec& spec);

/// `count` abstract-like documents of about `tokens` tokens each.
Corpus generate_abstracts(std::size_t count, std::size_t tokens, std::uint64_t seed);

/// Pronounceable pseudo-words that the suffix stripper leaves unchanged.
std::vector<std::string> synthetic_words(std::size_t count, std::uint64_t seed);

}  // namespace kgraph
