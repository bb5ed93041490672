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
#include <vector>

#include "kgraph/text.hpp"

namespace kgraph {

struct CollocationStat {
  std::size_t count = 0;
  double pmi = 0.0;  // nats

  friend bool operator==(const CollocationStat&, const CollocationStat&) = default;
};

/// Learned bigram/trigram merges. Keys are token-norm sequences of length
/// 2 or 3; values are the merged norm (members joined by '_').
struct CollocationModel {
  std::map<std::vector<std::string>, std::string> merges;
  std::map<std::vector<std::string>, CollocationStat> stats;
  std::size_t min_count = 5;
  double min_pmi = 3.0;

  bool empty() const noexcept { return merges.empty(); }

  friend bool operator==(const CollocationModel&, const CollocationModel&) = default;
};

/// Learn collocations from adjacent-pair statistics. An adjacent pair is two
/// consecutive tokens of one sentence with no punctuation break between
/// them. With N adjacent pairs, L(w) the count of pairs whose first member
/// is w and R(w) the count whose second member is w:
///
///   PMI(w1, w2) = ln(N * c(w1 w2) / (L(w1) * R(w2)))
///
/// A pair of non-stopwords is merged when c >= min_count and PMI >= min_pmi.
/// Trigrams come from a second pass over the bigram-merged stream, pairing a
/// merged bigram with an adjacent unigram. Throws ParameterError when
/// min_count < 2. Result does not depend on document order.
CollocationModel detect_collocations(std::span<const NormalizedDocument> corpus,
                                     std::size_t min_count = 5, double min_pmi = 3.0);

/// Replace matching runs, longest match first, scanning left to right.
NormalizedDocument apply_collocations(const NormalizedDocument& ndoc,
                                      const CollocationModel& model);

/// Merge a plain norm sequence (used for thesaurus terms and graph node ids).
std::vector<std::string> apply_collocations(std::span<const std::string> norms,
                                            const CollocationModel& model);

}  // namespace kgraph
