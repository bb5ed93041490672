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
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kgraph/corpus.hpp"

namespace kgraph {

enum class CaseClass { Lower, InitialUpper, AllUpper, Mixed, NonAlpha };

std::string_view to_string(CaseClass c) noexcept;
CaseClass parse_case_class(std::string_view name);

/// Case class of a surface form. Only ASCII letters carry case; a single
/// uppercase letter is InitialUpper, two or more with no lowercase AllUpper.
CaseClass classify_case(std::string_view surface) noexcept;

struct Token {
  std::string surface;
  std::string norm;
  bool is_stopword = false;
  std::size_t char_offset = 0;  // byte offset into the raw document text
  CaseClass case_class = CaseClass::Lower;
  /// Punctuation separates this token from the previous one in its sentence.
  /// Phrases (keyword candidates, collocations, multi-token matches) never
  /// span such a break.
  bool follows_break = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct NormalizedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::size_t token_count = 0;

  friend bool operator==(const NormalizedDocument&, const NormalizedDocument&) = default;
};

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  /// The bundled English list.
  static const StopwordSet& english();
  /// One lowercase word per line; blank lines and '#' lines ignored.
  static StopwordSet from_file(const std::filesystem::path& path);
  static StopwordSet parse(std::string_view text);

  /// `lower` must already be lowercase. A trailing possessive "'s" is
  /// ignored, so "it's" and "its" both resolve against the list.
  bool contains(std::string_view lower) const;

  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

enum class StemmerKind { SuffixStripper, Identity };

StemmerKind parse_stemmer(std::string_view name);
std::string_view to_string(StemmerKind k) noexcept;

/// Lowercase (ASCII) and strip inflectional suffixes: possessive 's, plural
/// -s/-es/-ies, and the -ed/-ing families with the usual consonant/e repairs.
/// Never returns an empty string for a nonempty input.
std::string stem(std::string_view word, StemmerKind kind = StemmerKind::SuffixStripper);

/// True for code points that may appear inside a token: ASCII letters and
/// digits plus non-ASCII letters. Non-ASCII punctuation and symbol blocks
/// are excluded.
bool is_word_codepoint(char32_t cp) noexcept;

/// Tokenize, sentence-split, case-classify, stem and flag stopwords.
/// Pure; safe to call concurrently on one instance.
class Normalizer {
 public:
  explicit Normalizer(StopwordSet stopwords = StopwordSet::english(),
                      StemmerKind stemmer = StemmerKind::SuffixStripper);

  NormalizedDocument normalize(const Document& doc) const;
  NormalizedDocument normalize(std::string_view doc_id, std::string_view text) const;

  /// Token norms of a short phrase (thesaurus term, query), stopwords kept.
  std::vector<std::string> norms(std::string_view phrase) const;

  const StopwordSet& stopwords() const noexcept { return stopwords_; }
  StemmerKind stemmer() const noexcept { return stemmer_; }

 private:
  StopwordSet stopwords_;
  StemmerKind stemmer_;
};

inline NormalizedDocument normalize(const Document& doc, const StopwordSet& stopwords,
                                    StemmerKind stemmer) {
  return Normalizer(stopwords, stemmer).normalize(doc);
}

/// Byte ranges of sentences in `text` (terminal punctuation + whitespace +
/// uppercase/digit, with an abbreviation list). Exposed for testing.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};
std::vector<SentenceSpan> split_sentences(std::string_view text);

}  // namespace kgraph
