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

#include "kgraph/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph::detail {
extern const std::string_view kDefaultStopwords;
}

namespace kgraph {

namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

struct Decoded {
  char32_t cp;
  std::size_t len;
};

Decoded decode(std::string_view s, std::size_t i) noexcept {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {kInvalid, 1};
  }
  if (i + len > s.size()) return {kInvalid, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {kInvalid, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool is_ascii_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_space_codepoint(char32_t cp) noexcept {
  if (cp < 0x80) return is_ascii_space(static_cast<char>(cp));
  return cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

bool is_joiner(char32_t cp) noexcept { return cp == '\'' || cp == '-' || cp == 0x2019 || cp == '.'; }

char ascii_lower(char c) noexcept { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Typographic apostrophe (U+2019) folds to ASCII.
    if (s.compare(i, 3, "\xE2\x80\x99") == 0) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(ascii_lower(s[i]));
  }
  return out;
}

// --- suffix stripper -------------------------------------------------------

bool is_consonant(std::string_view w, std::size_t i) noexcept {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 || !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// Number of VC sequences in w.
std::size_t measure(std::string_view w) noexcept {
  std::size_t m = 0;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n && is_consonant(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(w, i)) ++i;
    if (i >= n) break;
    while (i < n && is_consonant(w, i)) ++i;
    ++m;
  }
  return m;
}

bool has_vowel(std::string_view w) noexcept {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

bool ends_double_consonant(std::string_view w) noexcept {
  const auto n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// consonant-vowel-consonant ending, last not w/x/y
bool ends_cvc(std::string_view w) noexcept {
  const auto n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
  const char last = w[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

bool all_ascii_letters(std::string_view w) noexcept {
  return std::all_of(w.begin(), w.end(), [](char c) { return (c >= 'a' && c <= 'z') || c == '-'; });
}

void strip_plural(std::string& w) {
  static constexpr std::array<std::string_view, 4> kKeep{"series", "species", "news", "means"};
  if (std::find(kKeep.begin(), kKeep.end(), w) != kKeep.end()) return;

  if (w.ends_with("sses")) {
    w.resize(w.size() - 2);
  } else if (w.ends_with("ies")) {
    w.resize(w.size() - 3);
    w += w.size() > 1 ? "y" : "ie";
  } else if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) {
    // not plurals
  } else if (w.ends_with("xes") || w.ends_with("ches") || w.ends_with("shes")) {
    w.resize(w.size() - 2);
  } else if (w.ends_with('s') && w.size() >= 4 && has_vowel(std::string_view(w).substr(0, w.size() - 1))) {
    w.pop_back();
  }
}

void strip_verbal(std::string& w) {
  if (w.ends_with("eed")) {
    if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0) w.pop_back();
    return;
  }
  std::size_t cut = 0;
  if (w.ends_with("ed")) {
    cut = 2;
  } else if (w.ends_with("ing")) {
    cut = 3;
  } else {
    return;
  }
  const std::string_view stem(w.data(), w.size() - cut);
  if (!has_vowel(stem)) return;
  w.resize(stem.size());
  if (w.ends_with("at") || w.ends_with("bl") || w.ends_with("iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w) && !w.ends_with('l') && !w.ends_with('s') &&
             !w.ends_with('z')) {
    w.pop_back();
  } else if (measure(w) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

void strip_final_e(std::string& w) {
  if (!w.ends_with('e')) return;
  const std::string_view stem(w.data(), w.size() - 1);
  const auto m = measure(stem);
  if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

// --- sentence splitting ----------------------------------------------------

constexpr std::array<std::string_view, 24> kAbbreviations{
    "e.g.", "i.e.", "fig.", "figs.", "eq.", "eqs.", "al.", "cf.", "vs.", "dr.", "mr.", "mrs.",
    "ms.", "prof.", "approx.", "no.", "vol.", "ref.", "refs.", "sec.", "ch.", "st.", "jr.",
    "inc."};

bool is_abbreviation(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0 && !is_ascii_space(text[start - 1])) --start;
  const std::string word = lowercase(text.substr(start, dot - start + 1));
  if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end())
    return true;
  // Single-letter initials: "J. Smith".
  return word.size() == 2 && word[0] >= 'a' && word[0] <= 'z';
}

bool is_closer(char c) noexcept { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool is_opener(char c) noexcept { return c == '"' || c == '\'' || c == '(' || c == '['; }

// --- tokenization ----------------------------------------------------------

struct RawToken {
  std::size_t begin;
  std::size_t end;
  bool follows_break;
};

std::vector<RawToken> tokenize_span(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<RawToken> out;
  std::size_t i = begin;
  bool pending_break = false;
  while (i < end) {
    const auto d = decode(text, i);
    if (d.cp != kInvalid && is_word_codepoint(d.cp)) {
      const std::size_t start = i;
      i += d.len;
      while (i < end) {
        const auto next = decode(text, i);
        if (next.cp != kInvalid && is_word_codepoint(next.cp)) {
          i += next.len;
          continue;
        }
        if (next.cp != kInvalid && is_joiner(next.cp) && i + next.len < end) {
          const auto after = decode(text, i + next.len);
          if (after.cp != kInvalid && is_word_codepoint(after.cp)) {
            i += next.len + after.len;
            continue;
          }
        }
        break;
      }
      out.push_back({start, i, pending_break && !out.empty()});
      pending_break = false;
      continue;
    }
    if (d.cp == kInvalid || !is_space_codepoint(d.cp)) pending_break = true;
    i += d.len;
  }
  return out;
}

}  // namespace

std::string_view to_string(CaseClass c) noexcept {
  switch (c) {
    case CaseClass::Lower: return "lower";
    case CaseClass::InitialUpper: return "initial-upper";
    case CaseClass::AllUpper: return "all-upper";
    case CaseClass::Mixed: return "mixed";
    case CaseClass::NonAlpha: return "non-alpha";
  }
  return "non-alpha";
}

CaseClass parse_case_class(std::string_view name) {
  for (auto c : {CaseClass::Lower, CaseClass::InitialUpper, CaseClass::AllUpper, CaseClass::Mixed,
                 CaseClass::NonAlpha}) {
    if (to_string(c) == name) return c;
  }
  throw ParameterError("unknown case class '" + std::string(name) + "'");
}

CaseClass classify_case(std::string_view surface) noexcept {
  std::size_t upper = 0;
  std::size_t lower = 0;
  bool other_letters = false;
  bool first_letter_upper = false;
  bool seen_letter = false;
  for (std::size_t i = 0; i < surface.size();) {
    const auto d = decode(surface, i);
    i += d.len;
    if (d.cp >= 'A' && d.cp <= 'Z') {
      if (!seen_letter) first_letter_upper = true;
      seen_letter = true;
      ++upper;
    } else if (d.cp >= 'a' && d.cp <= 'z') {
      seen_letter = true;
      ++lower;
    } else if (d.cp >= 0x80 && d.cp != kInvalid && is_word_codepoint(d.cp)) {
      seen_letter = true;
      other_letters = true;
    }
  }
  if (!seen_letter) return CaseClass::NonAlpha;
  if (upper == 0) return CaseClass::Lower;
  if (upper == 1 && first_letter_upper) return CaseClass::InitialUpper;
  if (lower == 0 && !other_letters) return CaseClass::AllUpper;
  return CaseClass::Mixed;
}

bool is_word_codepoint(char32_t cp) noexcept {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
  }
  if (cp == kInvalid || cp > 0x10FFFF) return false;
  if (cp <= 0xBF) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols, arrows, shapes
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xE000 && cp <= 0xF8FF) return false;  // private use
  if (cp >= 0xFE10 && cp <= 0xFE6F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;
  if (cp >= 0xFFF0 && cp <= 0xFFFF) return false;
  if (cp >= 0x1F000) return false;  // emoji and pictographs
  return true;
}

// --- stopwords ---------------------------------------------------------------

StopwordSet StopwordSet::parse(std::string_view text) {
  std::unordered_set<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    while (!line.empty() && is_ascii_space(line.back())) line.remove_suffix(1);
    while (!line.empty() && is_ascii_space(line.front())) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') words.insert(lowercase(line));
    pos = nl + 1;
  }
  return StopwordSet(std::move(words));
}

const StopwordSet& StopwordSet::english() {
  static const StopwordSet kEnglish = parse(detail::kDefaultStopwords);
  return kEnglish;
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read stopword file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool StopwordSet::contains(std::string_view lower) const {
  if (words_.empty()) return false;
  std::string key(lower);
  if (words_.contains(key)) return true;
  if (key.size() > 2 && key.ends_with("'s")) {
    key.resize(key.size() - 2);
    return words_.contains(key);
  }
  return false;
}

// --- stemming ----------------------------------------------------------------

StemmerKind parse_stemmer(std::string_view name) {
  if (name == "suffix-stripper" || name == "suffix") return StemmerKind::SuffixStripper;
  if (name == "identity") return StemmerKind::Identity;
  throw ParameterError("unknown stemmer '" + std::string(name) + "'");
}

std::string_view to_string(StemmerKind k) noexcept {
  return k == StemmerKind::Identity ? "identity" : "suffix-stripper";
}

std::string stem(std::string_view word, StemmerKind kind) {
  std::string w = lowercase(word);
  if (kind == StemmerKind::Identity) return w;
  if (w.size() > 2 && w.ends_with("'s")) w.resize(w.size() - 2);
  if (w.size() <= 3 || !all_ascii_letters(w)) return w.empty() ? lowercase(word) : w;
  strip_plural(w);
  strip_verbal(w);
  if (w.size() > 3) strip_final_e(w);
  return w.empty() ? lowercase(word) : w;
}

// --- sentences ---------------------------------------------------------------

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    std::size_t j = i + 1;
    while (j < n && (text[j] == '.' || text[j] == '?' || text[j] == '!')) ++j;
    while (j < n && is_closer(text[j])) ++j;
    if (j >= n || !is_ascii_space(text[j])) continue;
    std::size_t k = j;
    while (k < n && is_ascii_space(text[k])) ++k;
    if (k >= n) continue;
    std::size_t first = k;
    while (first < n && is_opener(text[first])) ++first;
    if (first >= n) continue;
    const char next = text[first];
    const bool starts_sentence = (next >= 'A' && next <= 'Z') || (next >= '0' && next <= '9');
    if (!starts_sentence) continue;
    if (c == '.' && j == i + 1 && is_abbreviation(text, i)) continue;
    spans.push_back({start, j});
    start = k;
    i = k - 1;
  }
  if (start < n) spans.push_back({start, n});
  return spans;
}

// --- normalizer --------------------------------------------------------------

Normalizer::Normalizer(StopwordSet stopwords, StemmerKind stemmer)
    : stopwords_(std::move(stopwords)), stemmer_(stemmer) {}

NormalizedDocument Normalizer::normalize(const Document& doc) const {
  return normalize(doc.id, doc.text);
}

NormalizedDocument Normalizer::normalize(std::string_view doc_id, std::string_view text) const {
  NormalizedDocument out;
  out.doc_id = std::string(doc_id);
  for (const auto& span : split_sentences(text)) {
    const auto raw = tokenize_span(text, span.begin, span.end);
    if (raw.empty()) continue;
    Sentence sentence;
    sentence.index = out.sentences.size();
    sentence.tokens.reserve(raw.size());
    for (const auto& r : raw) {
      Token t;
      t.surface = std::string(text.substr(r.begin, r.end - r.begin));
      const std::string lower = lowercase(t.surface);
      t.is_stopword = stopwords_.contains(lower);
      t.norm = stem(t.surface, stemmer_);
      t.char_offset = r.begin;
      t.case_class = classify_case(t.surface);
      t.follows_break = r.follows_break;
      sentence.tokens.push_back(std::move(t));
    }
    out.token_count += sentence.tokens.size();
    out.sentences.push_back(std::move(sentence));
  }
  return out;
}

std::vector<std::string> Normalizer::norms(std::string_view phrase) const {
  std::vector<std::string> out;
  for (auto& s : normalize("", phrase).sentences) {
    for (auto& t : s.tokens) out.push_back(std::move(t.norm));
  }
  return out;
}

}  // namespace kgraph
