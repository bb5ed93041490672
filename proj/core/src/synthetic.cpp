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

#include "kgraph/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_set>

#include "kgraph/error.hpp"
#include "kgraph/text.hpp"

namespace kgraph {

namespace {

// All sampling goes through the raw engine output, so the corpora are the
// same on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }
  bool chance(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

/// Zipf(1) over ranks 0..n-1.
class Zipf {
 public:
  explicit Zipf(std::size_t n) : cdf_(n) {
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      acc += 1.0 / static_cast<double>(r + 1);
      cdf_[r] = acc;
    }
    for (auto& c : cdf_) c /= acc;
  }

  std::size_t operator()(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

constexpr const char* kFiller[] = {"the", "of", "and", "in", "with", "from", "by", "for"};

// Consonant-vowel syllables. Words end in a, i, o or u so the suffix
// stripper leaves them alone.
std::string make_word(Rng& rng) {
  static constexpr char kConsonants[] = "bdfgklmnprstvz";
  static constexpr char kVowels[] = "aiou";
  const std::size_t syllables = rng.between(2, 4);
  std::string w;
  for (std::size_t i = 0; i < syllables; ++i) {
    w.push_back(kConsonants[rng.index(sizeof kConsonants - 1)]);
    w.push_back(kVowels[rng.index(sizeof kVowels - 1)]);
  }
  return w;
}

std::vector<std::string> words_from(Rng& rng, std::size_t count) {
  const auto& stop = StopwordSet::english();
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  out.reserve(count);
  while (out.size() < count) {
    std::string w = make_word(rng);
    if (stop.contains(w) || !seen.insert(w).second) continue;
    out.push_back(std::move(w));
  }
  return out;
}

/// Emits `tokens` words as sentences of 6 to 14 words with sparse filler
/// stopwords. `caps` is the per-token chance of an all-caps rendering.
std::string compose(Rng& rng, const std::vector<std::string>& vocab, const Zipf& zipf,
                    std::size_t tokens, double caps) {
  std::string text;
  std::size_t emitted = 0;
  while (emitted < tokens) {
    const std::size_t len = std::min(rng.between(6, 14), tokens - emitted);
    for (std::size_t i = 0; i < len; ++i) {
      if (!text.empty()) text.push_back(' ');
      if (i > 0 && rng.chance(0.12)) {
        text += kFiller[rng.index(std::size(kFiller))];
        continue;
      }
      std::string w = vocab[zipf(rng)];
      if (rng.chance(caps)) {
        for (char& c : w) c = static_cast<char>(c - 'a' + 'A');
      } else if (i == 0) {
        w[0] = static_cast<char>(w[0] - 'a' + 'A');
      }
      text += w;
    }
    text += ".";
    emitted += len;
  }
  return text;
}

std::string numbered(const char* prefix, std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s-%05zu", prefix, i);
  return buf;
}

}  // namespace

std::vector<std::string> synthetic_words(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  return words_from(rng, count);
}

TwoDomainCorpus generate_two_domain(const TwoDomainSpec& spec) {
  if (spec.vocabulary_size == 0) throw ParameterError("vocabulary_size must be >= 1");
  if (!(spec.shared_fraction >= 0.0 && spec.shared_fraction <= 1.0))
    throw ParameterError("shared_fraction must be in [0, 1]");
  if (spec.min_tokens == 0 || spec.min_tokens > spec.max_tokens)
    throw ParameterError("token range must satisfy 1 <= min_tokens <= max_tokens");

  Rng rng(spec.seed);
  const auto n_shared = static_cast<std::size_t>(
      std::llround(spec.shared_fraction * static_cast<double>(spec.vocabulary_size)));
  const std::size_t n_own = spec.vocabulary_size - n_shared;
  std::vector<std::string> pool = words_from(rng, n_shared + 2 * n_own);

  TwoDomainCorpus out;
  out.shared.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_shared));
  auto own_a = pool.begin() + static_cast<std::ptrdiff_t>(n_shared);
  auto own_b = own_a + static_cast<std::ptrdiff_t>(n_own);
  out.vocabulary_a = out.shared;
  out.vocabulary_a.insert(out.vocabulary_a.end(), own_a, own_b);
  out.vocabulary_b = out.shared;
  out.vocabulary_b.insert(out.vocabulary_b.end(), own_b, pool.end());
  std::sort(out.shared.begin(), out.shared.end());

  // Independent frequency ranks per domain.
  std::vector<std::string> ranked_a = out.vocabulary_a;
  std::vector<std::string> ranked_b = out.vocabulary_b;
  rng.shuffle(ranked_a);
  rng.shuffle(ranked_b);
  std::sort(out.vocabulary_a.begin(), out.vocabulary_a.end());
  std::sort(out.vocabulary_b.begin(), out.vocabulary_b.end());

  const Zipf zipf(spec.vocabulary_size);
  auto fill = [&](Corpus& c, const std::vector<std::string>& ranked, const char* prefix,
                  Domain domain) {
    for (std::size_t i = 0; i < spec.docs_per_domain; ++i) {
      const std::size_t tokens = rng.between(spec.min_tokens, spec.max_tokens);
      c.add({numbered(prefix, i + 1), compose(rng, ranked, zipf, tokens, 0.0), Source::Arxiv,
             domain});
    }
  };
  fill(out.a, ranked_a, "helio", Domain::Heliophysics);
  fill(out.b, ranked_b, "planet", Domain::Planetary);
  return out;
}

Corpus generate_abstracts(std::size_t count, std::size_t tokens, std::uint64_t seed) {
  if (tokens == 0) throw ParameterError("tokens must be >= 1");
  Rng rng(seed);
  const std::vector<std::string> vocab = words_from(rng, 2000);
  const Zipf zipf(vocab.size());
  Corpus c;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = rng.between(tokens - tokens / 5, tokens + tokens / 5);
    c.add({numbered("abs", i + 1), compose(rng, vocab, zipf, std::max<std::size_t>(n, 1), 0.02),
           Source::Arxiv, std::nullopt});
  }
  return c;
}

}  // namespace kgraph
