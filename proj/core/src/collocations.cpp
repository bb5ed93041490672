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

#include "kgraph/collocations.hpp"

#include <cmath>
#include <unordered_map>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

struct Unit {
  std::vector<std::string> members;
  std::string key;  // members joined by '\x1f'
  bool stop = false;
  bool brk = false;
};

struct PairStats {
  std::size_t total = 0;
  std::unordered_map<std::string, std::size_t> left;
  std::unordered_map<std::string, std::size_t> right;
  // Candidate pairs only (both members non-stopwords, fitting size).
  std::unordered_map<std::string, std::size_t> pairs;
  std::unordered_map<std::string, std::pair<const Unit*, const Unit*>> examples;
};

using Stream = std::vector<std::vector<Unit>>;  // sentences of units

Stream units_of(std::span<const NormalizedDocument> corpus) {
  Stream out;
  for (const auto& doc : corpus) {
    for (const auto& s : doc.sentences) {
      std::vector<Unit> units;
      units.reserve(s.tokens.size());
      for (const auto& t : s.tokens) {
        units.push_back({{t.norm}, t.norm, t.is_stopword, t.follows_break});
      }
      out.push_back(std::move(units));
    }
  }
  return out;
}

std::string pair_key(const Unit& a, const Unit& b) { return a.key + '\x1e' + b.key; }

// `width` is the member count a candidate pair must have in total.
PairStats count_pairs(const Stream& stream, std::size_t width) {
  PairStats st;
  for (const auto& units : stream) {
    for (std::size_t i = 1; i < units.size(); ++i) {
      const Unit& a = units[i - 1];
      const Unit& b = units[i];
      if (b.brk) continue;
      ++st.total;
      ++st.left[a.key];
      ++st.right[b.key];
      if (a.stop || b.stop) continue;
      if (a.members.size() + b.members.size() != width) continue;
      const auto key = pair_key(a, b);
      ++st.pairs[key];
      st.examples.try_emplace(key, &a, &b);
    }
  }
  return st;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

void collect(const PairStats& st, std::size_t min_count, double min_pmi,
             CollocationModel& model) {
  for (const auto& [key, count] : st.pairs) {
    if (count < min_count) continue;
    const auto [a, b] = st.examples.at(key);
    const double pmi = std::log(static_cast<double>(st.total) * static_cast<double>(count) /
                                (static_cast<double>(st.left.at(a->key)) *
                                 static_cast<double>(st.right.at(b->key))));
    if (pmi < min_pmi) continue;
    std::vector<std::string> members = a->members;
    members.insert(members.end(), b->members.begin(), b->members.end());
    CollocationStat stat{count, pmi};
    auto [it, inserted] = model.stats.try_emplace(members, stat);
    if (!inserted && (stat.count > it->second.count ||
                      (stat.count == it->second.count && stat.pmi > it->second.pmi))) {
      it->second = stat;
    }
    model.merges[members] = join(members, '_');
  }
}

CaseClass merged_case(std::span<const Token> members) {
  const CaseClass first = members.front().case_class;
  for (const auto& t : members) {
    if (t.case_class != first) return CaseClass::Mixed;
  }
  return first;
}

// Longest match at `i` among n = max_n..2; returns matched length or 0.
template <typename NormAt, typename BreakAt>
std::size_t match_at(std::size_t i, std::size_t size, std::size_t max_n,
                     const CollocationModel& model, NormAt norm_at, BreakAt break_at,
                     std::vector<std::string>& buf) {
  for (std::size_t n = max_n; n >= 2; --n) {
    if (i + n > size) continue;
    bool ok = true;
    for (std::size_t k = 1; k < n && ok; ++k) ok = !break_at(i + k);
    if (!ok) continue;
    buf.clear();
    for (std::size_t k = 0; k < n; ++k) buf.push_back(norm_at(i + k));
    if (model.merges.contains(buf)) return n;
  }
  return 0;
}

}  // namespace

CollocationModel detect_collocations(std::span<const NormalizedDocument> corpus,
                                     std::size_t min_count, double min_pmi) {
  if (min_count < 2) throw ParameterError("collocation min_count must be >= 2");
  CollocationModel model;
  model.min_count = min_count;
  model.min_pmi = min_pmi;

  Stream stream = units_of(corpus);
  collect(count_pairs(stream, 2), min_count, min_pmi, model);
  if (model.merges.empty()) return model;

  // Second pass: merge the learned bigrams, then pair bigrams with
  // neighbouring unigrams to find trigrams.
  CollocationModel bigrams = model;
  Stream merged;
  merged.reserve(stream.size());
  std::vector<std::string> buf;
  for (auto& units : stream) {
    std::vector<Unit> out;
    for (std::size_t i = 0; i < units.size();) {
      const std::size_t n = match_at(
          i, units.size(), 2, bigrams, [&](std::size_t k) { return units[k].key; },
          [&](std::size_t k) { return units[k].brk; }, buf);
      if (n == 0) {
        out.push_back(std::move(units[i]));
        ++i;
        continue;
      }
      Unit u;
      u.members = {units[i].key, units[i + 1].key};
      u.key = units[i].key + '\x1f' + units[i + 1].key;
      u.brk = units[i].brk;
      out.push_back(std::move(u));
      i += 2;
    }
    merged.push_back(std::move(out));
  }
  collect(count_pairs(merged, 3), min_count, min_pmi, model);
  return model;
}

NormalizedDocument apply_collocations(const NormalizedDocument& ndoc,
                                      const CollocationModel& model) {
  if (model.merges.empty()) return ndoc;
  NormalizedDocument out;
  out.doc_id = ndoc.doc_id;
  std::vector<std::string> buf;
  for (const auto& s : ndoc.sentences) {
    Sentence merged;
    merged.index = s.index;
    const auto& toks = s.tokens;
    for (std::size_t i = 0; i < toks.size();) {
      const std::size_t n = match_at(
          i, toks.size(), 3, model, [&](std::size_t k) { return toks[k].norm; },
          [&](std::size_t k) { return toks[k].follows_break; }, buf);
      if (n == 0) {
        merged.tokens.push_back(toks[i]);
        ++i;
        continue;
      }
      const std::span<const Token> run(toks.data() + i, n);
      Token t;
      t.norm = model.merges.at(buf);
      for (std::size_t k = 0; k < n; ++k) {
        if (k) t.surface.push_back(' ');
        t.surface += run[k].surface;
      }
      t.is_stopword = false;
      t.char_offset = run.front().char_offset;
      t.case_class = merged_case(run);
      t.follows_break = run.front().follows_break;
      merged.tokens.push_back(std::move(t));
      i += n;
    }
    out.token_count += merged.tokens.size();
    out.sentences.push_back(std::move(merged));
  }
  return out;
}

std::vector<std::string> apply_collocations(std::span<const std::string> norms,
                                            const CollocationModel& model) {
  if (model.merges.empty()) return {norms.begin(), norms.end()};
  std::vector<std::string> out;
  std::vector<std::string> buf;
  for (std::size_t i = 0; i < norms.size();) {
    const std::size_t n = match_at(
        i, norms.size(), 3, model, [&](std::size_t k) { return norms[k]; },
        [](std::size_t) { return false; }, buf);
    if (n == 0) {
      out.push_back(norms[i]);
      ++i;
    } else {
      out.push_back(model.merges.at(buf));
      i += n;
    }
  }
  return out;
}

}  // namespace kgraph
