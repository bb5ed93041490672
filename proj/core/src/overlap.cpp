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

#include "kgraph/overlap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "kgraph/error.hpp"
#include "kgraph/parallel.hpp"

namespace kgraph {

namespace {

using Counts = std::map<std::string, std::size_t>;

Counts vocabulary_counts(std::span<const NormalizedDocument> docs) {
  Counts counts;
  for (const auto& d : docs) {
    for (const auto& s : d.sentences) {
      for (const auto& t : s.tokens) {
        if (!t.is_stopword) ++counts[t.norm];
      }
    }
  }
  return counts;
}

double jaccard(const Counts& a, const Counts& b) {
  std::size_t inter = 0;
  for (const auto& [term, n] : a) inter += b.contains(term) ? 1 : 0;
  const std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<SharedTerm> shared(const Counts& a, const Counts& b) {
  std::vector<SharedTerm> out;
  for (const auto& [term, n] : a) {
    auto it = b.find(term);
    if (it != b.end()) out.push_back({term, n, it->second});
  }
  std::sort(out.begin(), out.end(), [](const SharedTerm& x, const SharedTerm& y) {
    const auto mx = std::min(x.count_a, x.count_b);
    const auto my = std::min(y.count_a, y.count_b);
    if (mx != my) return mx > my;
    return x.term < y.term;
  });
  return out;
}

// For each term in `terms`, counts of the other non-stopword norms that
// share a sentence with one of its occurrences.
std::map<std::string, Counts> sentence_contexts(std::span<const NormalizedDocument> docs,
                                                const std::set<std::string>& terms) {
  std::map<std::string, Counts> contexts;
  std::vector<const std::string*> content;
  for (const auto& d : docs) {
    for (const auto& s : d.sentences) {
      content.clear();
      for (const auto& t : s.tokens) {
        if (!t.is_stopword) content.push_back(&t.norm);
      }
      for (const auto* term : content) {
        if (!terms.contains(*term)) continue;
        auto& ctx = contexts[*term];
        for (const auto* other : content) {
          if (*other != *term) ++ctx[*other];
        }
      }
    }
  }
  return contexts;
}

Vec context_vector(const Counts& ctx, const VectorSpace& space,
                   std::unordered_map<std::string, Vec>& cache) {
  std::map<std::uint32_t, double> acc;
  for (const auto& [norm, n] : ctx) {
    auto it = cache.find(norm);
    if (it == cache.end()) {
      const std::string tokens[] = {norm};
      it = cache.emplace(norm, space.embed(tokens)).first;
    }
    const Vec& v = it->second;
    for (std::size_t i = 0; i < v.nonzeros(); ++i) {
      acc[v.indices()[i]] += static_cast<double>(n) * v.values()[i];
    }
  }
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  for (auto [i, x] : acc) {
    if (x == 0.0) continue;
    idx.push_back(i);
    val.push_back(x);
  }
  Vec out = Vec::sparse(space.dim(), std::move(idx), std::move(val));
  out.normalize();
  return out;
}

}  // namespace

FeatureMatrix featurize(std::span<const NormalizedDocument> ndocs, const VectorSpace& space,
                        std::span<const std::string> labels, unsigned workers) {
  if (!labels.empty() && labels.size() != ndocs.size())
    throw ParameterError("labels must align with documents");
  FeatureMatrix m;
  m.rows = ndocs.size();
  m.dim = space.dim();
  m.data.assign(m.rows * m.dim, 0.0);
  m.labels.assign(labels.begin(), labels.end());
  m.doc_ids.reserve(m.rows);
  for (const auto& d : ndocs) m.doc_ids.push_back(d.doc_id);
  parallel_for(m.rows, workers, [&](std::size_t i) {
    std::vector<std::string> norms;
    norms.reserve(ndocs[i].token_count);
    for (const auto& s : ndocs[i].sentences) {
      for (const auto& t : s.tokens) norms.push_back(t.norm);
    }
    const Vec v = space.embed(norms);
    double* row = m.data.data() + i * m.dim;
    for (std::size_t n = 0; n < v.nonzeros(); ++n) row[v.indices()[n]] = v.values()[n];
  });
  return m;
}

double jaccard_vocab(std::span<const NormalizedDocument> a,
                     std::span<const NormalizedDocument> b) {
  return jaccard(vocabulary_counts(a), vocabulary_counts(b));
}

std::vector<SharedTerm> shared_terms(std::span<const NormalizedDocument> a,
                                     std::span<const NormalizedDocument> b) {
  return shared(vocabulary_counts(a), vocabulary_counts(b));
}

OverlapReport overlap_report(std::span<const NormalizedDocument> corpus_a,
                             std::span<const NormalizedDocument> corpus_b,
                             const VectorSpace& space, const OverlapConfig& cfg) {
  if (corpus_a.empty() || corpus_b.empty())
    throw ParameterError("overlap needs two nonempty corpora");

  OverlapReport report;
  report.docs_a = corpus_a.size();
  report.docs_b = corpus_b.size();

  std::vector<NormalizedDocument> pooled(corpus_a.begin(), corpus_a.end());
  pooled.insert(pooled.end(), corpus_b.begin(), corpus_b.end());
  report.labels.assign(corpus_a.size(), cfg.label_a);
  report.labels.insert(report.labels.end(), corpus_b.size(), cfg.label_b);

  const FeatureMatrix m = featurize(pooled, space, report.labels, cfg.kmeans.workers);
  KMeansOptions km = cfg.kmeans;
  km.k = 2;
  const ClusterModel model = kmeans(m, km);
  report.doc_ids = m.doc_ids;
  report.assignments = model.assignments;
  report.accuracy = best_map_accuracy(model.assignments, report.labels);
  report.purity = purity(model.assignments, report.labels);
  report.inertia = model.inertia;
  report.iterations = model.iterations;

  const Counts va = vocabulary_counts(corpus_a);
  const Counts vb = vocabulary_counts(corpus_b);
  report.jaccard_vocab = jaccard(va, vb);
  report.shared_terms = shared(va, vb);

  std::set<std::string> frequent;
  for (const auto& st : report.shared_terms) {
    if (st.count_a >= cfg.homonym_min_count && st.count_b >= cfg.homonym_min_count)
      frequent.insert(st.term);
  }
  if (!frequent.empty()) {
    const auto ctx_a = sentence_contexts(corpus_a, frequent);
    const auto ctx_b = sentence_contexts(corpus_b, frequent);
    std::unordered_map<std::string, Vec> cache;
    for (const auto& st : report.shared_terms) {
      if (!frequent.contains(st.term)) continue;
      const auto ia = ctx_a.find(st.term);
      const auto ib = ctx_b.find(st.term);
      const Vec a = ia == ctx_a.end() ? Vec(space.dim()) : context_vector(ia->second, space, cache);
      const Vec b = ib == ctx_b.end() ? Vec(space.dim()) : context_vector(ib->second, space, cache);
      const double c = cosine(a, b);
      if (c < cfg.homonym_ceiling) {
        report.homonym_candidates.push_back({st.term, c, st.count_a, st.count_b});
      }
    }
    std::sort(report.homonym_candidates.begin(), report.homonym_candidates.end(),
              [](const HomonymCandidate& x, const HomonymCandidate& y) {
                if (x.context_cosine != y.context_cosine)
                  return x.context_cosine < y.context_cosine;
                return x.term < y.term;
              });
  }
  return report;
}

}  // namespace kgraph
