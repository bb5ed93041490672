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

#include "kgraph/vectors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

Vec Vec::dense(std::span<const double> components) {
  Vec v(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] != 0.0) {
      v.indices_.push_back(static_cast<std::uint32_t>(i));
      v.values_.push_back(components[i]);
    }
  }
  return v;
}

Vec Vec::sparse(std::size_t dim, std::vector<std::uint32_t> indices, std::vector<double> values) {
  if (indices.size() != values.size()) throw ParameterError("sparse vector size mismatch");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= dim || (i > 0 && indices[i] <= indices[i - 1]))
      throw ParameterError("sparse vector indices must be increasing and < dim");
  }
  Vec v(dim);
  v.indices_ = std::move(indices);
  v.values_ = std::move(values);
  return v;
}

std::vector<double> Vec::components() const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < indices_.size(); ++i) out[indices_[i]] = values_[i];
  return out;
}

double Vec::norm() const noexcept {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return std::sqrt(s);
}

void Vec::normalize() noexcept {
  const double n = norm();
  if (n == 0.0) return;
  for (double& x : values_) x /= n;
}

double dot(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) {
    throw ParameterError("vector dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
  }
  const auto ui = u.indices();
  const auto vi = v.indices();
  const auto uv = u.values();
  const auto vv = v.values();
  double s = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < ui.size() && b < vi.size()) {
    if (ui[a] == vi[b]) {
      s += uv[a++] * vv[b++];
    } else if (ui[a] < vi[b]) {
      ++a;
    } else {
      ++b;
    }
  }
  return s;
}

double cosine(const Vec& u, const Vec& v) {
  const double d = dot(u, v);
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(d / (nu * nv), -1.0, 1.0);
}

std::string_view to_string(SpaceKind k) noexcept {
  return k == SpaceKind::External ? "external" : "tfidf-corpus";
}

VectorSpace VectorSpace::build_tfidf(std::span<const NormalizedDocument> corpus) {
  if (corpus.empty()) throw ParameterError("cannot build TF-IDF space from an empty corpus");
  std::map<std::string, std::size_t> df;
  std::set<std::string_view> seen;
  for (const auto& doc : corpus) {
    seen.clear();
    for (const auto& s : doc.sentences) {
      for (const auto& t : s.tokens) {
        if (!t.is_stopword) seen.insert(t.norm);
      }
    }
    for (auto term : seen) ++df[std::string(term)];
  }
  VectorSpace space;
  space.kind_ = SpaceKind::TfidfCorpus;
  const double n = static_cast<double>(corpus.size());
  for (auto& [term, count] : df) {
    space.index_.emplace(term, space.terms_.size());
    space.terms_.push_back(term);
    space.idf_.push_back(std::log(n / static_cast<double>(count)));
  }
  space.dim_ = std::max<std::size_t>(space.terms_.size(), 1);
  return space;
}

VectorSpace VectorSpace::external(std::vector<std::string> terms, std::size_t dim,
                                  std::vector<double> vectors) {
  if (dim == 0) throw ParameterError("external vectors need dim > 0");
  if (vectors.size() != terms.size() * dim)
    throw ParameterError("external vector data does not match terms * dim");
  VectorSpace space;
  space.kind_ = SpaceKind::External;
  space.dim_ = dim;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!std::all_of(vectors.begin() + static_cast<std::ptrdiff_t>(i * dim),
                     vectors.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim),
                     [](double x) { return std::isfinite(x); })) {
      throw ParameterError("non-finite component for '" + terms[i] + "'");
    }
    auto [it, inserted] = space.index_.try_emplace(terms[i], space.terms_.size());
    const auto src = vectors.begin() + static_cast<std::ptrdiff_t>(i * dim);
    if (inserted) {
      space.terms_.push_back(terms[i]);
      space.vectors_.insert(space.vectors_.end(), src, src + static_cast<std::ptrdiff_t>(dim));
    } else {
      std::copy(src, src + static_cast<std::ptrdiff_t>(dim),
                space.vectors_.begin() + static_cast<std::ptrdiff_t>(it->second * dim));
    }
  }
  return space;
}

std::optional<std::size_t> VectorSpace::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const double> VectorSpace::row(std::size_t index) const {
  if (kind_ != SpaceKind::External || index >= terms_.size())
    throw ParameterError("row() needs an external space and a valid index");
  return std::span<const double>(vectors_).subspan(index * dim_, dim_);
}

Vec VectorSpace::embed(std::span<const std::string> tokens) const {
  if (kind_ == SpaceKind::TfidfCorpus) {
    std::map<std::uint32_t, double> tf;
    for (const auto& t : tokens) {
      if (auto idx = index_of(t)) tf[static_cast<std::uint32_t>(*idx)] += 1.0;
    }
    std::vector<std::uint32_t> indices;
    std::vector<double> values;
    for (auto [idx, count] : tf) {
      const double w = count * idf_[idx];
      if (w == 0.0) continue;
      indices.push_back(idx);
      values.push_back(w);
    }
    Vec v = Vec::sparse(dim_, std::move(indices), std::move(values));
    v.normalize();
    return v;
  }
  std::vector<double> sum(dim_, 0.0);
  std::size_t found = 0;
  for (const auto& t : tokens) {
    auto idx = index_of(t);
    if (!idx) continue;
    const auto r = row(*idx);
    for (std::size_t j = 0; j < dim_; ++j) sum[j] += r[j];
    ++found;
  }
  if (found == 0) return Vec(dim_);
  for (double& x : sum) x /= static_cast<double>(found);
  Vec v = Vec::dense(sum);
  v.normalize();
  return v;
}

std::vector<std::string> split_phrase(std::string_view norm) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < norm.size()) {
    auto sp = norm.find(' ', pos);
    if (sp == std::string_view::npos) sp = norm.size();
    if (sp > pos) out.emplace_back(norm.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

std::vector<std::string> content_norms(const NormalizedDocument& ndoc) {
  std::vector<std::string> out;
  out.reserve(ndoc.token_count);
  for (const auto& s : ndoc.sentences) {
    for (const auto& t : s.tokens) {
      if (!t.is_stopword) out.push_back(t.norm);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool parse_size(std::string_view s, std::size_t& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

VectorSpace parse_external_vectors(std::string_view text, VectorLoadStats* stats) {
  std::vector<std::string> terms;
  std::vector<double> data;
  std::size_t dim = 0;
  bool header = false;
  std::set<std::string> seen;
  std::size_t duplicates = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto f = fields_of(line);
    if (f.empty()) continue;

    if (terms.empty() && !header && dim == 0 && f.size() == 2) {
      std::size_t count = 0;
      std::size_t d = 0;
      if (parse_size(f[0], count) && parse_size(f[1], d)) {
        if (d == 0) throw FormatError("header declares dimension 0", line_no);
        header = true;
        dim = d;
        continue;
      }
    }
    if (dim == 0) dim = f.size() - 1;
    if (dim == 0) throw FormatError("line has a token but no components", line_no);
    if (f.size() - 1 != dim) {
      throw FormatError("expected " + std::to_string(dim) + " components, found " +
                            std::to_string(f.size() - 1),
                        line_no);
    }
    std::string term(f[0]);
    if (!seen.insert(term).second) ++duplicates;
    terms.push_back(std::move(term));
    for (std::size_t j = 1; j < f.size(); ++j) {
      double x = 0.0;
      if (!parse_double(f[j], x)) {
        throw FormatError("component " + std::to_string(j) + " is not a finite number",
                          line_no);
      }
      data.push_back(x);
    }
  }
  if (terms.empty()) throw FormatError("no vectors found");
  if (stats) {
    stats->duplicates = duplicates;
    stats->had_header = header;
  }
  return VectorSpace::external(std::move(terms), dim, std::move(data));
}

VectorSpace load_external_vectors(const std::filesystem::path& path, VectorLoadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read vector file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_external_vectors(buf.str(), stats);
}

void write_external_vectors(const VectorSpace& space, const std::filesystem::path& path) {
  if (space.kind() != SpaceKind::External)
    throw ParameterError("only external spaces can be written in token-vector format");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write vector file", path.string());
  out << space.vocabulary_size() << ' ' << space.dim() << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < space.vocabulary_size(); ++i) {
    out << space.term(i);
    for (double x : space.row(i)) out << ' ' << x;
    out << '\n';
  }
  if (!out) throw IoError("failed writing vector file", path.string());
}

}  // namespace kgraph
