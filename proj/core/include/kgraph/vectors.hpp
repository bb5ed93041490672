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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgraph/text.hpp"

namespace kgraph {

/// Vector in a VectorSpace. Stored sparsely (sorted indices, nonzero
/// values); `components()` gives the dense view of length `dim()`.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : dim_(dim) {}
  /// Dense construction; zeros are dropped.
  static Vec dense(std::span<const double> components);
  /// Entries must have strictly increasing indices < dim.
  static Vec sparse(std::size_t dim, std::vector<std::uint32_t> indices,
                    std::vector<double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nonzeros() const noexcept { return indices_.size(); }
  std::span<const std::uint32_t> indices() const noexcept { return indices_; }
  std::span<const double> values() const noexcept { return values_; }

  std::vector<double> components() const;
  double norm() const noexcept;
  bool is_zero() const noexcept { return indices_.empty(); }

  /// Scale to unit L2 norm; a zero vector stays zero.
  void normalize() noexcept;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint32_t> indices_;
  std::vector<double> values_;
};

double dot(const Vec& u, const Vec& v);

/// dot(u,v) / (|u||v|), 0 when either norm is 0. Throws ParameterError on a
/// dimension mismatch.
double cosine(const Vec& u, const Vec& v);

enum class SpaceKind { TfidfCorpus, External };

std::string_view to_string(SpaceKind k) noexcept;

class VectorSpace {
 public:
  /// idf(t) = ln(N / df(t)) over the non-stopword norms of `corpus`.
  /// Vocabulary is sorted so column indices are reproducible.
  /// Throws ParameterError on an empty corpus.
  static VectorSpace build_tfidf(std::span<const NormalizedDocument> corpus);

  /// Row-major `vectors` of size terms.size() * dim. A repeated term keeps
  /// its last row.
  static VectorSpace external(std::vector<std::string> terms, std::size_t dim,
                              std::vector<double> vectors);

  SpaceKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t vocabulary_size() const noexcept { return terms_.size(); }

  std::optional<std::size_t> index_of(std::string_view term) const;
  const std::string& term(std::size_t index) const { return terms_.at(index); }
  std::span<const std::string> terms() const noexcept { return terms_; }

  /// TF-IDF spaces only.
  double idf(std::size_t index) const { return idf_.at(index); }
  std::span<const double> idf_values() const noexcept { return idf_; }
  /// External spaces only.
  std::span<const double> row(std::size_t index) const;

  /// TF-IDF: tf * idf over the vocabulary. External: mean of member
  /// vectors. Out-of-vocabulary tokens are ignored. Result is unit length
  /// or exactly zero.
  Vec embed(std::span<const std::string> tokens) const;

 private:
  SpaceKind kind_ = SpaceKind::TfidfCorpus;
  std::size_t dim_ = 0;
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> idf_;
  std::vector<double> vectors_;
};

inline VectorSpace build_tfidf(std::span<const NormalizedDocument> corpus) {
  return VectorSpace::build_tfidf(corpus);
}

inline Vec embed_text(const VectorSpace& space, std::span<const std::string> tokens) {
  return space.embed(tokens);
}

/// Splits a keyword/node norm on spaces.
std::vector<std::string> split_phrase(std::string_view norm);

/// Non-stopword token norms of a document, in order.
std::vector<std::string> content_norms(const NormalizedDocument& ndoc);

struct VectorLoadStats {
  std::size_t duplicates = 0;
  bool had_header = false;
};

/// Whitespace-separated text format: optional "<count> <dim>" header, then
/// "<token> v1 ... vdim" per line. Without a header the first line fixes
/// dim. Throws FormatError (with line number) on inconsistent dimensions,
/// non-numeric components, or an empty file.
VectorSpace load_external_vectors(const std::filesystem::path& path,
                                  VectorLoadStats* stats = nullptr);
VectorSpace parse_external_vectors(std::string_view text, VectorLoadStats* stats = nullptr);

/// Writes an external space in the format above, with header.
void write_external_vectors(const VectorSpace& space, const std::filesystem::path& path);

}  // namespace kgraph
