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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace kgraph {

enum class Source { SmdDefinitions, Arxiv, Wikipedia, Thesaurus, Other };

enum class Domain { Heliophysics, Astrophysics, Planetary, Earth, BioPhysical, Unknown };

std::string_view to_string(Source s) noexcept;
std::string_view to_string(Domain d) noexcept;

/// Parse the lowercase hyphenated names ("smd-definitions", "bio-physical").
/// Throws ParameterError on an unknown name.
Source parse_source(std::string_view name);
Domain parse_domain(std::string_view name);

std::optional<Source> try_parse_source(std::string_view name) noexcept;
std::optional<Domain> try_parse_domain(std::string_view name) noexcept;

struct Document {
  std::string id;
  std::string text;
  Source source = Source::Other;
  std::optional<Domain> domain;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Ordered collection of documents with unique ids. Documents keep
/// insertion order; `provenance()` counts documents per source.
class Corpus {
 public:
  Corpus() = default;

  /// Throws ParameterError if the id is empty or already present.
  void add(Document doc);

  bool contains(std::string_view id) const;

  const std::vector<Document>& documents() const noexcept { return documents_; }
  const std::map<Source, std::size_t>& provenance() const noexcept { return provenance_; }

  std::size_t size() const noexcept { return documents_.size(); }
  bool empty() const noexcept { return documents_.empty(); }

  auto begin() const noexcept { return documents_.begin(); }
  auto end() const noexcept { return documents_.end(); }

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.documents_ == b.documents_;
  }

 private:
  std::vector<Document> documents_;
  std::map<Source, std::size_t> provenance_;
  std::unordered_set<std::string> ids_;
};

enum class InputFormat { Jsonl, Csv, Termlist };

InputFormat parse_input_format(std::string_view name);

struct CsvColumns {
  std::string text;              // required
  std::optional<std::string> id;
  std::optional<std::string> domain;
};

struct IngestOptions {
  InputFormat format = InputFormat::Jsonl;
  Source source = Source::Other;
  std::optional<Domain> domain;
  std::optional<CsvColumns> csv;
  /// Abort on the first malformed record instead of skipping it.
  bool strict = false;
};

struct IngestResult {
  Corpus corpus;
  std::size_t skipped = 0;
  /// One message per skipped record, prefixed with its line number.
  std::vector<std::string> problems;
};

/// Read one file into a corpus. Ids missing from the input are synthesized
/// as "<source>-<ordinal>" with a 1-based record ordinal. Throws IoError on
/// an unreadable path and, in strict mode, FormatError on the first bad record.
IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options);

/// Same as above but appends into an existing corpus; ids must stay unique
/// across both.
IngestResult ingest_into(Corpus corpus, const std::filesystem::path& path,
                         const IngestOptions& options);

/// RFC 4180 record splitter (quoted fields, doubled quotes, embedded
/// newlines). Each record carries the 1-based line it started on.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRecord> parse_csv(std::string_view text);

}  // namespace kgraph
