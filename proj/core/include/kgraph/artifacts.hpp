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

// Stage artifact files: corpus.jsonl, normalized.jsonl, keywords.jsonl,
// collocations.json and the overlap report.

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/collocations.hpp"
#include "kgraph/corpus.hpp"
#include "kgraph/keywords.hpp"
#include "kgraph/overlap.hpp"
#include "kgraph/text.hpp"

namespace kgraph {

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for our purposes: truncate + write + check.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// `{"id","text","source","domain"}` per line; readable by ingest(jsonl).
std::string corpus_to_jsonl(const Corpus& corpus);
Corpus read_corpus(const std::filesystem::path& path);

std::string normalized_to_jsonl(std::span<const NormalizedDocument> docs);
std::vector<NormalizedDocument> normalized_from_jsonl(std::string_view text);
std::vector<NormalizedDocument> read_normalized(const std::filesystem::path& path);

struct DocKeywords {
  std::string doc_id;
  std::vector<Keyword> keywords;
};

/// `{"doc_id":..., "keywords":[{"surface","norm","score"}]}` per line.
std::string keywords_to_jsonl(std::span<const DocKeywords> docs);
std::vector<DocKeywords> keywords_from_jsonl(std::string_view text);
std::vector<DocKeywords> read_keywords(const std::filesystem::path& path);

std::string collocations_to_json(const CollocationModel& model);
CollocationModel collocations_from_json(std::string_view text);

std::string overlap_to_json(const OverlapReport& report);
/// Summary fields only; per-document assignments live in the CSV.
OverlapReport overlap_from_json(std::string_view text);
/// `doc_id,label,cluster` with a header row.
std::string assignments_to_csv(const OverlapReport& report);

}  // namespace kgraph
