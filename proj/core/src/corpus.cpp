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

#include "kgraph/corpus.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

namespace {

constexpr std::array<std::pair<Source, std::string_view>, 5> kSourceNames{{
    {Source::SmdDefinitions, "smd-definitions"},
    {Source::Arxiv, "arxiv"},
    {Source::Wikipedia, "wikipedia"},
    {Source::Thesaurus, "thesaurus"},
    {Source::Other, "other"},
}};

constexpr std::array<std::pair<Domain, std::string_view>, 6> kDomainNames{{
    {Domain::Heliophysics, "heliophysics"},
    {Domain::Astrophysics, "astrophysics"},
    {Domain::Planetary, "planetary"},
    {Domain::Earth, "earth"},
    {Domain::BioPhysical, "bio-physical"},
    {Domain::Unknown, "unknown"},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  return text;
}

// Splits on '\n' keeping 1-based line numbers; strips a trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    pos = nl + 1;
  }
}

class Ingester {
 public:
  Ingester(Corpus corpus, const IngestOptions& options)
      : options_(options), base_(corpus.size()) {
    result_.corpus = std::move(corpus);
  }

  void bad_record(std::size_t line, const std::string& why) {
    if (options_.strict) throw FormatError(why, line);
    ++result_.skipped;
    result_.problems.push_back("line " + std::to_string(line) + ": " + why);
  }

  // Ordinals continue after any documents already in the corpus so that
  // appended files do not collide.
  std::string synthesize_id(Source source) const {
    return std::string(to_string(source)) + "-" + std::to_string(base_ + ordinal_);
  }

  void add(std::size_t line, Document doc) {
    if (doc.id.empty()) doc.id = synthesize_id(doc.source);
    if (result_.corpus.contains(doc.id)) {
      bad_record(line, "duplicate id '" + doc.id + "'");
      return;
    }
    result_.corpus.add(std::move(doc));
  }

  void next_record() { ++ordinal_; }

  IngestResult take() { return std::move(result_); }

  const IngestOptions& options() const { return options_; }

 private:
  const IngestOptions& options_;
  IngestResult result_;
  std::size_t base_ = 0;
  std::size_t ordinal_ = 0;
};

void ingest_jsonl(std::string_view text, Ingester& ing) {
  const auto& opt = ing.options();
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty()) return;
    ing.next_record();
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      ing.bad_record(line_no, std::string("invalid JSON: ") + e.what());
      return;
    }
    if (!rec.is_object()) {
      ing.bad_record(line_no, "record is not a JSON object");
      return;
    }
    Document doc;
    doc.source = opt.source;
    doc.domain = opt.domain;

    auto text_it = rec.find("text");
    if (text_it == rec.end() || !text_it->is_string()) {
      ing.bad_record(line_no, "missing string field 'text'");
      return;
    }
    doc.text = text_it->get<std::string>();

    if (auto it = rec.find("id"); it != rec.end() && !it->is_null()) {
      if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
        ing.bad_record(line_no, "field 'id' must be a nonempty string");
        return;
      }
      doc.id = it->get<std::string>();
    }
    if (auto it = rec.find("source"); it != rec.end() && !it->is_null()) {
      auto parsed = it->is_string() ? try_parse_source(it->get_ref<const std::string&>())
                                    : std::nullopt;
      if (!parsed) {
        ing.bad_record(line_no, "unknown source " + it->dump());
        return;
      }
      doc.source = *parsed;
    }
    if (auto it = rec.find("domain"); it != rec.end() && !it->is_null()) {
      auto parsed = it->is_string() ? try_parse_domain(it->get_ref<const std::string&>())
                                    : std::nullopt;
      if (!parsed) {
        ing.bad_record(line_no, "unknown domain " + it->dump());
        return;
      }
      doc.domain = *parsed;
    }
    ing.add(line_no, std::move(doc));
  });
}

void ingest_csv(std::string_view text, Ingester& ing) {
  const auto& opt = ing.options();
  if (!opt.csv) throw ParameterError("csv ingestion needs a column mapping (--text-col)");
  if (trim(text).empty()) return;

  const auto records = parse_csv(text);
  if (records.empty()) return;
  const auto& header = records.front().fields;
  auto column = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (trim(header[i]) == name) return i;
    }
    throw FormatError("header has no column '" + name + "'", records.front().line);
  };
  const std::size_t text_col = column(opt.csv->text);
  const std::optional<std::size_t> id_col =
      opt.csv->id ? std::optional(column(*opt.csv->id)) : std::nullopt;
  const std::optional<std::size_t> domain_col =
      opt.csv->domain ? std::optional(column(*opt.csv->domain)) : std::nullopt;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() == 1 && trim(rec.fields[0]).empty()) continue;  // blank line
    ing.next_record();
    if (rec.fields.size() != header.size()) {
      ing.bad_record(rec.line, "expected " + std::to_string(header.size()) + " fields, got " +
                                   std::to_string(rec.fields.size()));
      continue;
    }
    Document doc;
    doc.source = opt.source;
    doc.domain = opt.domain;
    doc.text = rec.fields[text_col];
    if (id_col) doc.id = std::string(trim(rec.fields[*id_col]));
    if (domain_col) {
      const auto value = trim(rec.fields[*domain_col]);
      if (!value.empty()) {
        auto parsed = try_parse_domain(value);
        if (!parsed) {
          ing.bad_record(rec.line, "unknown domain '" + std::string(value) + "'");
          continue;
        }
        doc.domain = *parsed;
      }
    }
    ing.add(rec.line, std::move(doc));
  }
}

void ingest_termlist(std::string_view text, Ingester& ing) {
  const auto& opt = ing.options();
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto term = trim(line);
    if (term.empty() || term.front() == '#') return;
    ing.next_record();
    Document doc;
    doc.text = std::string(term);
    doc.source = opt.source;
    doc.domain = opt.domain;
    ing.add(line_no, std::move(doc));
  });
}

}  // namespace

std::string_view to_string(Source s) noexcept {
  for (const auto& [v, name] : kSourceNames) {
    if (v == s) return name;
  }
  return "other";
}

std::string_view to_string(Domain d) noexcept {
  for (const auto& [v, name] : kDomainNames) {
    if (v == d) return name;
  }
  return "unknown";
}

std::optional<Source> try_parse_source(std::string_view name) noexcept {
  for (const auto& [v, n] : kSourceNames) {
    if (n == name) return v;
  }
  return std::nullopt;
}

std::optional<Domain> try_parse_domain(std::string_view name) noexcept {
  for (const auto& [v, n] : kDomainNames) {
    if (n == name) return v;
  }
  return std::nullopt;
}

Source parse_source(std::string_view name) {
  if (auto s = try_parse_source(name)) return *s;
  throw ParameterError("unknown source '" + std::string(name) + "'");
}

Domain parse_domain(std::string_view name) {
  if (auto d = try_parse_domain(name)) return *d;
  throw ParameterError("unknown domain '" + std::string(name) + "'");
}

InputFormat parse_input_format(std::string_view name) {
  if (name == "jsonl") return InputFormat::Jsonl;
  if (name == "csv") return InputFormat::Csv;
  if (name == "termlist") return InputFormat::Termlist;
  throw ParameterError("unknown input format '" + std::string(name) + "'");
}

void Corpus::add(Document doc) {
  if (doc.id.empty()) throw ParameterError("document id must be nonempty");
  if (!ids_.insert(doc.id).second) throw ParameterError("duplicate document id '" + doc.id + "'");
  ++provenance_[doc.source];
  documents_.push_back(std::move(doc));
}

bool Corpus::contains(std::string_view id) const { return ids_.contains(std::string(id)); }

std::vector<CsvRecord> parse_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  std::size_t line = 1;
  current.line = 1;
  bool in_quotes = false;
  bool field_quoted = false;
  std::size_t quote_line = 0;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(current));
    current = CsvRecord{};
    current.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_quoted) {
          in_quotes = true;
          field_quoted = true;
          quote_line = line;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field.push_back(c);
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) throw FormatError("unterminated quoted field", quote_line);
  if (!field.empty() || !current.fields.empty() || field_quoted) end_record();
  return records;
}

IngestResult ingest_into(Corpus corpus, const std::filesystem::path& path,
                         const IngestOptions& options) {
  const std::string text = slurp(path);
  Ingester ing(std::move(corpus), options);
  switch (options.format) {
    case InputFormat::Jsonl:
      ingest_jsonl(text, ing);
      break;
    case InputFormat::Csv:
      ingest_csv(text, ing);
      break;
    case InputFormat::Termlist:
      ingest_termlist(text, ing);
      break;
  }
  return ing.take();
}

IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options) {
  return ingest_into(Corpus{}, path, options);
}

}  // namespace kgraph
