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

#include "kgraph/artifacts.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

namespace {

using nlohmann::json;

constexpr auto kDumpIndent = -1;

std::string dump_line(const json& j) {
  return j.dump(kDumpIndent, ' ', false, json::error_handler_t::replace) + "\n";
}

/// Calls `fn(object, line)` for every nonblank line of a JSONL text.
template <typename Fn>
void for_each_jsonl(std::string_view text, Fn fn) {
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.find_first_not_of(" \t") == std::string_view::npos) continue;
    json j;
    try {
      j = json::parse(row);
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), line);
    }
    if (!j.is_object()) throw FormatError("expected a JSON object", line);
    try {
      fn(j, line);
    } catch (const json::exception& e) {
      throw FormatError(std::string("bad record: ") + e.what(), line);
    }
  }
}

json token_to_json(const Token& t) {
  return {{"surface", t.surface},
          {"norm", t.norm},
          {"stopword", t.is_stopword},
          {"offset", t.char_offset},
          {"case", to_string(t.case_class)},
          {"break", t.follows_break}};
}

Token token_from_json(const json& j) {
  Token t;
  t.surface = j.at("surface").get<std::string>();
  t.norm = j.at("norm").get<std::string>();
  t.is_stopword = j.at("stopword").get<bool>();
  t.char_offset = j.at("offset").get<std::size_t>();
  t.case_class = parse_case_class(j.at("case").get<std::string>());
  t.follows_break = j.value("break", false);
  return t;
}

json phrase_key(const std::vector<std::string>& parts) { return json(parts); }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write", path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing", path.string());
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& d : corpus.documents()) {
    json j = {{"id", d.id}, {"text", d.text}, {"source", to_string(d.source)}};
    if (d.domain) j["domain"] = to_string(*d.domain);
    out += dump_line(j);
  }
  return out;
}

Corpus read_corpus(const std::filesystem::path& path) {
  IngestOptions opts;
  opts.format = InputFormat::Jsonl;
  opts.strict = true;
  return ingest(path, opts).corpus;
}

std::string normalized_to_jsonl(std::span<const NormalizedDocument> docs) {
  std::string out;
  for (const auto& d : docs) {
    json sentences = json::array();
    for (const auto& s : d.sentences) {
      json tokens = json::array();
      for (const auto& t : s.tokens) tokens.push_back(token_to_json(t));
      sentences.push_back({{"index", s.index}, {"tokens", std::move(tokens)}});
    }
    out += dump_line({{"doc_id", d.doc_id},
                      {"token_count", d.token_count},
                      {"sentences", std::move(sentences)}});
  }
  return out;
}

std::vector<NormalizedDocument> normalized_from_jsonl(std::string_view text) {
  std::vector<NormalizedDocument> docs;
  for_each_jsonl(text, [&](const json& j, std::size_t line) {
    NormalizedDocument d;
    d.doc_id = j.at("doc_id").get<std::string>();
    d.token_count = j.at("token_count").get<std::size_t>();
    std::size_t counted = 0;
    for (const auto& s : j.at("sentences")) {
      Sentence sent;
      sent.index = s.at("index").get<std::size_t>();
      for (const auto& t : s.at("tokens")) sent.tokens.push_back(token_from_json(t));
      counted += sent.tokens.size();
      d.sentences.push_back(std::move(sent));
    }
    if (counted != d.token_count)
      throw FormatError("token_count does not match the tokens present", line);
    docs.push_back(std::move(d));
  });
  return docs;
}

std::vector<NormalizedDocument> read_normalized(const std::filesystem::path& path) {
  return normalized_from_jsonl(read_file(path));
}

std::string keywords_to_jsonl(std::span<const DocKeywords> docs) {
  std::string out;
  for (const auto& d : docs) {
    json kws = json::array();
    for (const auto& k : d.keywords) {
      kws.push_back({{"surface", k.surface},
                     {"norm", k.norm},
                     {"score", k.score},
                     {"term_count", k.term_count}});
    }
    out += dump_line({{"doc_id", d.doc_id}, {"keywords", std::move(kws)}});
  }
  return out;
}

std::vector<DocKeywords> keywords_from_jsonl(std::string_view text) {
  std::vector<DocKeywords> docs;
  for_each_jsonl(text, [&](const json& j, std::size_t) {
    DocKeywords d;
    d.doc_id = j.at("doc_id").get<std::string>();
    for (const auto& k : j.at("keywords")) {
      Keyword kw;
      kw.surface = k.at("surface").get<std::string>();
      kw.norm = k.at("norm").get<std::string>();
      kw.score = k.at("score").get<double>();
      kw.term_count = k.value("term_count", std::size_t{1});
      d.keywords.push_back(std::move(kw));
    }
    docs.push_back(std::move(d));
  });
  return docs;
}

std::vector<DocKeywords> read_keywords(const std::filesystem::path& path) {
  return keywords_from_jsonl(read_file(path));
}

std::string collocations_to_json(const CollocationModel& model) {
  json merges = json::array();
  for (const auto& [parts, joined] : model.merges) {
    json m = {{"parts", phrase_key(parts)}, {"norm", joined}};
    auto it = model.stats.find(parts);
    if (it != model.stats.end()) {
      m["count"] = it->second.count;
      m["pmi"] = it->second.pmi;
    }
    merges.push_back(std::move(m));
  }
  json j = {{"min_count", model.min_count}, {"min_pmi", model.min_pmi}, {"merges", std::move(merges)}};
  return j.dump(1) + "\n";
}

CollocationModel collocations_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid collocation JSON: ") + e.what(), 0);
  }
  CollocationModel model;
  try {
    model.min_count = j.at("min_count").get<std::size_t>();
    model.min_pmi = j.at("min_pmi").get<double>();
    for (const auto& m : j.at("merges")) {
      auto parts = m.at("parts").get<std::vector<std::string>>();
      if (parts.size() < 2) throw FormatError("collocation needs at least two parts", 0);
      if (m.contains("count")) {
        model.stats[parts] = {m.at("count").get<std::size_t>(), m.at("pmi").get<double>()};
      }
      model.merges[std::move(parts)] = m.at("norm").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad collocation model: ") + e.what(), 0);
  }
  return model;
}

std::string overlap_to_json(const OverlapReport& r) {
  json shared = json::array();
  for (const auto& s : r.shared_terms) {
    shared.push_back({{"term", s.term}, {"count_a", s.count_a}, {"count_b", s.count_b}});
  }
  json homonyms = json::array();
  for (const auto& h : r.homonym_candidates) {
    homonyms.push_back({{"term", h.term},
                        {"context_cosine", h.context_cosine},
                        {"count_a", h.count_a},
                        {"count_b", h.count_b}});
  }
  json j = {{"accuracy", r.accuracy},
            {"purity", r.purity},
            {"inertia", r.inertia},
            {"iterations", r.iterations},
            {"docs_a", r.docs_a},
            {"docs_b", r.docs_b},
            {"jaccard_vocab", r.jaccard_vocab},
            {"shared_terms", std::move(shared)},
            {"homonym_candidates", std::move(homonyms)}};
  return j.dump(1) + "\n";
}

OverlapReport overlap_from_json(std::string_view text) {
  OverlapReport r;
  try {
    const json j = json::parse(text);
    r.accuracy = j.at("accuracy").get<double>();
    r.purity = j.at("purity").get<double>();
    r.inertia = j.at("inertia").get<double>();
    r.iterations = j.at("iterations").get<std::size_t>();
    r.docs_a = j.at("docs_a").get<std::size_t>();
    r.docs_b = j.at("docs_b").get<std::size_t>();
    r.jaccard_vocab = j.at("jaccard_vocab").get<double>();
    for (const auto& s : j.at("shared_terms")) {
      r.shared_terms.push_back({s.at("term").get<std::string>(), s.at("count_a").get<std::size_t>(),
                                s.at("count_b").get<std::size_t>()});
    }
    for (const auto& h : j.at("homonym_candidates")) {
      r.homonym_candidates.push_back(
          {h.at("term").get<std::string>(), h.at("context_cosine").get<double>(),
           h.at("count_a").get<std::size_t>(), h.at("count_b").get<std::size_t>()});
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad overlap report: ") + e.what(), 0);
  }
  return r;
}

std::string assignments_to_csv(const OverlapReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    return out + "\"";
  };
  std::string out = "doc_id,label,cluster\n";
  for (std::size_t i = 0; i < r.doc_ids.size(); ++i) {
    out += quote(r.doc_ids[i]) + "," + quote(r.labels[i]) + "," + std::to_string(r.assignments[i]) + "\n";
  }
  return out;
}

}  // namespace kgraph
