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

#include "kgraph/config.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "json.hpp"

#include "kgraph/artifacts.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

namespace {

using nlohmann::json;

std::string describe(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return "null";
    case json::value_t::boolean: return "a boolean";
    case json::value_t::string: return "a string";
    case json::value_t::array: return "an array";
    case json::value_t::object: return "an object";
    default: return "a number";
  }
}

/// Reads one JSON object, rejecting keys that no handler claims.
class Section {
 public:
  Section(const json& j, std::string prefix) : j_(j), prefix_(std::move(prefix)) {
    if (!j_.is_object()) throw ConfigError(name(), "must be an object, got " + describe(j_));
  }

  void on(const std::string& key, std::function<void(const json&, const std::string&)> fn) {
    handlers_.emplace(key, std::move(fn));
  }

  void run() {
    for (const auto& [key, value] : j_.items()) {
      auto it = handlers_.find(key);
      if (it == handlers_.end()) throw ConfigError(field(key), "unknown key");
      it->second(value, field(key));
    }
  }

  std::string field(const std::string& key) const {
    return prefix_.empty() ? key : prefix_ + "." + key;
  }

 private:
  std::string name() const { return prefix_.empty() ? "<root>" : prefix_; }

  const json& j_;
  std::string prefix_;
  std::map<std::string, std::function<void(const json&, const std::string&)>> handlers_;
};

std::size_t as_count(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer()) throw ConfigError(field, "must be a non-negative integer");
  throw ConfigError(field, "must be an integer, got " + describe(v));
}

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "must be a number, got " + describe(v));
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

bool as_bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) throw ConfigError(field, "must be a boolean, got " + describe(v));
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError(field, "must be a string, got " + describe(v));
  return v.get<std::string>();
}

template <typename Parse>
auto as_enum(const json& v, const std::string& field, Parse parse) {
  const std::string s = as_string(v, field);
  try {
    return parse(s);
  } catch (const Error& e) {
    throw ConfigError(field, e.what());
  }
}

SpaceKind parse_space_kind(std::string_view s) {
  if (s == "tfidf-corpus" || s == "tfidf") return SpaceKind::TfidfCorpus;
  if (s == "external") return SpaceKind::External;
  throw ParameterError("unknown vector space kind '" + std::string(s) +
                       "' (expected tfidf-corpus or external)");
}

}  // namespace

PipelineConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }

  PipelineConfig cfg;
  Section top(root, "");
  top.on("stopword_path", [&](const json& v, const std::string& f) {
    if (v.is_null()) cfg.stopword_path.reset();
    else cfg.stopword_path = as_string(v, f);
  });
  top.on("stemmer", [&](const json& v, const std::string& f) {
    cfg.stemmer = as_enum(v, f, parse_stemmer);
  });
  top.on("collocation", [&](const json& v, const std::string& f) {
    Section s(v, f);
    s.on("enabled", [&](const json& x, const std::string& g) { cfg.collocation.enabled = as_bool(x, g); });
    s.on("min_count", [&](const json& x, const std::string& g) { cfg.collocation.min_count = as_count(x, g); });
    s.on("min_pmi", [&](const json& x, const std::string& g) { cfg.collocation.min_pmi = as_real(x, g); });
    s.run();
  });
  top.on("keyword", [&](const json& v, const std::string& f) {
    Section s(v, f);
    s.on("window", [&](const json& x, const std::string& g) { cfg.keyword.window = as_count(x, g); });
    s.on("max_ngram", [&](const json& x, const std::string& g) { cfg.keyword.max_ngram = as_count(x, g); });
    s.on("top_k", [&](const json& x, const std::string& g) { cfg.keyword.top_k = as_count(x, g); });
    s.on("dedup_threshold", [&](const json& x, const std::string& g) { cfg.keyword.dedup_threshold = as_real(x, g); });
    s.run();
  });
  top.on("relevance", [&](const json& v, const std::string& f) {
    Section s(v, f);
    s.on("top_k", [&](const json& x, const std::string& g) { cfg.relevance.top_k = as_count(x, g); });
    s.on("threshold", [&](const json& x, const std::string& g) { cfg.relevance.threshold = as_real(x, g); });
    s.on("aggregation", [&](const json& x, const std::string& g) {
      cfg.relevance.aggregation = as_enum(x, g, parse_aggregation);
    });
    s.run();
  });
  top.on("graph", [&](const json& v, const std::string& f) {
    Section s(v, f);
    s.on("min_sim", [&](const json& x, const std::string& g) { cfg.graph.min_sim = as_real(x, g); });
    s.on("similarity_edges", [&](const json& x, const std::string& g) { cfg.graph.similarity_edges = as_bool(x, g); });
    s.on("min_node_freq", [&](const json& x, const std::string& g) { cfg.graph.min_node_freq = as_count(x, g); });
    s.on("min_edge_weight", [&](const json& x, const std::string& g) { cfg.graph.min_edge_weight = as_real(x, g); });
    s.run();
  });
  top.on("cluster", [&](const json& v, const std::string& f) {
    Section s(v, f);
    s.on("k", [&](const json& x, const std::string& g) { cfg.cluster.k = as_count(x, g); });
    s.on("seed", [&](const json& x, const std::string& g) { cfg.cluster.seed = as_count(x, g); });
    s.on("max_iter", [&](const json& x, const std::string& g) { cfg.cluster.max_iter = as_count(x, g); });
    s.on("tol", [&](const json& x, const std::string& g) { cfg.cluster.tol = as_real(x, g); });
    s.on("homonym_ceiling", [&](const json& x, const std::string& g) { cfg.cluster.homonym_ceiling = as_real(x, g); });
    s.on("homonym_min_count", [&](const json& x, const std::string& g) { cfg.cluster.homonym_min_count = as_count(x, g); });
    s.run();
  });
  top.on("vectors", [&](const json& v, const std::string& f) {
    Section s(v, f);
    s.on("kind", [&](const json& x, const std::string& g) { cfg.vectors.kind = as_enum(x, g, parse_space_kind); });
    s.on("path", [&](const json& x, const std::string& g) {
      if (x.is_null()) cfg.vectors.path.reset();
      else cfg.vectors.path = as_string(x, g);
    });
    s.run();
  });
  top.run();
  validate(cfg);
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path));
}

void validate(const PipelineConfig& cfg) {
  if (cfg.collocation.min_count < 2) throw ConfigError("collocation.min_count", "must be >= 2");
  if (!std::isfinite(cfg.collocation.min_pmi)) throw ConfigError("collocation.min_pmi", "must be finite");

  if (cfg.keyword.window < 1) throw ConfigError("keyword.window", "must be >= 1");
  if (cfg.keyword.max_ngram < 1 || cfg.keyword.max_ngram > 3)
    throw ConfigError("keyword.max_ngram", "must be in [1, 3]");
  if (cfg.keyword.top_k < 1) throw ConfigError("keyword.top_k", "must be >= 1");
  if (!(cfg.keyword.dedup_threshold > 0.0 && cfg.keyword.dedup_threshold <= 1.0))
    throw ConfigError("keyword.dedup_threshold", "must be in (0, 1]");

  if (cfg.relevance.top_k < 1) throw ConfigError("relevance.top_k", "must be >= 1");
  if (!(cfg.relevance.threshold >= 0.0 && cfg.relevance.threshold <= 1.0))
    throw ConfigError("relevance.threshold", "must be in [0, 1]");

  if (!(cfg.graph.min_sim > 0.0 && cfg.graph.min_sim <= 1.0))
    throw ConfigError("graph.min_sim", "must be in (0, 1]");
  if (!(cfg.graph.min_edge_weight >= 0.0) || !std::isfinite(cfg.graph.min_edge_weight))
    throw ConfigError("graph.min_edge_weight", "must be finite and >= 0");

  if (cfg.cluster.k < 1) throw ConfigError("cluster.k", "must be >= 1");
  if (cfg.cluster.max_iter < 1) throw ConfigError("cluster.max_iter", "must be >= 1");
  if (!(cfg.cluster.tol >= 0.0) || !std::isfinite(cfg.cluster.tol))
    throw ConfigError("cluster.tol", "must be finite and >= 0");
  if (!(cfg.cluster.homonym_ceiling >= -1.0 && cfg.cluster.homonym_ceiling <= 1.0))
    throw ConfigError("cluster.homonym_ceiling", "must be in [-1, 1]");
  if (cfg.cluster.homonym_min_count < 1)
    throw ConfigError("cluster.homonym_min_count", "must be >= 1");

  if (cfg.vectors.kind == SpaceKind::External && !cfg.vectors.path)
    throw ConfigError("vectors.path", "required when vectors.kind is external");
}

std::string config_to_json(const PipelineConfig& cfg) {
  json j;
  j["stopword_path"] = cfg.stopword_path ? json(*cfg.stopword_path) : json(nullptr);
  j["stemmer"] = to_string(cfg.stemmer);
  j["collocation"] = {{"enabled", cfg.collocation.enabled},
                      {"min_count", cfg.collocation.min_count},
                      {"min_pmi", cfg.collocation.min_pmi}};
  j["keyword"] = {{"window", cfg.keyword.window},
                  {"max_ngram", cfg.keyword.max_ngram},
                  {"top_k", cfg.keyword.top_k},
                  {"dedup_threshold", cfg.keyword.dedup_threshold}};
  j["relevance"] = {{"top_k", cfg.relevance.top_k},
                    {"threshold", cfg.relevance.threshold},
                    {"aggregation", to_string(cfg.relevance.aggregation)}};
  j["graph"] = {{"min_sim", cfg.graph.min_sim},
                {"similarity_edges", cfg.graph.similarity_edges},
                {"min_node_freq", cfg.graph.min_node_freq},
                {"min_edge_weight", cfg.graph.min_edge_weight}};
  j["cluster"] = {{"k", cfg.cluster.k},
                  {"seed", cfg.cluster.seed},
                  {"max_iter", cfg.cluster.max_iter},
                  {"tol", cfg.cluster.tol},
                  {"homonym_ceiling", cfg.cluster.homonym_ceiling},
                  {"homonym_min_count", cfg.cluster.homonym_min_count}};
  j["vectors"] = {{"kind", to_string(cfg.vectors.kind)},
                  {"path", cfg.vectors.path ? json(*cfg.vectors.path) : json(nullptr)}};
  return j.dump(2) + "\n";
}

}  // namespace kgraph
