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

#include "kgraph/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

namespace {

using nlohmann::json;

std::string number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        // XML 1.0 forbids most C0 controls.
        if (u < 0x20 && c != '\t' && c != '\n' && c != '\r') break;
        out.push_back(c);
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join_domains(const std::set<Domain>& domains, char sep) {
  std::string out;
  for (Domain d : domains) {
    if (!out.empty()) out.push_back(sep);
    out += to_string(d);
  }
  return out;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema_error(where + "." + key, "expected a string");
  return v.get<std::string>();
}

double number_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) schema_error(where + "." + key, "expected a number");
  return v.get<double>();
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graphml") return GraphFormat::GraphML;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  throw ParameterError("unknown graph format '" + std::string(name) + "'");
}

std::string to_graphml(const KnowledgeGraph& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
      << "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
      << "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"frequency\" for=\"node\" attr.name=\"frequency\" attr.type=\"long\"/>\n"
      << "  <key id=\"domains\" for=\"node\" attr.name=\"domains\" attr.type=\"string\"/>\n"
      << "  <key id=\"score\" for=\"node\" attr.name=\"score\" attr.type=\"double\"/>\n"
      << "  <key id=\"kind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
  std::size_t m = 0;
  for (const auto& [key, value] : g.meta) {
    out << "  <key id=\"meta" << m++ << "\" for=\"graph\" attr.name=\"" << xml_escape(key)
        << "\" attr.type=\"string\"/>\n";
  }
  out << "  <graph id=\"kg\" edgedefault=\"undirected\">\n";
  m = 0;
  for (const auto& [key, value] : g.meta) {
    out << "    <data key=\"meta" << m++ << "\">" << xml_escape(value) << "</data>\n";
  }
  for (const auto& [id, node] : g.nodes) {
    out << "    <node id=\"" << xml_escape(id) << "\">\n"
        << "      <data key=\"label\">" << xml_escape(node.label) << "</data>\n"
        << "      <data key=\"frequency\">" << node.frequency << "</data>\n"
        << "      <data key=\"domains\">" << join_domains(node.domains, ';') << "</data>\n"
        << "      <data key=\"score\">" << number(node.score) << "</data>\n"
        << "    </node>\n";
  }
  std::size_t e_id = 0;
  for (const auto& e : g.edges) {
    out << "    <edge id=\"e" << e_id++ << "\" source=\"" << xml_escape(e.a) << "\" target=\""
        << xml_escape(e.b) << "\">\n"
        << "      <data key=\"kind\">" << to_string(e.kind) << "</data>\n"
        << "      <data key=\"weight\">" << number(e.weight) << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string to_dot(const KnowledgeGraph& g) {
  std::ostringstream out;
  out << "graph kg {\n";
  for (const auto& [key, value] : g.meta) {
    out << "  // " << key << " = " << value << '\n';
  }
  for (const auto& [id, node] : g.nodes) {
    out << "  " << dot_quote(id) << " [label=" << dot_quote(node.label)
        << ", frequency=" << node.frequency
        << ", domains=" << dot_quote(join_domains(node.domains, ';'))
        << ", score=" << number(node.score) << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << dot_quote(e.a) << " -- " << dot_quote(e.b) << " [kind=" << to_string(e.kind)
        << ", weight=" << number(e.weight) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const KnowledgeGraph& g) {
  json nodes = json::array();
  for (const auto& [id, node] : g.nodes) {
    json domains = json::array();
    for (Domain d : node.domains) domains.push_back(std::string(to_string(d)));
    nodes.push_back({{"id", node.id},
                     {"label", node.label},
                     {"frequency", node.frequency},
                     {"domains", std::move(domains)},
                     {"score", node.score}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    json weight = e.kind == EdgeKind::Cooccurrence
                      ? json(static_cast<std::uint64_t>(e.weight))
                      : json(e.weight);
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", std::string(to_string(e.kind))},
                     {"weight", std::move(weight)}});
  }
  json meta = json::object();
  for (const auto& [k, v] : g.meta) meta[k] = v;
  json doc = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"meta", std::move(meta)}};
  return doc.dump(1) + "\n";
}

KnowledgeGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("$", "expected an object");
  KnowledgeGraph g;

  const json& nodes = field(doc, "nodes", "$");
  if (!nodes.is_array()) schema_error("$.nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "$.nodes[" + std::to_string(i) + "]";
    const json& n = nodes[i];
    if (!n.is_object()) schema_error(where, "expected an object");
    EntityNode node;
    node.id = string_field(n, "id", where);
    node.label = string_field(n, "label", where);
    const json& freq = field(n, "frequency", where);
    if (!freq.is_number_unsigned() || freq.get<std::uint64_t>() < 1)
      schema_error(where + ".frequency", "expected a positive integer");
    node.frequency = freq.get<std::size_t>();
    node.score = number_field(n, "score", where);
    const json& domains = field(n, "domains", where);
    if (!domains.is_array()) schema_error(where + ".domains", "expected an array");
    for (const auto& d : domains) {
      auto parsed = d.is_string() ? try_parse_domain(d.get_ref<const std::string&>())
                                  : std::nullopt;
      if (!parsed) schema_error(where + ".domains", "unknown domain " + d.dump());
      node.domains.insert(*parsed);
    }
    if (!g.nodes.emplace(node.id, node).second) schema_error(where, "duplicate node id");
  }

  const json& edges = field(doc, "edges", "$");
  if (!edges.is_array()) schema_error("$.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "$.edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) schema_error(where, "expected an object");
    Edge edge;
    edge.a = string_field(e, "a", where);
    edge.b = string_field(e, "b", where);
    const std::string kind = string_field(e, "kind", where);
    if (kind == "cooccurrence") {
      edge.kind = EdgeKind::Cooccurrence;
    } else if (kind == "similarity") {
      edge.kind = EdgeKind::Similarity;
    } else {
      schema_error(where + ".kind", "unknown edge kind '" + kind + "'");
    }
    edge.weight = number_field(e, "weight", where);
    if (!g.nodes.contains(edge.a)) schema_error(where + ".a", "unknown node '" + edge.a + "'");
    if (!g.nodes.contains(edge.b)) schema_error(where + ".b", "unknown node '" + edge.b + "'");
    g.edges.push_back(std::move(edge));
  }

  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) schema_error("$.meta", "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) schema_error("$.meta." + k, "expected a string");
      g.meta[k] = v.get<std::string>();
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  check_invariants(g);
  return g;
}

void export_graph(const KnowledgeGraph& g, GraphFormat format,
                  const std::filesystem::path& path) {
  std::string text;
  switch (format) {
    case GraphFormat::GraphML: text = to_graphml(g); break;
    case GraphFormat::Dot: text = to_dot(g); break;
    case GraphFormat::Json: text = to_json(g); break;
  }
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write", path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing", path.string());
}

KnowledgeGraph import_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

}  // namespace kgraph
