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

#include <filesystem>
#include <string>
#include <string_view>

#include "kgraph/graph.hpp"

namespace kgraph {

enum class GraphFormat { GraphML, Dot, Json };

GraphFormat parse_graph_format(std::string_view name);

std::string to_graphml(const KnowledgeGraph& g);
std::string to_dot(const KnowledgeGraph& g);
/// Keys sorted, nodes sorted by id, edges in canonical order.
std::string to_json(const KnowledgeGraph& g);

/// Inverse of to_json. Throws FormatError naming the offending location.
KnowledgeGraph graph_from_json(std::string_view text);

/// Creates missing parent directories. Throws IoError when the path cannot
/// be written.
void export_graph(const KnowledgeGraph& g, GraphFormat format,
                  const std::filesystem::path& path);

KnowledgeGraph import_json(const std::filesystem::path& path);

}  // namespace kgraph
