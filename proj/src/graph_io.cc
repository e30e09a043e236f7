// Copyright 2026 The spin-census Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spincensus/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spincensus/errors.hpp"

namespace spincensus {
namespace {

using nlohmann::json;

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

DualGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw InvalidInput("graph JSON needs array fields \"vertices\" and \"edges\"");
  }
  std::vector<Vertex> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("genus") ||
        !v["genus"].is_number_integer() || v["genus"].get<long long>() < 0) {
      throw InvalidInput("each vertex needs a string \"id\" and a nonnegative integer \"genus\"");
    }
    vertices.push_back({v["id"].get<std::string>(), v["genus"].get<std::uint32_t>()});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw InvalidInput("each edge must be a pair of vertex ids");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return DualGraph::from_ids(std::move(vertices), edges);
}

DualGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

std::string graph_to_json(const DualGraph& graph) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : graph.vertices()) doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = json::array();
  for (const Edge& e : graph.edges()) {
    doc["edges"].push_back({graph.vertex(e.u).id, graph.vertex(e.v).id});
  }
  return doc.dump();
}

std::string graph_to_dot(const DualGraph& graph, const DotAttributes& attributes,
                         std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const Vertex& vertex = graph.vertex(v);
    out << "  " << dot_quote(vertex.id) << " [label="
        << dot_quote(vertex.id + " (g=" + std::to_string(vertex.genus) + ")");
    if (auto it = attributes.find(v); it != attributes.end()) {
      for (const auto& [key, value] : it->second) out << ", " << key << "=" << dot_quote(value);
    }
    out << "];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  " << dot_quote(graph.vertex(e.u).id) << " -- " << dot_quote(graph.vertex(e.v).id) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spincensus
