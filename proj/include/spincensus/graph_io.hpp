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

#ifndef SPINCENSUS_GRAPH_IO_HPP_
#define SPINCENSUS_GRAPH_IO_HPP_

#include <map>
#include <string>
#include <string_view>

#include "spincensus/dual_graph.hpp"

namespace spincensus {

// {"vertices":[{"id":"C0","genus":1}],"edges":[["C0","C1"]]}
DualGraph graph_from_json(std::string_view text);
DualGraph read_graph_file(const std::string& path);
std::string graph_to_json(const DualGraph& graph);

// Extra per-vertex DOT attributes, keyed by vertex position.
using DotAttributes = std::map<std::size_t, std::map<std::string, std::string>>;

// One node per vertex labeled "id (g=genus)", one undirected edge per edge.
std::string graph_to_dot(const DualGraph& graph, const DotAttributes& attributes = {},
                         std::string_view name = "dual");

}  // namespace spincensus

#endif  // SPINCENSUS_GRAPH_IO_HPP_
