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

#ifndef SPINCENSUS_DUAL_GRAPH_HPP_
#define SPINCENSUS_DUAL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spincensus/gf2.hpp"

namespace spincensus {

struct Vertex {
  std::string id;
  std::uint32_t genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Endpoints are vertex positions. u == v is a loop (a self-node).
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Dual graph of a nodal curve: one vertex per irreducible component labeled
// with its geometric genus, one edge per node. Parallel edges and loops are
// allowed, and edges are identified by position.
class DualGraph {
 public:
  DualGraph() = default;

  // Throws InvalidInput on duplicate ids or dangling endpoints.
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);
  static DualGraph from_ids(std::vector<Vertex> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(std::size_t index) const { return vertices_.at(index); }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  std::optional<std::size_t> index_of(const std::string& id) const;

  // Sum of vertex genera: the genus of the normalization.
  std::uint64_t normalization_genus() const;

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> index_;
};

// Per-vertex target parity of the admissibility system.
class ParityVector {
 public:
  ParityVector() = default;
  // Throws InvalidInput when bits.size() != graph.vertex_count().
  ParityVector(const DualGraph& graph, const std::vector<std::uint8_t>& bits);
  // Every vertex id of the graph must appear exactly once in `bits`.
  static ParityVector from_map(const DualGraph& graph, const std::map<std::string, std::uint8_t>& bits);

  std::size_t size() const { return bits_.width(); }
  bool bit(std::size_t vertex) const { return bits_.test(vertex); }
  void flip(std::size_t vertex) { bits_.flip(vertex); }
  const BitVector& bits() const { return bits_; }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  BitVector bits_;
};

// A subset A of the edges of a companion graph: the nodes blown up to form
// the support of a limit square root.
class SupportSpec {
 public:
  SupportSpec() = default;
  explicit SupportSpec(BitVector edges) : edges_(std::move(edges)) {}
  // Throws InvalidInput for an index >= graph.edge_count().
  SupportSpec(const DualGraph& graph, const std::vector<std::size_t>& indices);
  static SupportSpec empty(const DualGraph& graph);
  static SupportSpec all(const DualGraph& graph);

  std::size_t width() const { return edges_.width(); }
  bool contains(std::size_t edge) const { return edges_.test(edge); }
  std::size_t size() const { return edges_.count(); }
  std::vector<std::size_t> indices() const { return edges_.indices(); }
  const BitVector& bits() const { return edges_; }
  std::string bitmask() const { return edges_.to_binary(); }

  friend bool operator==(const SupportSpec&, const SupportSpec&) = default;
  std::strong_ordering operator<=>(const SupportSpec& other) const { return edges_ <=> other.edges_; }

 private:
  BitVector edges_;
};

// Throws InvalidInput unless `support` was built for a graph with this many edges.
void check_support(const DualGraph& graph, const SupportSpec& support);

// |E| - |V| + #components.
std::uint64_t betti1(const DualGraph& graph);

// Sum of vertex genera plus betti1.
std::uint64_t arithmetic_genus(const DualGraph& graph);

// Connected components as sorted vertex-position lists, ordered by their
// smallest member.
std::vector<std::vector<std::size_t>> components(const DualGraph& graph);

// Component index of every vertex, numbered as in components().
std::vector<std::size_t> component_labels(const DualGraph& graph);

// Same vertices; the edges of `support` removed.
DualGraph delete_edges(const DualGraph& graph, const SupportSpec& support);

// One vertex per component of delete_edges(graph, support), carrying the
// summed genus of its members; one edge per edge of `support`.
DualGraph sigma_graph(const DualGraph& graph, const SupportSpec& support);

// Parity of the canonical degree on each vertex: the number of non-loop
// edge ends mod 2.
ParityVector omega_parity(const DualGraph& graph);

}  // namespace spincensus

#endif  // SPINCENSUS_DUAL_GRAPH_HPP_
