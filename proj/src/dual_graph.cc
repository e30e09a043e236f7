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

#include "spincensus/dual_graph.hpp"

#include <algorithm>
#include <numeric>

#include "spincensus/errors.hpp"

namespace spincensus {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest member stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> labels_without(const DualGraph& graph, const BitVector* removed) {
  DisjointSets sets(graph.vertex_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (removed != nullptr && removed->test(e)) continue;
    sets.unite(graph.edge(e).u, graph.edge(e).v);
  }
  // Roots are the smallest members, so scanning in vertex order numbers the
  // components by their smallest vertex.
  std::vector<std::size_t> label(graph.vertex_count());
  std::vector<std::size_t> root_label(graph.vertex_count(), graph.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const std::size_t root = sets.find(v);
    if (root_label[root] == graph.vertex_count()) root_label[root] = next++;
    label[v] = root_label[root];
  }
  return label;
}

std::size_t count_labels(const std::vector<std::size_t>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

}  // namespace

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!index_.emplace(vertices_[v].id, v).second) {
      throw InvalidInput("duplicate vertex id '" + vertices_[v].id + "'");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u >= vertices_.size() || edges_[e].v >= vertices_.size()) {
      throw InvalidInput("edge " + std::to_string(e) + " names a missing vertex");
    }
  }
}

DualGraph DualGraph::from_ids(std::vector<Vertex> vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index.emplace(vertices[v].id, v);
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw InvalidInput("edge [" + a + ", " + b + "] names an unknown vertex");
    }
    resolved.push_back({ia->second, ib->second});
  }
  return DualGraph(std::move(vertices), std::move(resolved));
}

std::optional<std::size_t> DualGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t DualGraph::normalization_genus() const {
  std::uint64_t total = 0;
  for (const Vertex& v : vertices_) total += v.genus;
  return total;
}

ParityVector::ParityVector(const DualGraph& graph, const std::vector<std::uint8_t>& bits)
    : bits_(graph.vertex_count()) {
  if (bits.size() != graph.vertex_count()) {
    throw InvalidInput("parity vector has " + std::to_string(bits.size()) + " entries, graph has " +
                       std::to_string(graph.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < bits.size(); ++v) {
    if (bits[v] > 1) throw InvalidInput("parity entries must be 0 or 1");
    bits_.set(v, bits[v] == 1);
  }
}

ParityVector ParityVector::from_map(const DualGraph& graph,
                                    const std::map<std::string, std::uint8_t>& bits) {
  if (bits.size() != graph.vertex_count()) {
    throw InvalidInput("parity domain does not match the vertex set");
  }
  std::vector<std::uint8_t> ordered(graph.vertex_count());
  for (const auto& [id, bit] : bits) {
    auto v = graph.index_of(id);
    if (!v) throw InvalidInput("parity names unknown vertex '" + id + "'");
    ordered[*v] = bit;
  }
  return ParityVector(graph, ordered);
}

SupportSpec::SupportSpec(const DualGraph& graph, const std::vector<std::size_t>& indices)
    : edges_(graph.edge_count()) {
  for (std::size_t e : indices) {
    if (e >= graph.edge_count()) {
      throw InvalidInput("edge index " + std::to_string(e) + " out of range");
    }
    edges_.set(e);
  }
}

SupportSpec SupportSpec::empty(const DualGraph& graph) { return SupportSpec(BitVector(graph.edge_count())); }

SupportSpec SupportSpec::all(const DualGraph& graph) {
  BitVector bits(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) bits.set(e);
  return SupportSpec(std::move(bits));
}

void check_support(const DualGraph& graph, const SupportSpec& support) {
  if (support.width() != graph.edge_count()) {
    throw InvalidInput("support addresses " + std::to_string(support.width()) +
                       " edges, graph has " + std::to_string(graph.edge_count()));
  }
}

std::uint64_t betti1(const DualGraph& graph) {
  const std::size_t c = count_labels(labels_without(graph, nullptr));
  return graph.edge_count() + c - graph.vertex_count();
}

std::uint64_t arithmetic_genus(const DualGraph& graph) {
  return graph.normalization_genus() + betti1(graph);
}

std::vector<std::size_t> component_labels(const DualGraph& graph) {
  return labels_without(graph, nullptr);
}

std::vector<std::vector<std::size_t>> components(const DualGraph& graph) {
  const auto labels = labels_without(graph, nullptr);
  std::vector<std::vector<std::size_t>> out(count_labels(labels));
  for (std::size_t v = 0; v < labels.size(); ++v) out[labels[v]].push_back(v);
  return out;
}

DualGraph delete_edges(const DualGraph& graph, const SupportSpec& support) {
  check_support(graph, support);
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!support.contains(e)) kept.push_back(graph.edge(e));
  }
  return DualGraph({graph.vertices().begin(), graph.vertices().end()}, std::move(kept));
}

DualGraph sigma_graph(const DualGraph& graph, const SupportSpec& support) {
  check_support(graph, support);
  const auto labels = labels_without(graph, &support.bits());
  std::vector<Vertex> vertices(count_labels(labels));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    Vertex& target = vertices[labels[v]];
    target.id += target.id.empty() ? graph.vertex(v).id : "+" + graph.vertex(v).id;
    target.genus += graph.vertex(v).genus;
  }
  std::vector<Edge> edges;
  for (std::size_t e : support.indices()) {
    edges.push_back({labels[graph.edge(e).u], labels[graph.edge(e).v]});
  }
  return DualGraph(std::move(vertices), std::move(edges));
}

ParityVector omega_parity(const DualGraph& graph) {
  std::vector<std::uint8_t> bits(graph.vertex_count(), 0);
  for (const Edge& e : graph.edges()) {
    if (e.is_loop()) continue;
    bits[e.u] ^= 1U;
    bits[e.v] ^= 1U;
  }
  return ParityVector(graph, bits);
}

}  // namespace spincensus
