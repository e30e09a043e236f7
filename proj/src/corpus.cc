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

#include "spincensus/corpus.hpp"

#include <random>
#include <string>
#include <utility>

namespace spincensus::corpus {
namespace {

std::vector<Vertex> make_vertices(std::size_t n, const std::vector<std::uint32_t>& genus_cycle) {
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < n; ++v) {
    vertices.push_back({"v" + std::to_string(v), genus_cycle[v % genus_cycle.size()]});
  }
  return vertices;
}

bool connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (const Edge& e : edges) {
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

// Nondecreasing sequences over `slots` of length `remaining`.
void extend(std::size_t n, const std::vector<Edge>& slots, std::size_t from, std::size_t remaining,
            std::vector<Edge>& current, const std::vector<std::uint32_t>& genus_cycle,
            std::vector<DualGraph>& out) {
  if (remaining == 0) {
    if (connected(n, current)) out.emplace_back(make_vertices(n, genus_cycle), current);
    return;
  }
  for (std::size_t s = from; s < slots.size(); ++s) {
    current.push_back(slots[s]);
    extend(n, slots, s, remaining - 1, current, genus_cycle, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DualGraph> connected_multigraphs(std::size_t max_edges, const std::vector<std::uint32_t>& genus_cycle) {
  std::vector<DualGraph> out;
  out.emplace_back(make_vertices(1, genus_cycle), std::vector<Edge>{});
  for (std::size_t n = 1; n <= max_edges + 1; ++n) {
    std::vector<Edge> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u; v < n; ++v) slots.push_back({u, v});
    }
    for (std::size_t m = std::max<std::size_t>(1, n - 1); m <= max_edges; ++m) {
      std::vector<Edge> current;
      extend(n, slots, 0, m, current, genus_cycle, out);
    }
  }
  return out;
}

std::vector<DualGraph> random_multigraphs(std::size_t count, std::size_t max_vertices, std::size_t max_edges,
                                          std::uint32_t max_genus, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DualGraph> out;
  out.reserve(count);
  for (std::size_t g = 0; g < count; ++g) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
    std::uniform_int_distribution<std::size_t> endpoint(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> genus(0, max_genus);
    std::vector<Vertex> vertices;
    for (std::size_t v = 0; v < n; ++v) vertices.push_back({"v" + std::to_string(v), genus(rng)});
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < m; ++e) edges.push_back({endpoint(rng), endpoint(rng)});
    out.emplace_back(std::move(vertices), std::move(edges));
  }
  return out;
}

DualGraph dollar_graph(std::size_t n, std::uint32_t center_genus, std::uint32_t satellite_genus) {
  std::vector<Vertex> vertices{{"C0", center_genus}};
  std::vector<Edge> edges;
  for (std::size_t j = 1; j <= n; ++j) {
    vertices.push_back({"C" + std::to_string(j), satellite_genus});
    edges.push_back({0, j});
    edges.push_back({0, j});
  }
  return DualGraph(std::move(vertices), std::move(edges));
}

DualGraph banana_graph(std::uint32_t genus_a, std::uint32_t genus_b) {
  return DualGraph({{"a", genus_a}, {"b", genus_b}}, {{0, 1}, {0, 1}});
}

SupportSpec first_pairs(const DualGraph& dollar, std::size_t r) {
  std::vector<std::size_t> indices;
  for (std::size_t e = 0; e < 2 * r; ++e) indices.push_back(e);
  return SupportSpec(dollar, indices);
}

}  // namespace spincensus::corpus
