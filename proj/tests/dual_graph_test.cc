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

#include <gtest/gtest.h>

#include "spincensus/corpus.hpp"
#include "spincensus/errors.hpp"
#include "spincensus/graph_io.hpp"
#include "spincensus/reduction.hpp"

namespace spincensus {
namespace {

DualGraph single_vertex(std::uint32_t genus) { return DualGraph({{"v", genus}}, {}); }

std::vector<DualGraph> property_corpus() {
  auto graphs = corpus::connected_multigraphs(4, {0, 1});
  auto random = corpus::random_multigraphs(150, 7, 10, 2, 99);
  graphs.insert(graphs.end(), random.begin(), random.end());
  return graphs;
}

// Every subset of edges when small, otherwise a deterministic sample.
std::vector<SupportSpec> some_supports(const DualGraph& graph) {
  std::vector<SupportSpec> out;
  const std::size_t m = graph.edge_count();
  const std::uint64_t limit = m <= 6 ? (std::uint64_t{1} << m) : 64;
  for (std::uint64_t n = 0; n < limit; ++n) {
    const std::uint64_t mask = m <= 6 ? n : (n * 0x9E3779B97F4A7C15ULL) >> (64 - m);
    std::vector<std::size_t> idx;
    for (std::size_t e = 0; e < m; ++e) {
      if ((mask >> e) & 1U) idx.push_back(e);
    }
    out.emplace_back(graph, idx);
  }
  return out;
}

TEST(DualGraphTest, RejectsBadConstruction) {
  EXPECT_THROW(DualGraph({{"a", 0}, {"a", 1}}, {}), InvalidInput);
  EXPECT_THROW(DualGraph({{"a", 0}}, {{0, 1}}), InvalidInput);
  EXPECT_THROW(DualGraph::from_ids({{"a", 0}}, {{"a", "b"}}), InvalidInput);
}

TEST(DualGraphTest, Betti1Examples) {
  EXPECT_EQ(betti1(DualGraph()), 0u);
  EXPECT_EQ(betti1(single_vertex(0)), 0u);
  EXPECT_EQ(betti1(corpus::banana_graph(0, 0)), 1u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(betti1(corpus::dollar_graph(n)), n);
  EXPECT_EQ(betti1(DualGraph({{"v", 0}}, {{0, 0}})), 1u);
}

TEST(DualGraphTest, ArithmeticGenusExamples) {
  EXPECT_EQ(arithmetic_genus(single_vertex(3)), 3u);
  for (std::uint32_t g = 3; g <= 8; ++g) {
    // Cusp graph with two tails, tacnode graph with one tail.
    EXPECT_EQ(arithmetic_genus(build_reduction_graph(g - 2, 0, 2).graph), g);
    EXPECT_EQ(arithmetic_genus(build_reduction_graph(g - 2, 1, 0).graph), g);
  }
}

TEST(DualGraphTest, DeleteEdges) {
  const DualGraph banana = corpus::banana_graph(1, 2);
  EXPECT_EQ(delete_edges(banana, SupportSpec::empty(banana)), banana);
  const DualGraph bare = delete_edges(banana, SupportSpec::all(banana));
  EXPECT_EQ(bare.vertex_count(), 2u);
  EXPECT_EQ(bare.edge_count(), 0u);
  EXPECT_EQ(bare.vertex(1).genus, 2u);

  const DualGraph dollar = corpus::dollar_graph(5);
  const DualGraph rest = delete_edges(dollar, corpus::first_pairs(dollar, 2));
  const auto parts = components(rest);
  // Center with C3..C5 attached, then C1 and C2 alone.
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (std::vector<std::size_t>{0, 3, 4, 5}));
  EXPECT_EQ(parts[1], (std::vector<std::size_t>{1}));
  EXPECT_EQ(parts[2], (std::vector<std::size_t>{2}));
  EXPECT_EQ(betti1(rest), 3u);
}

TEST(DualGraphTest, InvalidSupportRejected) {
  const DualGraph banana = corpus::banana_graph(0, 0);
  EXPECT_THROW(SupportSpec(banana, {2}), InvalidInput);
  const SupportSpec wide = SupportSpec::all(corpus::dollar_graph(2));
  EXPECT_THROW(delete_edges(banana, wide), InvalidInput);
  EXPECT_THROW(sigma_graph(banana, wide), InvalidInput);
}

TEST(DualGraphTest, SigmaGraph) {
  const DualGraph banana = corpus::banana_graph(1, 1);
  const DualGraph none = sigma_graph(banana, SupportSpec::empty(banana));
  EXPECT_EQ(none.vertex_count(), 1u);
  EXPECT_EQ(none.edge_count(), 0u);
  EXPECT_EQ(none.vertex(0).genus, 2u);
  EXPECT_EQ(betti1(none), 0u);

  const DualGraph both = sigma_graph(banana, SupportSpec::all(banana));
  EXPECT_EQ(both.vertex_count(), 2u);
  EXPECT_EQ(both.edge_count(), 2u);
  EXPECT_EQ(betti1(both), 1u);

  for (std::size_t n = 1; n <= 6; ++n) {
    const DualGraph dollar = corpus::dollar_graph(n);
    for (std::size_t r = 0; r <= n; ++r) {
      const DualGraph sigma = sigma_graph(dollar, corpus::first_pairs(dollar, r));
      EXPECT_EQ(sigma.vertex_count(), 1 + r);
      EXPECT_EQ(sigma.edge_count(), 2 * r);
      EXPECT_EQ(betti1(sigma), r);
    }
  }
}

TEST(DualGraphTest, SigmaGraphLoopsFromInternalEdges) {
  // Triangle a-b-c; blowing up a-b keeps a, b connected through c.
  const DualGraph triangle({{"a", 0}, {"b", 1}, {"c", 2}}, {{0, 1}, {1, 2}, {2, 0}});
  const DualGraph sigma = sigma_graph(triangle, SupportSpec(triangle, {0}));
  ASSERT_EQ(sigma.vertex_count(), 1u);
  EXPECT_EQ(sigma.vertex(0).id, "a+b+c");
  EXPECT_EQ(sigma.vertex(0).genus, 3u);
  ASSERT_EQ(sigma.edge_count(), 1u);
  EXPECT_TRUE(sigma.edge(0).is_loop());
}

TEST(DualGraphTest, Components) {
  EXPECT_EQ(components(single_vertex(0)).size(), 1u);
  EXPECT_EQ(components(DualGraph({{"a", 0}, {"b", 0}}, {})).size(), 2u);
  EXPECT_EQ(components(corpus::dollar_graph(4)).size(), 1u);
  // Ordered by smallest member.
  const DualGraph g({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}}, {{3, 1}, {2, 0}});
  const auto parts = components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(parts[1], (std::vector<std::size_t>{1, 3}));
}

TEST(DualGraphTest, OmegaParity) {
  const ReductionGraph tacnode = build_reduction_graph(2, 1, 0);
  EXPECT_EQ(omega_parity(tacnode.graph), ParityVector(tacnode.graph, {0, 0}));
  const ReductionGraph cusp = build_reduction_graph(2, 0, 3);
  EXPECT_EQ(omega_parity(cusp.graph), ParityVector(cusp.graph, {1, 1, 1, 1}));
  const DualGraph loop({{"v", 0}}, {{0, 0}});
  EXPECT_EQ(omega_parity(loop), ParityVector(loop, {0}));
}

TEST(DualGraphTest, ParityDomainMismatch) {
  const DualGraph banana = corpus::banana_graph(0, 0);
  EXPECT_THROW(ParityVector(banana, {1}), InvalidInput);
  EXPECT_THROW(ParityVector::from_map(banana, {{"a", 1}, {"z", 1}}), InvalidInput);
  EXPECT_EQ(ParityVector::from_map(banana, {{"a", 1}, {"b", 0}}), ParityVector(banana, {1, 0}));
}

TEST(DualGraphPropertyTest, DeletionMonotoneAndAdditive) {
  for (const DualGraph& graph : property_corpus()) {
    const std::uint64_t b = betti1(graph);
    for (const SupportSpec& support : some_supports(graph)) {
      const std::uint64_t rest = betti1(delete_edges(graph, support));
      EXPECT_LE(rest, b);
      EXPECT_EQ(betti1(sigma_graph(graph, support)) + rest, b);
    }
  }
}

TEST(DualGraphPropertyTest, GenusInvariantUnderSubdivision) {
  for (const DualGraph& graph : property_corpus()) {
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      std::vector<Vertex> vertices(graph.vertices().begin(), graph.vertices().end());
      std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
      const std::size_t mid = vertices.size();
      vertices.push_back({"mid", 0});
      const Edge old = edges[e];
      edges[e] = {old.u, mid};
      edges.push_back({mid, old.v});
      EXPECT_EQ(arithmetic_genus(DualGraph(vertices, edges)), arithmetic_genus(graph));
    }
  }
}

TEST(DualGraphPropertyTest, OmegaParitySumsToZeroPerComponent) {
  for (const DualGraph& graph : property_corpus()) {
    const ParityVector parity = omega_parity(graph);
    for (const auto& part : components(graph)) {
      bool sum = false;
      for (std::size_t v : part) sum ^= parity.bit(v);
      EXPECT_FALSE(sum);
    }
  }
}

TEST(GraphIoTest, JsonRoundTrip) {
  const DualGraph dollar = corpus::dollar_graph(3, 2, 1);
  EXPECT_EQ(graph_from_json(graph_to_json(dollar)), dollar);
  const DualGraph parsed =
      graph_from_json(R"({"vertices":[{"id":"x","genus":2},{"id":"y","genus":0}],"edges":[["x","y"],["y","y"]]})");
  EXPECT_EQ(parsed.vertex_count(), 2u);
  EXPECT_TRUE(parsed.edge(1).is_loop());
  EXPECT_EQ(arithmetic_genus(parsed), 3u);
}

TEST(GraphIoTest, MalformedJson) {
  EXPECT_THROW(graph_from_json("{"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"vertices":[]})"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"vertices":[{"id":"a","genus":-1}],"edges":[]})"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"vertices":[{"id":"a","genus":0}],"edges":[["a"]]})"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"vertices":[{"id":"a","genus":0}],"edges":[["a","b"]]})"), InvalidInput);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.json"), InvalidInput);
}

TEST(GraphIoTest, Dot) {
  const DualGraph banana = corpus::banana_graph(1, 0);
  EXPECT_EQ(graph_to_dot(banana),
            "graph dual {\n"
            "  \"a\" [label=\"a (g=1)\"];\n"
            "  \"b\" [label=\"b (g=0)\"];\n"
            "  \"a\" -- \"b\";\n"
            "  \"a\" -- \"b\";\n"
            "}\n");
}

}  // namespace
}  // namespace spincensus
