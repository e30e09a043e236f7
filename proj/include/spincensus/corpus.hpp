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

#ifndef SPINCENSUS_CORPUS_HPP_
#define SPINCENSUS_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spincensus/dual_graph.hpp"

namespace spincensus::corpus {

// Every connected labeled multigraph (loops allowed) with 1..max_edges
// edges, one per edge multiset, plus the single isolated vertex. Vertex v
// gets genus genus_cycle[v % genus_cycle.size()].
std::vector<DualGraph> connected_multigraphs(std::size_t max_edges,
                                             const std::vector<std::uint32_t>& genus_cycle = {0});

// Seeded random multigraphs: 1..max_vertices vertices, 0..max_edges
// edges (loops and parallel edges allowed), genera in 0..max_genus.
std::vector<DualGraph> random_multigraphs(std::size_t count, std::size_t max_vertices,
                                          std::size_t max_edges, std::uint32_t max_genus,
                                          std::uint64_t seed);

// Center C0 of genus center_genus joined by two parallel edges to each of
// n satellites C1..Cn of genus satellite_genus. Edges 2j-2, 2j-1 join Cj.
DualGraph dollar_graph(std::size_t n, std::uint32_t center_genus = 1, std::uint32_t satellite_genus = 1);

// Two vertices joined by two parallel edges.
DualGraph banana_graph(std::uint32_t genus_a, std::uint32_t genus_b);

// Support blowing up the edge pairs of satellites C1..Cr of dollar_graph.
SupportSpec first_pairs(const DualGraph& dollar, std::size_t r);

}  // namespace spincensus::corpus

#endif  // SPINCENSUS_CORPUS_HPP_
