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

#ifndef SPINCENSUS_ROOT_CENSUS_HPP_
#define SPINCENSUS_ROOT_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "spincensus/bigint.hpp"
#include "spincensus/dual_graph.hpp"
#include "spincensus/gf2.hpp"

namespace spincensus {

// Which rule produced an odd/even split.
enum class ParityModel {
  kExactCompact,  // every component of the partial normalization is smooth
  kHarrisSplit,   // some component carries nodes; classes split evenly
  kNone,          // parity not computed (non-canonical parity vector)
};

std::string_view to_string(ParityModel model);

// Largest family dimension that admissible_subgraphs() will list.
inline constexpr std::size_t kMaxListedDimension = 24;

// All admissible subgraphs for one parity vector, held as a coset of the
// cycle space (particular solution + kernel basis) and materialized on
// demand in increasing bitmask order.
class AdmissibleFamily {
 public:
  // Throws InvalidInput when the parity vector does not fit the graph.
  AdmissibleFamily(const DualGraph& graph, const ParityVector& parity);

  bool solvable() const { return solutions_.has_value(); }
  // b1 of the graph when solvable.
  std::size_t dimension() const { return solutions_ ? solutions_->dimension() : 0; }
  BigInt size() const;
  // Requires solvable() and index < size().
  SupportSpec at(std::uint64_t index) const;
  bool contains(const SupportSpec& support) const;
  // Throws Unsupported when dimension() > kMaxListedDimension.
  std::vector<SupportSpec> materialize() const;

 private:
  std::size_t edge_count_ = 0;
  std::optional<AffineSolutionSet> solutions_;
};

// Edge subsets A with (non-loop edges of A at v) + 2 (loops of A at v)
// congruent to parity(v) mod 2 at every vertex, in increasing bitmask order.
std::vector<SupportSpec> admissible_subgraphs(const DualGraph& graph, const ParityVector& parity);

// 2^b1 when the system is solvable, otherwise 0.
BigInt count_admissible(const DualGraph& graph, const ParityVector& parity);

// Direct per-vertex check of the admissibility condition.
bool is_admissible(const DualGraph& graph, const ParityVector& parity, const SupportSpec& support);

// 2^(2 g_nu + b1(graph - support)): pullbacks to the normalization times
// gluings along the remaining nodes.
BigInt class_count(const DualGraph& graph, const SupportSpec& support);

// 2^b1(sigma_graph(graph, support)).
BigInt support_multiplicity(const DualGraph& graph, const SupportSpec& support);

struct ComponentParity {
  std::vector<std::size_t> vertices;
  std::uint64_t genus = 0;  // summed vertex genus
  bool smooth = false;      // single vertex, no loops
  BigInt odd;
  BigInt even;
};

// Per-component theta counts of graph - support. Smooth components carry
// (N_h, N_h^+); nodal components an even split of their 2^(2 g + b1) roots.
std::vector<ComponentParity> parity_profile(const DualGraph& graph, const SupportSpec& support);

struct ParityCensus {
  BigInt odd;
  BigInt even;
  ParityModel model = ParityModel::kNone;
};

// Odd/even split of the class_count roots on one support of the canonical
// parity. Throws InvalidInput when the support is not admissible for
// omega_parity(graph).
ParityCensus parity_census(const DualGraph& graph, const SupportSpec& support);

struct RootCensusEntry {
  SupportSpec support;
  BigInt class_count;
  BigInt multiplicity;
  BigInt odd_count;
  BigInt even_count;
  ParityModel parity_model = ParityModel::kNone;
};

// One entry per admissible support. Odd/even are filled only when `parity`
// equals omega_parity(graph).
std::vector<RootCensusEntry> full_census(const DualGraph& graph, const ParityVector& parity);

struct WeightedTotals {
  BigInt classes;           // sum of multiplicity * class_count
  BigInt odd;               // sum of multiplicity * odd_count
  BigInt unweighted_classes;  // sum of class_count
};

WeightedTotals weighted_totals(const std::vector<RootCensusEntry>& entries);

}  // namespace spincensus

#endif  // SPINCENSUS_ROOT_CENSUS_HPP_
