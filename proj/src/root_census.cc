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

#include "spincensus/root_census.hpp"

#include <string>

#include "spincensus/errors.hpp"
#include "spincensus/parallel.hpp"
#include "spincensus/theta_counts.hpp"

namespace spincensus {
namespace {

void check_parity(const DualGraph& graph, const ParityVector& parity) {
  if (parity.size() != graph.vertex_count()) {
    throw InvalidInput("parity domain mismatch: " + std::to_string(parity.size()) + " bits for " +
                       std::to_string(graph.vertex_count()) + " vertices");
  }
}

// Row v of the vertex-edge incidence matrix over GF(2). Loops are zero
// columns: they meet their vertex twice.
std::vector<BitVector> incidence_rows(const DualGraph& graph) {
  std::vector<BitVector> rows(graph.vertex_count(), BitVector(graph.edge_count()));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    if (edge.is_loop()) continue;
    rows[edge.u].set(e);
    rows[edge.v].set(e);
  }
  return rows;
}

}  // namespace

std::string_view to_string(ParityModel model) {
  switch (model) {
    case ParityModel::kExactCompact:
      return "ExactCompact";
    case ParityModel::kHarrisSplit:
      return "HarrisSplit";
    case ParityModel::kNone:
      break;
  }
  return "None";
}

AdmissibleFamily::AdmissibleFamily(const DualGraph& graph, const ParityVector& parity)
    : edge_count_(graph.edge_count()) {
  check_parity(graph, parity);
  const auto rows = incidence_rows(graph);
  solutions_ = solve_affine(rows, parity.bits(), graph.edge_count());
}

BigInt AdmissibleFamily::size() const {
  if (!solutions_) return 0;
  return pow2(solutions_->dimension());
}

SupportSpec AdmissibleFamily::at(std::uint64_t index) const {
  if (!solutions_) throw InvalidInput("no admissible subgraphs");
  if (solutions_->dimension() >= 64 || index >= (std::uint64_t{1} << solutions_->dimension())) {
    throw InvalidInput("admissible subgraph index out of range");
  }
  return SupportSpec(solutions_->at(index));
}

bool AdmissibleFamily::contains(const SupportSpec& support) const {
  return solutions_ && support.width() == edge_count_ && solutions_->contains(support.bits());
}

std::vector<SupportSpec> AdmissibleFamily::materialize() const {
  std::vector<SupportSpec> out;
  if (!solutions_) return out;
  if (solutions_->dimension() > kMaxListedDimension) {
    throw Unsupported("2^" + std::to_string(solutions_->dimension()) +
                      " admissible subgraphs are too many to list");
  }
  const std::uint64_t n = std::uint64_t{1} << solutions_->dimension();
  out.reserve(n);
  for (std::uint64_t index = 0; index < n; ++index) out.emplace_back(solutions_->at(index));
  return out;
}

std::vector<SupportSpec> admissible_subgraphs(const DualGraph& graph, const ParityVector& parity) {
  return AdmissibleFamily(graph, parity).materialize();
}

BigInt count_admissible(const DualGraph& graph, const ParityVector& parity) {
  return AdmissibleFamily(graph, parity).size();
}

bool is_admissible(const DualGraph& graph, const ParityVector& parity, const SupportSpec& support) {
  check_parity(graph, parity);
  check_support(graph, support);
  std::vector<std::uint32_t> ends(graph.vertex_count(), 0);
  for (std::size_t e : support.indices()) {
    const Edge& edge = graph.edge(e);
    if (edge.is_loop()) {
      ends[edge.u] += 2;
    } else {
      ++ends[edge.u];
      ++ends[edge.v];
    }
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if ((ends[v] % 2 == 1) != parity.bit(v)) return false;
  }
  return true;
}

BigInt class_count(const DualGraph& graph, const SupportSpec& support) {
  const DualGraph rest = delete_edges(graph, support);
  return pow2(2 * graph.normalization_genus() + betti1(rest));
}

BigInt support_multiplicity(const DualGraph& graph, const SupportSpec& support) {
  return pow2(betti1(sigma_graph(graph, support)));
}

std::vector<ComponentParity> parity_profile(const DualGraph& graph, const SupportSpec& support) {
  if (!is_admissible(graph, omega_parity(graph), support)) {
    throw InvalidInput("support " + support.bitmask() +
                       " is not admissible for the canonical parity; parity census undefined");
  }
  const DualGraph rest = delete_edges(graph, support);
  const auto labels = component_labels(rest);
  const auto parts = components(rest);
  std::vector<std::size_t> edges_in(parts.size(), 0);
  for (const Edge& e : rest.edges()) ++edges_in[labels[e.u]];

  std::vector<ComponentParity> out;
  out.reserve(parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    ComponentParity part;
    part.vertices = parts[c];
    for (std::size_t v : parts[c]) part.genus += graph.vertex(v).genus;
    part.smooth = parts[c].size() == 1 && edges_in[c] == 0;
    if (part.smooth) {
      part.odd = n_odd(static_cast<std::uint32_t>(part.genus));
      part.even = n_even(static_cast<std::uint32_t>(part.genus));
    } else {
      // Each nodal component's edges form an even subgraph, so b1 >= 1 and
      // the root count below is even.
      const std::uint64_t b1 = edges_in[c] + 1 - parts[c].size();
      const BigInt roots = pow2(2 * part.genus + b1);
      part.odd = roots / 2;
      part.even = roots / 2;
    }
    out.push_back(std::move(part));
  }
  return out;
}

ParityCensus parity_census(const DualGraph& graph, const SupportSpec& support) {
  const auto parts = parity_profile(graph, support);
  bool all_smooth = true;
  for (const ComponentParity& part : parts) all_smooth = all_smooth && part.smooth;

  ParityCensus out;
  if (all_smooth) {
    // d_G odd components <=> G odd: the odd part of prod (e_i + o_i x) at x = -1.
    BigInt total = 1;
    BigInt signed_total = 1;
    for (const ComponentParity& part : parts) {
      total *= part.odd + part.even;
      signed_total *= part.even - part.odd;
    }
    out.odd = (total - signed_total) / 2;
    out.even = total - out.odd;
    out.model = ParityModel::kExactCompact;
  } else {
    const BigInt total = class_count(graph, support);
    out.odd = total / 2;
    out.even = total - out.odd;
    out.model = ParityModel::kHarrisSplit;
  }
  return out;
}

std::vector<RootCensusEntry> full_census(const DualGraph& graph, const ParityVector& parity) {
  const auto supports = admissible_subgraphs(graph, parity);
  const bool canonical = parity == omega_parity(graph);
  std::vector<RootCensusEntry> entries(supports.size());
  parallel_for(
      supports.size(),
      [&](std::size_t n) {
        RootCensusEntry& entry = entries[n];
        entry.support = supports[n];
        entry.class_count = class_count(graph, supports[n]);
        entry.multiplicity = support_multiplicity(graph, supports[n]);
        if (canonical) {
          ParityCensus split = parity_census(graph, supports[n]);
          entry.odd_count = std::move(split.odd);
          entry.even_count = std::move(split.even);
          entry.parity_model = split.model;
        }
      },
      16);
  return entries;
}

WeightedTotals weighted_totals(const std::vector<RootCensusEntry>& entries) {
  WeightedTotals totals;
  for (const RootCensusEntry& entry : entries) {
    totals.classes += entry.multiplicity * entry.class_count;
    totals.odd += entry.multiplicity * entry.odd_count;
    totals.unweighted_classes += entry.class_count;
  }
  return totals;
}

}  // namespace spincensus
