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

#include "spincensus/reduction.hpp"

#include <numeric>
#include <set>

#include "spincensus/errors.hpp"
#include "spincensus/graph_io.hpp"
#include "spincensus/root_census.hpp"

namespace spincensus {
namespace {

void require_no_nodes(const CurveProfile& profile) {
  if (profile.nodes() > 0) {
    throw InvalidInput("stable reduction is modeled for cusps and tacnodes only (nodes must be 0)");
  }
}

}  // namespace

std::string_view to_string(TailKind kind) { return kind == TailKind::kCusp ? "cusp" : "tacnode"; }

ReductionGraph build_reduction_graph(std::uint32_t normalization_genus, std::uint32_t tacnodes,
                                     std::uint32_t cusps) {
  std::vector<Vertex> vertices{{"W", normalization_genus}};
  std::vector<Edge> edges;
  ReductionGraph out;
  out.center = 0;
  for (std::uint32_t t = 1; t <= tacnodes; ++t) {
    out.tacnode_tails.push_back(vertices.size());
    edges.push_back({0, vertices.size()});
    edges.push_back({0, vertices.size()});
    vertices.push_back({"T" + std::to_string(t), 1});
  }
  for (std::uint32_t c = 1; c <= cusps; ++c) {
    out.cusp_tails.push_back(vertices.size());
    edges.push_back({0, vertices.size()});
    vertices.push_back({"C" + std::to_string(c), 1});
  }
  out.graph = DualGraph(std::move(vertices), std::move(edges));
  return out;
}

ReductionGraph reduction_graph(const CurveProfile& profile) {
  require_no_nodes(profile);
  return build_reduction_graph(profile.normalization_genus(), profile.tacnodes(), profile.cusps());
}

std::string reduction_to_dot(const ReductionGraph& reduction) {
  DotAttributes attributes;
  for (std::size_t v : reduction.tacnode_tails) attributes[v]["tail"] = "tacnode";
  for (std::size_t v : reduction.cusp_tails) attributes[v]["tail"] = "cusp";
  return graph_to_dot(reduction.graph, attributes, "reduction");
}

BaseChangeOrders base_change_orders(const CurveProfile& profile) {
  require_no_nodes(profile);
  BaseChangeOrders out;
  for (std::uint32_t t = 0; t < profile.tacnodes(); ++t) out.per_singularity.emplace_back(TailKind::kTacnode, 4);
  for (std::uint32_t c = 0; c < profile.cusps(); ++c) out.per_singularity.emplace_back(TailKind::kCusp, 6);
  for (const auto& [kind, order] : out.per_singularity) out.combined = std::lcm(out.combined, order);
  return out;
}

LabelPermutation LabelPermutation::after(const LabelPermutation& first) const {
  std::array<std::uint8_t, 4> image{};
  for (std::uint8_t x = 0; x < 4; ++x) image[x] = (*this)(first(x));
  return LabelPermutation(image);
}

bool TailAutomorphismGroup::is_closed() const {
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      const LabelPermutation c = a.after(b);
      bool found = false;
      for (const auto& e : elements) found = found || e == c;
      if (!found) return false;
    }
  }
  return true;
}

bool TailAutomorphismGroup::is_klein_four() const {
  if (!is_closed() || !(identity() == LabelPermutation())) return false;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (elements[a] == elements[b]) return false;
      if (!(elements[a].after(elements[b]) == elements[b].after(elements[a]))) return false;
    }
    if (!(elements[a].after(elements[a]) == LabelPermutation())) return false;
  }
  return true;
}

std::vector<std::uint8_t> TailAutomorphismGroup::orbit(std::uint8_t label) const {
  std::set<std::uint8_t> seen;
  for (const auto& e : elements) seen.insert(e(label));
  return {seen.begin(), seen.end()};
}

bool TailAutomorphismGroup::is_transitive() const {
  for (std::uint8_t label = 0; label < 4; ++label) {
    if (orbit(label).size() != 4) return false;
  }
  return true;
}

TailAutomorphismGroup tail_automorphisms() {
  // g1 = (D1 D3)(D2 D4) swaps the ramification points over 1 and -1;
  // g2 = (D1 D2)(D3 D4) is the covering involution.
  const LabelPermutation g1({2, 3, 0, 1});
  const LabelPermutation g2({1, 0, 3, 2});
  return TailAutomorphismGroup{{LabelPermutation(), g1, g2, g2.after(g1)}};
}

std::vector<TwistedSpinFiber> twisted_fibers(const CurveProfile& profile) {
  require_no_nodes(profile);
  const std::uint32_t tau = profile.tacnodes();
  std::vector<TwistedSpinFiber> out;
  for (std::uint32_t i = 0; i <= tau; ++i) {
    for (std::uint32_t j = 0; j <= i; ++j) {
      for (std::uint32_t k = 0; k <= profile.cusps(); ++k) {
        TwistedSpinFiber fiber;
        fiber.i = i;
        fiber.j = j;
        fiber.k = k;
        for (std::uint32_t h = 1; h <= tau; ++h) {
          if (h <= j || h > i) fiber.blown_up_tacnodes.push_back(h);
        }
        fiber.gluing_count = pow2(tau - i + j);
        fiber.even_choices = ipow(3, j);
        fiber.automorphism_orbit = ipow(4, i - j);
        fiber.fiber_size = fiber.automorphism_orbit * ipow(6, j);
        fiber.cusp_factor = ipow(3, k);
        fiber.hyperplanes = theta_count(profile, {i, j, k, 0});
        fiber.twisted_spin_curves = fiber.hyperplanes * fiber.fiber_size * fiber.cusp_factor;
        out.push_back(std::move(fiber));
      }
    }
  }
  return out;
}

ParityVector twisted_parity(const ReductionGraph& reduction, const std::vector<std::size_t>& twisted_tails) {
  const DualGraph& graph = reduction.graph;
  std::vector<bool> in_twister(graph.vertex_count(), false);
  for (std::size_t v : twisted_tails) in_twister.at(v) = true;
  ParityVector parity = omega_parity(graph);
  // O(D) restricted to C_v has degree (D . C_v): the number of edges across
  // the cut (D, complement) at v, up to sign.
  for (const Edge& e : graph.edges()) {
    if (e.is_loop() || in_twister[e.u] == in_twister[e.v]) continue;
    parity.flip(e.u);
    parity.flip(e.v);
  }
  return parity;
}

SpinCurveCensus spin_curve_census(const ReductionGraph& reduction) {
  const std::size_t tau = reduction.tacnode_tails.size();
  if (tau >= 32) throw InvalidInput("too many tacnode tails to enumerate twisters");
  SpinCurveCensus out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tau); ++mask) {
    TwisterCensus twister;
    std::vector<std::size_t> tails = reduction.cusp_tails;
    for (std::size_t t = 0; t < tau; ++t) {
      if ((mask >> t) & 1U) {
        tails.push_back(reduction.tacnode_tails[t]);
        twister.tacnode_tails.push_back(static_cast<std::uint32_t>(t + 1));
      }
    }
    twister.parity = twisted_parity(reduction, tails);
    const auto entries = full_census(reduction.graph, twister.parity);
    twister.admissible_supports = entries.size();
    const WeightedTotals totals = weighted_totals(entries);
    twister.classes = totals.unweighted_classes;
    twister.weighted = totals.classes;
    out.total_classes += twister.classes;
    out.twisters.push_back(std::move(twister));
  }
  return out;
}

SpinCurveCensus spin_curve_census(const CurveProfile& profile) {
  return spin_curve_census(reduction_graph(profile));
}

}  // namespace spincensus
