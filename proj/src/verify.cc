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

#include "spincensus/verify.hpp"

#include <random>
#include <sstream>

#include "spincensus/corpus.hpp"
#include "spincensus/oracle.hpp"
#include "spincensus/reduction.hpp"
#include "spincensus/root_census.hpp"
#include "spincensus/theta_counts.hpp"

namespace spincensus {
namespace {

constexpr std::uint64_t kRandomCorpusSeed = 20260415;

void arf_suite(std::vector<CheckResult>& out) {
  for (std::uint32_t g = 1; g <= oracle::kMaxCensusGenus; ++g) {
    const oracle::ParitySplit split = oracle::arf_census(g);
    bool ok = split.odd == n_odd(g) && split.even == n_even(g);
    if (g <= 4) {
      for (std::uint32_t a = 0; a < (1U << (2 * g)) && ok; ++a) {
        const oracle::QuadraticForm form(g, a);
        ok = oracle::arf(form) == oracle::arf_by_zero_count(form);
      }
    }
    out.push_back({"arf g=" + std::to_string(g), ok,
                   "odd " + to_decimal(split.odd) + " even " + to_decimal(split.even)});
  }
}

// Admissible family vs brute force, count law, and the weighted-degree
// identity for the canonical parity.
CheckResult corpus_check(const std::string& name, const std::vector<DualGraph>& graphs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  std::string first_failure;
  auto fail = [&](const DualGraph& graph, const std::string& what) {
    if (failures++ == 0) first_failure = what + " on graph with " + std::to_string(graph.edge_count()) + " edges";
  };
  for (const DualGraph& graph : graphs) {
    std::vector<std::uint8_t> bits(graph.vertex_count());
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
    const ParityVector omega = omega_parity(graph);
    for (const ParityVector& parity : {omega, ParityVector(graph, bits)}) {
      const auto fast = admissible_subgraphs(graph, parity);
      const auto slow = oracle::brute_admissible(graph, parity);
      if (fast != slow) fail(graph, "admissible family differs from brute force");
      const BigInt count = count_admissible(graph, parity);
      if (count != BigInt(fast.size()) || (count != 0 && count != pow2(betti1(graph)))) {
        fail(graph, "admissible count is not 2^b1 or 0");
      }
    }
    const WeightedTotals totals = weighted_totals(full_census(graph, omega));
    if (totals.classes != ipow(4, arithmetic_genus(graph))) fail(graph, "weighted-degree identity");
  }
  std::ostringstream detail;
  detail << graphs.size() << " graphs";
  if (failures > 0) detail << ", " << failures << " failures; first: " << first_failure;
  return {name, failures == 0, detail.str()};
}

void admissible_suite(std::vector<CheckResult>& out) {
  out.push_back(corpus_check("admissible exhaustive <=4 edges", corpus::connected_multigraphs(4, {0, 1, 2}), 1));
  out.push_back(corpus_check("admissible random <=12 edges",
                             corpus::random_multigraphs(200, 8, 12, 2, kRandomCorpusSeed), 2));
  for (std::size_t n = 1; n <= 6; ++n) {
    const DualGraph dollar = corpus::dollar_graph(n);
    const auto family = admissible_subgraphs(dollar, omega_parity(dollar));
    bool ok = family.size() == (std::size_t{1} << n);
    for (const SupportSpec& s : family) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = s.contains(2 * j) == s.contains(2 * j + 1);
    }
    for (std::size_t r = 0; r <= n && ok; ++r) {
      ok = support_multiplicity(dollar, corpus::first_pairs(dollar, r)) == pow2(r);
    }
    out.push_back({"dollar graph N=" + std::to_string(n), ok, std::to_string(family.size()) + " supports"});
  }
}

void identity_suite(std::vector<CheckResult>& out) {
  for (std::uint32_t g = 3; g <= 12; ++g) {
    std::size_t profiles = 0;
    bool ok = true;
    for (std::uint32_t tau = 0; 2 * tau <= g; ++tau) {
      for (std::uint32_t gamma = 0; gamma + 2 * tau <= g; ++gamma) {
        ok = ok && identity_check(CurveProfile::create(g, tau, gamma, 0)).ok;
        ++profiles;
      }
    }
    out.push_back({"identity g=" + std::to_string(g), ok, std::to_string(profiles) + " profiles"});
  }
  bool ok = true;
  for (std::uint32_t g = 3; g <= 12; ++g) {
    const std::uint32_t g_tilde = g - 3;
    ok = ok && 36 * n_odd(g_tilde) + 28 * n_even(g_tilde) == n_odd(g);
  }
  out.push_back({"identity 36N + 28N+ (one tacnode, one cusp)", ok, "g=3..12"});
}

void reduction_suite(std::vector<CheckResult>& out) {
  bool genus_ok = true;
  for (std::uint32_t tau = 0; tau <= 4; ++tau) {
    for (std::uint32_t gamma = 0; gamma <= 4; ++gamma) {
      for (std::uint32_t g = std::max<std::uint32_t>(3, gamma + 2 * tau); g <= gamma + 2 * tau + 4; ++g) {
        genus_ok = genus_ok && arithmetic_genus(reduction_graph(CurveProfile::create(g, tau, gamma, 0)).graph) == g;
      }
    }
  }
  out.push_back({"reduction genus", genus_ok, "tacnodes, cusps <= 4"});

  bool odd_ok = true;
  for (std::uint32_t tau = 0; tau <= 3; ++tau) {
    for (std::uint32_t gamma = 0; gamma <= 3; ++gamma) {
      for (std::uint32_t g_tilde = 0; g_tilde <= 6; ++g_tilde) {
        const ReductionGraph r = build_reduction_graph(g_tilde, tau, gamma);
        const WeightedTotals totals = weighted_totals(full_census(r.graph, omega_parity(r.graph)));
        odd_ok = odd_ok && totals.odd == n_odd(g_tilde + gamma + 2 * tau);
      }
    }
  }
  out.push_back({"reduction weighted odd census", odd_ok, "sum mult*odd = N_g"});

  const TailAutomorphismGroup group = tail_automorphisms();
  out.push_back({"tail automorphism group", group.is_klein_four() && group.is_transitive(), "Klein four, transitive"});

  bool fibers_ok = true;
  for (std::uint32_t g = 3; g <= 10; ++g) {
    for (std::uint32_t tau = 0; 2 * tau <= g; ++tau) {
      for (std::uint32_t gamma = 0; gamma + 2 * tau <= g; ++gamma) {
        const CurveProfile profile = CurveProfile::create(g, tau, gamma, 0);
        BigInt total = 0;
        for (const TwistedSpinFiber& f : twisted_fibers(profile)) total += f.twisted_spin_curves;
        fibers_ok = fibers_ok && total == n_odd(g) && 12 % base_change_orders(profile).combined == 0;
      }
    }
  }
  out.push_back({"twisted fibers partition N_g", fibers_ok, "g=3..10"});
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "arf") return Suite::kArf;
  if (name == "admissible") return Suite::kAdmissible;
  if (name == "identity") return Suite::kIdentity;
  if (name == "reduction") return Suite::kReduction;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  if (suite == Suite::kArf || suite == Suite::kAll) arf_suite(out);
  if (suite == Suite::kAdmissible || suite == Suite::kAll) admissible_suite(out);
  if (suite == Suite::kIdentity || suite == Suite::kAll) identity_suite(out);
  if (suite == Suite::kReduction || suite == Suite::kAll) reduction_suite(out);
  return out;
}

}  // namespace spincensus
