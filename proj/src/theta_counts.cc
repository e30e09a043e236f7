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

#include "spincensus/theta_counts.hpp"

#include <string>

#include "spincensus/errors.hpp"

namespace spincensus {

CurveProfile CurveProfile::create(std::uint32_t genus, std::uint32_t tacnodes, std::uint32_t cusps,
                                  std::uint32_t nodes) {
  if (genus < 3) throw InvalidInput("genus must be at least 3, got " + std::to_string(genus));
  const std::int64_t normalization = static_cast<std::int64_t>(genus) - nodes - cusps - 2LL * tacnodes;
  if (normalization < 0) {
    throw InvalidInput("normalization genus " + std::to_string(normalization) +
                       " is negative (genus - nodes - cusps - 2 * tacnodes)");
  }
  return CurveProfile(genus, tacnodes, cusps, nodes);
}

BigInt n_odd(std::uint32_t genus) {
  if (genus == 0) return 0;
  return pow2(genus - 1) * (pow2(genus) - 1);
}

BigInt n_even(std::uint32_t genus) {
  if (genus == 0) return 1;
  return pow2(genus - 1) * (pow2(genus) + 1);
}

BigInt harris_nodal_odd(std::uint32_t normalization_genus, std::uint32_t nodes) {
  if (nodes == 0) throw InvalidInput("nodal count needs at least one node; use n_odd for smooth curves");
  return pow2(2ULL * normalization_genus + nodes - 1);
}

void check_type(const CurveProfile& profile, const ThetaType& type) {
  if (type.j > type.i || type.i > profile.tacnodes() || type.k > profile.cusps() ||
      type.h > profile.nodes()) {
    throw InvalidInput("type (" + std::to_string(type.i) + "," + std::to_string(type.j) + "," +
                       std::to_string(type.k) + "," + std::to_string(type.h) +
                       ") is outside the profile's type lattice");
  }
}

BigInt theta_count(const CurveProfile& profile, const ThetaType& type) {
  check_type(profile, type);
  const std::uint64_t tau = profile.tacnodes();
  const std::uint64_t gamma = profile.cusps();
  const std::uint64_t delta = profile.nodes();
  const std::uint64_t g_norm = profile.normalization_genus();
  if (type.j < type.i || type.h != delta) {
    // Nonnegative: tau - j >= 1 or delta - h >= 1 in this branch.
    const std::uint64_t exponent = 2 * g_norm + (tau - type.j) + (delta - type.h) - 1;
    return pow2(exponent) * binomial(tau, type.i) * binomial(type.i, type.j) *
           binomial(gamma, type.k) * binomial(delta, type.h);
  }
  const bool even_defect = ((tau - type.i) + (gamma - type.k)) % 2 == 0;
  const std::uint32_t g_tilde = profile.normalization_genus();
  return pow2(tau - type.i) * binomial(tau, type.i) * binomial(gamma, type.k) *
         (even_defect ? n_odd(g_tilde) : n_even(g_tilde));
}

BigInt theta_multiplicity(const ThetaType& type) {
  if (type.h > 0) throw Unsupported("unsupported: nodal multiplicity not given by the model (h > 0)");
  if (type.j > type.i) throw InvalidInput("type needs j <= i");
  return ipow(4, type.i - type.j) * ipow(6, type.j) * ipow(3, type.k);
}

std::vector<ThetaType> type_lattice(const CurveProfile& profile) {
  std::vector<ThetaType> types;
  for (std::uint32_t i = 0; i <= profile.tacnodes(); ++i) {
    for (std::uint32_t j = 0; j <= i; ++j) {
      for (std::uint32_t k = 0; k <= profile.cusps(); ++k) {
        for (std::uint32_t h = 0; h <= profile.nodes(); ++h) types.push_back({i, j, k, h});
      }
    }
  }
  return types;
}

std::vector<CensusRow> census(const CurveProfile& profile) {
  std::vector<CensusRow> rows;
  for (const ThetaType& type : type_lattice(profile)) {
    CensusRow row{type, theta_count(profile, type), std::nullopt};
    if (type.h == 0) row.multiplicity = theta_multiplicity(type);
    rows.push_back(std::move(row));
  }
  return rows;
}

IdentityCheck identity_check(const CurveProfile& profile) {
  if (profile.nodes() > 0) {
    throw InvalidInput("the weighted identity needs a profile without nodes");
  }
  IdentityCheck check;
  for (const CensusRow& row : census(profile)) check.lhs += *row.weighted();
  check.rhs = n_odd(profile.genus());
  check.ok = check.lhs == check.rhs;
  return check;
}

}  // namespace spincensus
