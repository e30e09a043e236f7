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

#ifndef SPINCENSUS_THETA_COUNTS_HPP_
#define SPINCENSUS_THETA_COUNTS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "spincensus/bigint.hpp"

namespace spincensus {

// Genus and singularity counts of an irreducible general curve with
// tacnodes, cusps and nodes.
class CurveProfile {
 public:
  // Throws InvalidInput unless genus >= 3 and the normalization genus
  // genus - nodes - cusps - 2 * tacnodes is nonnegative.
  static CurveProfile create(std::uint32_t genus, std::uint32_t tacnodes, std::uint32_t cusps,
                             std::uint32_t nodes);

  std::uint32_t genus() const { return genus_; }
  std::uint32_t tacnodes() const { return tacnodes_; }
  std::uint32_t cusps() const { return cusps_; }
  std::uint32_t nodes() const { return nodes_; }
  std::uint32_t normalization_genus() const { return genus_ - nodes_ - cusps_ - 2 * tacnodes_; }
  // Preimages of the singular points on the normalization.
  std::uint32_t marked_points() const { return 2 * nodes_ + cusps_ + 2 * tacnodes_; }

  friend bool operator==(const CurveProfile&, const CurveProfile&) = default;

 private:
  CurveProfile(std::uint32_t g, std::uint32_t t, std::uint32_t c, std::uint32_t n)
      : genus_(g), tacnodes_(t), cusps_(c), nodes_(n) {}

  std::uint32_t genus_;
  std::uint32_t tacnodes_;
  std::uint32_t cusps_;
  std::uint32_t nodes_;
};

// A hyperplane containing i tacnodes, j of their tacnodal tangents, k cusps
// and h nodes.
struct ThetaType {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  std::uint32_t h = 0;

  friend auto operator<=>(const ThetaType&, const ThetaType&) = default;
};

struct CensusRow {
  ThetaType type;
  BigInt count;
  std::optional<BigInt> multiplicity;  // absent when the type contains nodes

  std::optional<BigInt> weighted() const {
    if (!multiplicity) return std::nullopt;
    return count * *multiplicity;
  }
};

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool ok = false;
};

// Odd / even theta characteristics of a smooth genus-g curve:
// 2^(g-1) (2^g -/+ 1).
BigInt n_odd(std::uint32_t genus);
BigInt n_even(std::uint32_t genus);

// Odd theta characteristics of a curve with k >= 1 nodes whose
// normalization has genus g_nu: 2^(2 g_nu + k - 1).
BigInt harris_nodal_odd(std::uint32_t normalization_genus, std::uint32_t nodes);

// Throws InvalidInput when the type does not satisfy j <= i <= tacnodes,
// k <= cusps, h <= nodes.
void check_type(const CurveProfile& profile, const ThetaType& type);

// Number of theta hyperplanes of the given type.
BigInt theta_count(const CurveProfile& profile, const ThetaType& type);

// 4^(i-j) 6^j 3^k. Throws Unsupported when h > 0.
BigInt theta_multiplicity(const ThetaType& type);

// Every valid type in lexicographic (i, j, k, h) order.
std::vector<ThetaType> type_lattice(const CurveProfile& profile);
std::vector<CensusRow> census(const CurveProfile& profile);

// Sum of multiplicity * count against N_g. Throws InvalidInput when the
// profile has nodes.
IdentityCheck identity_check(const CurveProfile& profile);

}  // namespace spincensus

#endif  // SPINCENSUS_THETA_COUNTS_HPP_
