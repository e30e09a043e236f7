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

#ifndef SPINCENSUS_ORACLE_HPP_
#define SPINCENSUS_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "spincensus/bigint.hpp"
#include "spincensus/dual_graph.hpp"

// Brute-force ground truth. Nothing here calls into root_census or
// theta_counts; tests compare the two sides.
namespace spincensus::oracle {

inline constexpr std::size_t kMaxBruteForceEdges = 24;
inline constexpr std::uint32_t kMaxCensusGenus = 6;
inline constexpr std::uint32_t kMaxFormGenus = 12;

// Sweeps all 2^|E| edge subsets and keeps those meeting the per-vertex
// parity condition. Throws InvalidInput above kMaxBruteForceEdges edges.
std::vector<SupportSpec> brute_admissible(const DualGraph& graph, const ParityVector& parity);

// q(x) = sum_{i<g} x_i x_{g+i} + sum_m a_m x_m over GF(2)^(2g), a quadratic
// refinement of the standard symplectic pairing. Bit m of `linear` is a_m,
// which is also q on the m-th basis vector.
class QuadraticForm {
 public:
  // Throws InvalidInput when genus > kMaxFormGenus or `linear` has bits at
  // or above 2 * genus.
  QuadraticForm(std::uint32_t genus, std::uint32_t linear);

  std::uint32_t genus() const { return genus_; }
  std::uint32_t linear() const { return linear_; }
  bool evaluate(std::uint32_t x) const;

 private:
  std::uint32_t genus_;
  std::uint32_t linear_;
};

// <x, y> = sum_i x_i y_{g+i} + x_{g+i} y_i.
bool symplectic_pairing(std::uint32_t genus, std::uint32_t x, std::uint32_t y);

// sum_i q(e_i) q(f_i).
bool arf(const QuadraticForm& form);

// #{x : q(x) = 0}.
std::uint64_t zero_count(const QuadraticForm& form);

// 0 when q has 2^(2g-1) + 2^(g-1) zeros, 1 otherwise.
bool arf_by_zero_count(const QuadraticForm& form);

struct ParitySplit {
  BigInt odd;
  BigInt even;

  friend bool operator==(const ParitySplit&, const ParitySplit&) = default;
};

// Counts the 4^g forms by zero-counting Arf invariant. Throws InvalidInput
// outside 1..kMaxCensusGenus.
ParitySplit arf_census(std::uint32_t genus);

// Odd/even count of a product where the total is odd iff an odd number of
// factors are odd. Empty input is (0, 1).
ParitySplit parity_convolve(std::span<const ParitySplit> factors);

}  // namespace spincensus::oracle

#endif  // SPINCENSUS_ORACLE_HPP_
