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

#ifndef SPINCENSUS_REDUCTION_HPP_
#define SPINCENSUS_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spincensus/bigint.hpp"
#include "spincensus/dual_graph.hpp"
#include "spincensus/theta_counts.hpp"

namespace spincensus {

enum class TailKind { kCusp, kTacnode };

std::string_view to_string(TailKind kind);

// Dual graph of the stable reduction of a general smoothing of a curve with
// cusps and tacnodes: the normalization as center vertex, a genus-1 tail
// on one edge per cusp, a genus-1 tail on two parallel edges per tacnode.
struct ReductionGraph {
  DualGraph graph;
  std::size_t center = 0;
  std::vector<std::size_t> tacnode_tails;  // ids T1..Ttau
  std::vector<std::size_t> cusp_tails;     // ids C1..Cgamma
};

// Works for any normalization genus, including curves of genus below 3.
ReductionGraph build_reduction_graph(std::uint32_t normalization_genus, std::uint32_t tacnodes,
                                     std::uint32_t cusps);

// Throws InvalidInput when the profile has nodes.
ReductionGraph reduction_graph(const CurveProfile& profile);

// DOT with tail vertices tagged tail="cusp" or tail="tacnode".
std::string reduction_to_dot(const ReductionGraph& reduction);

struct BaseChangeOrders {
  std::vector<std::pair<TailKind, std::uint32_t>> per_singularity;  // tacnodes first
  std::uint32_t combined = 1;  // lcm of the orders present
};

// Order 6 per cusp, 4 per tacnode. Throws InvalidInput when the profile has nodes.
BaseChangeOrders base_change_orders(const CurveProfile& profile);

// Symbolic elliptic tail over a tacnode: the double cover of P^1 branched
// over four points, with the two attaching points over 0 and infinity.
struct EllipticTail {
  static constexpr std::uint32_t kJInvariant = 1728;
  std::array<std::string_view, 4> branch_points{"0", "1", "inf", "-1"};
  std::array<std::string_view, 2> attachment_images{"0", "inf"};
  std::array<std::string_view, 4> square_roots{"D1", "D2", "D3", "D4"};

  std::uint32_t j_invariant() const { return kJInvariant; }
};

// Permutation of the labels D1..D4 (positions 0..3).
class LabelPermutation {
 public:
  constexpr LabelPermutation() : image_{0, 1, 2, 3} {}
  constexpr explicit LabelPermutation(std::array<std::uint8_t, 4> image) : image_(image) {}

  std::uint8_t operator()(std::uint8_t label) const { return image_.at(label); }
  // (*this after first)(x) = (*this)(first(x)).
  LabelPermutation after(const LabelPermutation& first) const;
  const std::array<std::uint8_t, 4>& image() const { return image_; }

  friend bool operator==(const LabelPermutation&, const LabelPermutation&) = default;

 private:
  std::array<std::uint8_t, 4> image_;
};

// {id, g1, g2, g3} acting on the four square roots of O(p + q) on a tail.
struct TailAutomorphismGroup {
  std::array<LabelPermutation, 4> elements;

  const LabelPermutation& identity() const { return elements[0]; }
  bool is_closed() const;
  bool is_klein_four() const;  // closed, abelian, every element an involution
  bool is_transitive() const;
  std::vector<std::uint8_t> orbit(std::uint8_t label) const;
};

TailAutomorphismGroup tail_automorphisms();

// Fiber bookkeeping for one hyperplane type (i, j, k): which tacnodes are
// blown up, how many gluings and square-root choices produce twisted spin
// curves, and how many of those map to the same hyperplane.
struct TwistedSpinFiber {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> blown_up_tacnodes;  // h <= j or h > i, 1-based
  BigInt gluing_count;                           // 2^(tau - i + j)
  BigInt even_choices;                           // 3^j
  BigInt automorphism_orbit;                     // 4^(i - j)
  BigInt fiber_size;                             // 4^(i - j) 6^j
  BigInt cusp_factor;                            // 3^k
  BigInt hyperplanes;                            // theta_count(i, j, k, 0)
  BigInt twisted_spin_curves;                    // hyperplanes * fiber_size * cusp_factor
};

// One record per (i, j, k) in lexicographic order. Throws InvalidInput when
// the profile has nodes.
std::vector<TwistedSpinFiber> twisted_fibers(const CurveProfile& profile);

struct TwisterCensus {
  std::vector<std::uint32_t> tacnode_tails;  // twisted tacnode tails, 1-based
  ParityVector parity;                       // parity of omega twisted by the tails
  BigInt admissible_supports;
  BigInt classes;   // sum of class_count over admissible supports
  BigInt weighted;  // sum of multiplicity * class_count
};

struct SpinCurveCensus {
  std::vector<TwisterCensus> twisters;  // by bitmask of the tacnode subset
  BigInt total_classes;
};

// Twisters D = (all cusp tails) + S for every subset S of tacnode tails.
SpinCurveCensus spin_curve_census(const ReductionGraph& reduction);
// Throws InvalidInput when the profile has nodes.
SpinCurveCensus spin_curve_census(const CurveProfile& profile);

// Parity of omega twisted by the tails in D: flipped on each tail of D and
// on the center when |D| is odd.
ParityVector twisted_parity(const ReductionGraph& reduction, const std::vector<std::size_t>& twisted_tails);

}  // namespace spincensus

#endif  // SPINCENSUS_REDUCTION_HPP_
