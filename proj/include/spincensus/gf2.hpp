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

#ifndef SPINCENSUS_GF2_HPP_
#define SPINCENSUS_GF2_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spincensus {

// Fixed-width vector over GF(2). Ordering compares the vectors as binary
// numbers with bit 0 least significant; both operands must have equal width.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t width);

  std::size_t width() const { return width_; }
  bool test(std::size_t bit) const;
  void set(std::size_t bit, bool value = true);
  void flip(std::size_t bit);

  bool none() const;
  std::size_t count() const;
  std::optional<std::size_t> highest() const;
  std::vector<std::size_t> indices() const;

  // Most significant bit first, exactly width() characters.
  std::string to_binary() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  std::strong_ordering operator<=>(const BitVector& other) const;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

// Solution set of an affine GF(2) system, stored as a particular solution
// plus a basis of the kernel. The basis is fully reduced with distinct
// leading (highest) bits in ascending order, and the particular solution is
// zero on every leading bit, so that solution(index) is increasing in index.
class AffineSolutionSet {
 public:
  AffineSolutionSet(BitVector particular, std::vector<BitVector> basis);

  std::size_t dimension() const { return basis_.size(); }
  const BitVector& particular() const { return particular_; }
  std::span<const BitVector> basis() const { return basis_; }

  // The index-th solution in increasing order; requires dimension() < 64
  // and index < 2^dimension().
  BitVector at(std::uint64_t index) const;
  bool contains(const BitVector& candidate) const;

 private:
  BitVector particular_;
  std::vector<BitVector> basis_;
};

// Solves rows * x = rhs, where rows[r] holds the coefficients of equation r
// over `unknowns` columns. Returns nullopt when the system is inconsistent.
std::optional<AffineSolutionSet> solve_affine(std::span<const BitVector> rows,
                                              const BitVector& rhs,
                                              std::size_t unknowns);

}  // namespace spincensus

#endif  // SPINCENSUS_GF2_HPP_
