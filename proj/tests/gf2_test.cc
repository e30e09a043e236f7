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

#include "spincensus/gf2.hpp"

#include <bit>
#include <random>

#include <gtest/gtest.h>

namespace spincensus {
namespace {

BitVector from_mask(std::size_t width, std::uint64_t mask) {
  BitVector v(width);
  for (std::size_t b = 0; b < width; ++b) {
    if ((mask >> b) & 1U) v.set(b);
  }
  return v;
}

TEST(BitVectorTest, BasicOps) {
  BitVector v(70);
  EXPECT_TRUE(v.none());
  EXPECT_FALSE(v.highest().has_value());
  v.set(3);
  v.set(65);
  EXPECT_EQ(v.count(), 2u);
  EXPECT_EQ(*v.highest(), 65u);
  EXPECT_EQ(v.indices(), (std::vector<std::size_t>{3, 65}));
  v.flip(65);
  EXPECT_EQ(*v.highest(), 3u);
  EXPECT_EQ(from_mask(4, 0b0110).to_binary(), "0110");
}

TEST(BitVectorTest, OrderingIsNumeric) {
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      EXPECT_EQ(from_mask(5, a) <=> from_mask(5, b), a <=> b);
    }
  }
}

// Property: the affine solver agrees with exhaustive search, and at(index)
// lists solutions in increasing order.
TEST(SolveAffineTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t unknowns = 1 + rng() % 10;
    const std::size_t equations = 1 + rng() % 6;
    std::vector<std::uint64_t> row_masks(equations);
    std::vector<BitVector> rows;
    BitVector rhs(equations);
    for (std::size_t r = 0; r < equations; ++r) {
      row_masks[r] = rng() & ((std::uint64_t{1} << unknowns) - 1);
      rows.push_back(from_mask(unknowns, row_masks[r]));
      rhs.set(r, rng() & 1U);
    }
    std::vector<std::uint64_t> expected;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << unknowns); ++x) {
      bool ok = true;
      for (std::size_t r = 0; r < equations && ok; ++r) {
        ok = (std::popcount(row_masks[r] & x) % 2 == 1) == rhs.test(r);
      }
      if (ok) expected.push_back(x);
    }
    const auto solved = solve_affine(rows, rhs, unknowns);
    if (expected.empty()) {
      EXPECT_FALSE(solved.has_value());
      continue;
    }
    ASSERT_TRUE(solved.has_value());
    ASSERT_EQ(std::uint64_t{1} << solved->dimension(), expected.size());
    for (std::uint64_t index = 0; index < expected.size(); ++index) {
      EXPECT_EQ(solved->at(index), from_mask(unknowns, expected[index]));
      EXPECT_TRUE(solved->contains(from_mask(unknowns, expected[index])));
    }
  }
}

TEST(SolveAffineTest, InconsistentSystem) {
  // x0 = 0 and x0 = 1.
  std::vector<BitVector> rows{from_mask(1, 1), from_mask(1, 1)};
  BitVector rhs(2);
  rhs.set(1);
  EXPECT_FALSE(solve_affine(rows, rhs, 1).has_value());
}

TEST(SolveAffineTest, NoEquations) {
  const auto solved = solve_affine({}, BitVector(0), 3);
  ASSERT_TRUE(solved.has_value());
  EXPECT_EQ(solved->dimension(), 3u);
  EXPECT_EQ(solved->at(5), from_mask(3, 5));
}

}  // namespace
}  // namespace spincensus
