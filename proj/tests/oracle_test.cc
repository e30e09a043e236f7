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

#include "spincensus/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "spincensus/corpus.hpp"
#include "spincensus/errors.hpp"

namespace spincensus::oracle {
namespace {

TEST(QuadraticFormTest, ArfExamples) {
  EXPECT_FALSE(arf(QuadraticForm(1, 0b00)));
  EXPECT_FALSE(arf(QuadraticForm(1, 0b01)));
  EXPECT_FALSE(arf(QuadraticForm(1, 0b10)));
  EXPECT_TRUE(arf(QuadraticForm(1, 0b11)));
  EXPECT_EQ(zero_count(QuadraticForm(1, 0b00)), 3u);
  EXPECT_EQ(zero_count(QuadraticForm(1, 0b11)), 1u);
  EXPECT_TRUE(arf(QuadraticForm(2, 0b0101)));
  EXPECT_FALSE(arf(QuadraticForm(2, 0b0110)));
}

TEST(QuadraticFormTest, Validation) {
  EXPECT_THROW(QuadraticForm(13, 0), InvalidInput);
  EXPECT_THROW(QuadraticForm(2, 0b10000), InvalidInput);
  EXPECT_NO_THROW(QuadraticForm(12, (1U << 24) - 1));
}

TEST(QuadraticFormTest, BasisFormulaMatchesZeroCount) {
  for (std::uint32_t g = 1; g <= 4; ++g) {
    for (std::uint32_t a = 0; a < (1U << (2 * g)); ++a) {
      const QuadraticForm q(g, a);
      EXPECT_EQ(arf(q), arf_by_zero_count(q)) << "g=" << g << " a=" << a;
    }
  }
}

TEST(QuadraticFormTest, RefinesSymplecticPairing) {
  for (std::uint32_t g = 1; g <= 3; ++g) {
    const std::uint32_t n = 1U << (2 * g);
    for (std::uint32_t a = 0; a < n; ++a) {
      const QuadraticForm q(g, a);
      EXPECT_FALSE(q.evaluate(0));
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          EXPECT_EQ(q.evaluate(x ^ y), q.evaluate(x) != q.evaluate(y) != symplectic_pairing(g, x, y));
        }
      }
    }
  }
}

TEST(QuadraticFormTest, ZeroCountsTakeTwoValues) {
  std::mt19937 rng(5);
  for (std::uint32_t g = 5; g <= 10; ++g) {
    for (int trial = 0; trial < 8; ++trial) {
      const QuadraticForm q(g, rng() & ((1U << (2 * g)) - 1));
      const std::uint64_t zeros = zero_count(q);
      const std::uint64_t even = (std::uint64_t{1} << (2 * g - 1)) + (std::uint64_t{1} << (g - 1));
      const std::uint64_t odd = (std::uint64_t{1} << (2 * g - 1)) - (std::uint64_t{1} << (g - 1));
      EXPECT_EQ(zeros, arf(q) ? odd : even);
    }
  }
}

TEST(ArfCensusTest, Examples) {
  EXPECT_EQ(arf_census(1), (ParitySplit{1, 3}));
  EXPECT_EQ(arf_census(2), (ParitySplit{6, 10}));
  EXPECT_EQ(arf_census(3), (ParitySplit{28, 36}));
  EXPECT_EQ(arf_census(6).odd + arf_census(6).even, 4096);
  EXPECT_THROW(arf_census(0), InvalidInput);
  EXPECT_THROW(arf_census(7), InvalidInput);
}

TEST(ParityConvolveTest, Examples) {
  EXPECT_EQ(parity_convolve({}), (ParitySplit{0, 1}));
  const std::vector<ParitySplit> two{{1, 3}, {1, 3}};
  EXPECT_EQ(parity_convolve(two), (ParitySplit{6, 10}));
  const std::vector<ParitySplit> three{{6, 10}, {1, 3}};
  EXPECT_EQ(parity_convolve(three), (ParitySplit{28, 36}));
}

TEST(ParityConvolveTest, GenusIsAdditive) {
  for (std::uint32_t a = 1; a <= 3; ++a) {
    for (std::uint32_t b = 1; a + b <= 6; ++b) {
      const std::vector<ParitySplit> factors{arf_census(a), arf_census(b)};
      EXPECT_EQ(parity_convolve(factors), arf_census(a + b));
    }
  }
}

TEST(BruteAdmissibleTest, Examples) {
  const DualGraph banana = corpus::banana_graph(1, 1);
  EXPECT_EQ(brute_admissible(banana, omega_parity(banana)).size(), 2u);
  const DualGraph path({{"a", 0}, {"b", 0}, {"c", 0}}, {{0, 1}, {1, 2}});
  const auto ends = brute_admissible(path, ParityVector(path, {1, 0, 1}));
  ASSERT_EQ(ends.size(), 1u);
  EXPECT_EQ(ends[0], SupportSpec::all(path));
  EXPECT_TRUE(brute_admissible(path, ParityVector(path, {1, 0, 0})).empty());
  const DualGraph dollar = corpus::dollar_graph(2);
  const auto pairs = brute_admissible(dollar, omega_parity(dollar));
  ASSERT_EQ(pairs.size(), 4u);
  EXPECT_EQ(pairs[1], SupportSpec(dollar, {0, 1}));
  EXPECT_EQ(pairs[2], SupportSpec(dollar, {2, 3}));
}

TEST(BruteAdmissibleTest, EdgeLimit) {
  EXPECT_NO_THROW(brute_admissible(corpus::dollar_graph(12), omega_parity(corpus::dollar_graph(12))));
  EXPECT_THROW(brute_admissible(corpus::dollar_graph(13), omega_parity(corpus::dollar_graph(13))), InvalidInput);
}

}  // namespace
}  // namespace spincensus::oracle
