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

#include <gtest/gtest.h>

#include "spincensus/errors.hpp"
#include "spincensus/oracle.hpp"
#include "spincensus/reduction.hpp"
#include "spincensus/root_census.hpp"

namespace spincensus {
namespace {

std::vector<CurveProfile> cuspidal_profiles(std::uint32_t max_genus) {
  std::vector<CurveProfile> profiles;
  for (std::uint32_t g = 3; g <= max_genus; ++g) {
    for (std::uint32_t tau = 0; 2 * tau <= g; ++tau) {
      for (std::uint32_t gamma = 0; 2 * tau + gamma <= g; ++gamma) {
        profiles.push_back(CurveProfile::create(g, tau, gamma, 0));
      }
    }
  }
  return profiles;
}

TEST(SpinCountsTest, Examples) {
  EXPECT_EQ(n_odd(0), 0);
  EXPECT_EQ(n_even(0), 1);
  EXPECT_EQ(n_odd(1), 1);
  EXPECT_EQ(n_even(1), 3);
  EXPECT_EQ(n_odd(3), 28);
  EXPECT_EQ(n_even(3), 36);
}

TEST(SpinCountsTest, SumAndDifference) {
  for (std::uint32_t g = 0; g <= 200; ++g) {
    EXPECT_EQ(n_even(g) - n_odd(g), pow2(g));
    EXPECT_EQ(n_even(g) + n_odd(g), ipow(4, g));
  }
}

TEST(SpinCountsTest, AgreesWithArfOracle) {
  for (std::uint32_t g = 1; g <= 6; ++g) {
    const oracle::ParitySplit split = oracle::arf_census(g);
    EXPECT_EQ(split.odd, n_odd(g));
    EXPECT_EQ(split.even, n_even(g));
  }
}

TEST(HarrisNodalTest, Examples) {
  EXPECT_EQ(harris_nodal_odd(0, 1), 1);
  EXPECT_EQ(harris_nodal_odd(2, 3), 64);
  for (std::uint32_t g = 0; g <= 10; ++g) EXPECT_EQ(4 * harris_nodal_odd(g, 1), harris_nodal_odd(g + 1, 1));
  EXPECT_THROW(harris_nodal_odd(3, 0), InvalidInput);
}

TEST(ProfileTest, Validation) {
  EXPECT_THROW(CurveProfile::create(2, 0, 0, 0), InvalidInput);
  EXPECT_THROW(CurveProfile::create(4, 2, 1, 0), InvalidInput);
  const CurveProfile p = CurveProfile::create(9, 2, 1, 3);
  EXPECT_EQ(p.normalization_genus(), 1u);
  EXPECT_EQ(p.marked_points(), 11u);
  EXPECT_NO_THROW(CurveProfile::create(4, 2, 0, 0));
}

TEST(ThetaCountTest, TacnodeAndCusp) {
  const CurveProfile p = CurveProfile::create(4, 1, 1, 0);
  EXPECT_EQ(theta_count(p, {0, 0, 0, 0}), 2);
  EXPECT_EQ(theta_count(p, {0, 0, 1, 0}), 6);
  EXPECT_EQ(theta_count(p, {1, 0, 0, 0}), 4);
  EXPECT_EQ(theta_count(p, {1, 0, 1, 0}), 4);
  EXPECT_EQ(theta_count(p, {1, 1, 0, 0}), 3);
  EXPECT_EQ(theta_count(p, {1, 1, 1, 0}), 1);
}

TEST(ThetaCountTest, Nodal) {
  const CurveProfile p = CurveProfile::create(4, 0, 0, 1);
  EXPECT_EQ(theta_count(p, {0, 0, 0, 0}), 64);
  EXPECT_EQ(theta_count(p, {0, 0, 0, 1}), 28);
}

TEST(ThetaCountTest, SmoothIsOddCount) {
  for (std::uint32_t g = 3; g <= 40; ++g) {
    EXPECT_EQ(theta_count(CurveProfile::create(g, 0, 0, 0), {}), n_odd(g));
  }
}

TEST(ThetaCountTest, LargeGenusIsExact) {
  const CurveProfile p = CurveProfile::create(300, 0, 0, 0);
  EXPECT_EQ(theta_count(p, {}), pow2(299) * (pow2(300) - 1));
  EXPECT_EQ(to_decimal(theta_count(CurveProfile::create(70, 0, 0, 0), {})).size(), 42u);
}

TEST(ThetaCountTest, RejectsOutOfLattice) {
  const CurveProfile p = CurveProfile::create(6, 1, 1, 1);
  EXPECT_THROW(theta_count(p, {2, 0, 0, 0}), InvalidInput);
  EXPECT_THROW(theta_count(p, {0, 1, 0, 0}), InvalidInput);
  EXPECT_THROW(theta_count(p, {0, 0, 2, 0}), InvalidInput);
  EXPECT_THROW(theta_count(p, {0, 0, 0, 2}), InvalidInput);
  EXPECT_NO_THROW(check_type(p, {1, 1, 1, 1}));
}

TEST(MultiplicityLawTest, Examples) {
  EXPECT_EQ(theta_multiplicity({0, 0, 0, 0}), 1);
  EXPECT_EQ(theta_multiplicity({1, 1, 0, 0}), 6);
  EXPECT_EQ(theta_multiplicity({1, 0, 1, 0}), 12);
  EXPECT_EQ(theta_multiplicity({3, 1, 2, 0}), 16 * 6 * 9);
  EXPECT_THROW(theta_multiplicity({0, 0, 0, 1}), Unsupported);
}

TEST(CensusTest, Rows) {
  const auto rows = census(CurveProfile::create(4, 1, 1, 0));
  ASSERT_EQ(rows.size(), 6u);
  const std::vector<int> counts{2, 6, 4, 4, 3, 1};
  const std::vector<int> weights{1, 3, 4, 12, 6, 18};
  for (std::size_t n = 0; n < rows.size(); ++n) {
    EXPECT_EQ(rows[n].count, counts[n]);
    EXPECT_EQ(*rows[n].multiplicity, weights[n]);
  }
  for (std::size_t n = 1; n < rows.size(); ++n) EXPECT_LT(rows[n - 1].type, rows[n].type);

  const auto smooth = census(CurveProfile::create(7, 0, 0, 0));
  ASSERT_EQ(smooth.size(), 1u);
  EXPECT_EQ(smooth[0].count, n_odd(7));
  EXPECT_EQ(*smooth[0].multiplicity, 1);

  const auto two_tacnodes = census(CurveProfile::create(5, 2, 0, 0));
  ASSERT_EQ(two_tacnodes.size(), 6u);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> ij{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
  for (std::size_t n = 0; n < ij.size(); ++n) {
    EXPECT_EQ(two_tacnodes[n].type.i, ij[n].first);
    EXPECT_EQ(two_tacnodes[n].type.j, ij[n].second);
  }
}

TEST(CensusTest, NodalRowsHaveNoMultiplicity) {
  const auto rows = census(CurveProfile::create(5, 0, 1, 1));
  ASSERT_EQ(rows.size(), 4u);
  for (const CensusRow& row : rows) {
    EXPECT_EQ(row.multiplicity.has_value(), row.type.h == 0);
    EXPECT_EQ(row.weighted().has_value(), row.type.h == 0);
  }
}

TEST(IdentityTest, Examples) {
  const IdentityCheck tc = identity_check(CurveProfile::create(4, 1, 1, 0));
  EXPECT_EQ(tc.lhs, 120);
  EXPECT_EQ(tc.rhs, 120);
  EXPECT_TRUE(tc.ok);
  const IdentityCheck t = identity_check(CurveProfile::create(6, 1, 0, 0));
  EXPECT_EQ(t.lhs, 2016);
  EXPECT_TRUE(t.ok);
  for (std::uint32_t g = 3; g <= 12; ++g) {
    EXPECT_TRUE(identity_check(CurveProfile::create(g, 0, 0, 0)).ok);
  }
  EXPECT_THROW(identity_check(CurveProfile::create(5, 0, 0, 1)), InvalidInput);
}

TEST(IdentityTest, TacnodeCuspFamily) {
  for (std::uint32_t g = 4; g <= 30; ++g) {
    const IdentityCheck check = identity_check(CurveProfile::create(g, 1, 1, 0));
    EXPECT_EQ(check.lhs, 36 * n_odd(g - 3) + 28 * n_even(g - 3));
  }
}

TEST(IdentityPropertyTest, HoldsForAllCuspidalProfiles) {
  for (const CurveProfile& p : cuspidal_profiles(12)) {
    const IdentityCheck check = identity_check(p);
    EXPECT_TRUE(check.ok) << p.genus() << " " << p.tacnodes() << " " << p.cusps();
    EXPECT_EQ(check.rhs, n_odd(p.genus()));
  }
}

// Dual route: the hyperplane census against the weighted odd count of
// limit square roots on the reduction graph.
TEST(IdentityPropertyTest, MatchesReductionGraphCensus) {
  for (const CurveProfile& p : cuspidal_profiles(9)) {
    const ReductionGraph reduction = reduction_graph(p);
    const auto entries = full_census(reduction.graph, omega_parity(reduction.graph));
    EXPECT_EQ(weighted_totals(entries).odd, identity_check(p).lhs);
  }
}

}  // namespace
}  // namespace spincensus
