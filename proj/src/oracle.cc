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

#include <bit>
#include <string>

#include "spincensus/errors.hpp"
#include "spincensus/parallel.hpp"

namespace spincensus::oracle {

std::vector<SupportSpec> brute_admissible(const DualGraph& graph, const ParityVector& parity) {
  const std::size_t m = graph.edge_count();
  if (m > kMaxBruteForceEdges) {
    throw InvalidInput("brute force refuses " + std::to_string(m) + " edges (limit " +
                       std::to_string(kMaxBruteForceEdges) + ")");
  }
  if (parity.size() != graph.vertex_count()) throw InvalidInput("parity domain mismatch");

  const std::uint64_t subsets = std::uint64_t{1} << m;
  constexpr std::uint64_t kChunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((subsets + kChunk - 1) / kChunk);
  std::vector<std::vector<std::uint64_t>> found(chunks);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        std::vector<std::uint32_t> ends(graph.vertex_count());
        const std::uint64_t end = std::min(subsets, (c + 1) * kChunk);
        for (std::uint64_t mask = c * kChunk; mask < end; ++mask) {
          std::fill(ends.begin(), ends.end(), 0);
          for (std::size_t e = 0; e < m; ++e) {
            if (((mask >> e) & 1U) == 0) continue;
            ++ends[graph.edge(e).u];
            ++ends[graph.edge(e).v];  // a loop lands twice on the same vertex
          }
          bool ok = true;
          for (std::size_t v = 0; v < ends.size() && ok; ++v) ok = (ends[v] % 2 == 1) == parity.bit(v);
          if (ok) found[c].push_back(mask);
        }
      },
      1);

  std::vector<SupportSpec> out;
  for (const auto& chunk : found) {
    for (std::uint64_t mask : chunk) {
      BitVector bits(m);
      for (std::size_t e = 0; e < m; ++e) {
        if ((mask >> e) & 1U) bits.set(e);
      }
      out.emplace_back(std::move(bits));
    }
  }
  return out;
}

QuadraticForm::QuadraticForm(std::uint32_t genus, std::uint32_t linear) : genus_(genus), linear_(linear) {
  if (genus > kMaxFormGenus) throw InvalidInput("form genus above " + std::to_string(kMaxFormGenus));
  if ((linear >> (2 * genus)) != 0) throw InvalidInput("linear part wider than 2g bits");
}

bool QuadraticForm::evaluate(std::uint32_t x) const {
  const std::uint32_t low_mask = (std::uint32_t{1} << genus_) - 1;
  const std::uint32_t e_part = x & low_mask;
  const std::uint32_t f_part = (x >> genus_) & low_mask;
  const int quadratic = std::popcount(e_part & f_part);
  const int linear = std::popcount(linear_ & x);
  return ((quadratic + linear) & 1) == 1;
}

bool symplectic_pairing(std::uint32_t genus, std::uint32_t x, std::uint32_t y) {
  const std::uint32_t low_mask = (std::uint32_t{1} << genus) - 1;
  const int cross = std::popcount((x & low_mask) & (y >> genus)) +
                    std::popcount((x >> genus) & (y & low_mask) & low_mask);
  return (cross & 1) == 1;
}

bool arf(const QuadraticForm& form) {
  bool value = false;
  for (std::uint32_t i = 0; i < form.genus(); ++i) {
    const bool on_e = form.evaluate(std::uint32_t{1} << i);
    const bool on_f = form.evaluate(std::uint32_t{1} << (form.genus() + i));
    value ^= on_e && on_f;
  }
  return value;
}

std::uint64_t zero_count(const QuadraticForm& form) {
  const std::uint64_t space = std::uint64_t{1} << (2 * form.genus());
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < space; ++x) {
    if (!form.evaluate(static_cast<std::uint32_t>(x))) ++zeros;
  }
  return zeros;
}

bool arf_by_zero_count(const QuadraticForm& form) {
  const std::uint32_t g = form.genus();
  const std::uint64_t even_zeros =
      g == 0 ? 1 : (std::uint64_t{1} << (2 * g - 1)) + (std::uint64_t{1} << (g - 1));
  return zero_count(form) != even_zeros;
}

ParitySplit arf_census(std::uint32_t genus) {
  if (genus < 1 || genus > kMaxCensusGenus) {
    throw InvalidInput("Arf census genus must be in 1.." + std::to_string(kMaxCensusGenus));
  }
  const std::size_t forms = std::size_t{1} << (2 * genus);
  std::vector<std::uint8_t> odd(forms, 0);
  parallel_for(
      forms, [&](std::size_t a) { odd[a] = arf_by_zero_count(QuadraticForm(genus, static_cast<std::uint32_t>(a))); },
      16);
  ParitySplit split;
  for (std::uint8_t bit : odd) {
    if (bit) {
      ++split.odd;
    } else {
      ++split.even;
    }
  }
  return split;
}

ParitySplit parity_convolve(std::span<const ParitySplit> factors) {
  ParitySplit acc{0, 1};
  for (const ParitySplit& f : factors) {
    ParitySplit next;
    next.odd = acc.odd * f.even + acc.even * f.odd;
    next.even = acc.even * f.even + acc.odd * f.odd;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace spincensus::oracle
