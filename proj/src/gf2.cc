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

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace spincensus {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t width) : width_(width), words_(words_for(width), 0) {}

bool BitVector::test(std::size_t bit) const {
  assert(bit < width_);
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

void BitVector::set(std::size_t bit, bool value) {
  assert(bit < width_);
  const std::uint64_t mask = std::uint64_t{1} << (bit % kWordBits);
  if (value) {
    words_[bit / kWordBits] |= mask;
  } else {
    words_[bit / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t bit) {
  assert(bit < width_);
  words_[bit / kWordBits] ^= std::uint64_t{1} << (bit % kWordBits);
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> BitVector::highest() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t bit = 0; bit < width_; ++bit) {
    if (test(bit)) out.push_back(bit);
  }
  return out;
}

std::string BitVector::to_binary() const {
  std::string out(width_, '0');
  for (std::size_t bit = 0; bit < width_; ++bit) {
    if (test(bit)) out[width_ - 1 - bit] = '1';
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  assert(width_ == other.width_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  assert(width_ == other.width_);
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != other.words_[w]) return words_[w] <=> other.words_[w];
  }
  return std::strong_ordering::equal;
}

AffineSolutionSet::AffineSolutionSet(BitVector particular, std::vector<BitVector> basis)
    : particular_(std::move(particular)) {
  // Insert each kernel vector into a fully reduced echelon form keyed by
  // leading bit, kept sorted by descending leading bit during construction.
  std::vector<BitVector> echelon;
  for (BitVector v : basis) {
    for (const BitVector& e : echelon) {
      if (v.test(*e.highest())) v ^= e;
    }
    if (v.none()) continue;
    const std::size_t lead = *v.highest();
    for (BitVector& e : echelon) {
      if (e.test(lead)) e ^= v;
    }
    auto pos = std::find_if(echelon.begin(), echelon.end(),
                            [lead](const BitVector& e) { return *e.highest() < lead; });
    echelon.insert(pos, std::move(v));
  }
  for (const BitVector& e : echelon) {
    if (particular_.test(*e.highest())) particular_ ^= e;
  }
  std::reverse(echelon.begin(), echelon.end());
  basis_ = std::move(echelon);
}

BitVector AffineSolutionSet::at(std::uint64_t index) const {
  assert(basis_.size() < 64 && index < (std::uint64_t{1} << basis_.size()));
  BitVector out = particular_;
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if ((index >> t) & 1U) out ^= basis_[t];
  }
  return out;
}

bool AffineSolutionSet::contains(const BitVector& candidate) const {
  if (candidate.width() != particular_.width()) return false;
  BitVector residue = candidate ^ particular_;
  for (std::size_t t = basis_.size(); t-- > 0;) {
    if (residue.test(*basis_[t].highest())) residue ^= basis_[t];
  }
  return residue.none();
}

std::optional<AffineSolutionSet> solve_affine(std::span<const BitVector> rows,
                                              const BitVector& rhs, std::size_t unknowns) {
  assert(rhs.width() == rows.size());
  std::vector<BitVector> matrix(rows.begin(), rows.end());
  std::vector<bool> target(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(matrix[r].width() == unknowns);
    target[r] = rhs.test(r);
  }

  std::vector<std::size_t> pivot_column;
  std::vector<bool> is_pivot(unknowns, false);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < matrix.size(); ++col) {
    std::size_t pick = rank;
    while (pick < matrix.size() && !matrix[pick].test(col)) ++pick;
    if (pick == matrix.size()) continue;
    std::swap(matrix[rank], matrix[pick]);
    bool tmp = target[rank];
    target[rank] = target[pick];
    target[pick] = tmp;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (r != rank && matrix[r].test(col)) {
        matrix[r] ^= matrix[rank];
        target[r] = target[r] != target[rank];
      }
    }
    pivot_column.push_back(col);
    is_pivot[col] = true;
    ++rank;
  }
  for (std::size_t r = rank; r < matrix.size(); ++r) {
    if (target[r]) return std::nullopt;
  }

  BitVector particular(unknowns);
  for (std::size_t r = 0; r < rank; ++r) {
    if (target[r]) particular.set(pivot_column[r]);
  }
  std::vector<BitVector> kernel;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(unknowns);
    v.set(free);
    for (std::size_t r = 0; r < rank; ++r) {
      if (matrix[r].test(free)) v.set(pivot_column[r]);
    }
    kernel.push_back(std::move(v));
  }
  return AffineSolutionSet(std::move(particular), std::move(kernel));
}

}  // namespace spincensus
