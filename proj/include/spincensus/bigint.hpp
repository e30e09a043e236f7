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

#ifndef SPINCENSUS_BIGINT_HPP_
#define SPINCENSUS_BIGINT_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spincensus {

// Exact unbounded integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

BigInt pow2(std::uint64_t exponent);
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace spincensus

#endif  // SPINCENSUS_BIGINT_HPP_
