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

#ifndef SPINCENSUS_VERIFY_HPP_
#define SPINCENSUS_VERIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spincensus {

enum class Suite { kArf, kAdmissible, kIdentity, kReduction, kAll };

std::optional<Suite> parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite);

}  // namespace spincensus

#endif  // SPINCENSUS_VERIFY_HPP_
