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

#ifndef SPINCENSUS_ERRORS_HPP_
#define SPINCENSUS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spincensus {

// Malformed or out-of-contract input: bad graph, bad index, bad profile.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// The requested quantity has no defined value in this model.
class Unsupported : public std::domain_error {
 public:
  explicit Unsupported(const std::string& what) : std::domain_error(what) {}
};

}  // namespace spincensus

#endif  // SPINCENSUS_ERRORS_HPP_
