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

#ifndef SPINCENSUS_CLI_HPP_
#define SPINCENSUS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace spincensus::cli {

// Runs the spin-census command line. args[0] is the program name.
// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spincensus::cli

#endif  // SPINCENSUS_CLI_HPP_
