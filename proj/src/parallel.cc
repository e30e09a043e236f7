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

#include "spincensus/parallel.hpp"

#include <charconv>
#include <cstdlib>

namespace spincensus {

std::optional<std::size_t> parse_thread_cap(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return std::nullopt;
  return value;
}

std::size_t worker_count() {
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPIN_CENSUS_THREADS")) {
    if (auto cap = parse_thread_cap(env)) workers = std::min(workers, *cap);
  }
  return workers;
}

}  // namespace spincensus
