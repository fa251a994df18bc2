/*
 * Copyright 2026 the tolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tolkit/caps.hpp"

#include <cstdlib>
#include <string>

namespace tolkit {

namespace {

template <typename T>
void read_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  try {
    const long long parsed = std::stoll(raw);
    if (parsed > 0) value = static_cast<T>(parsed);
  } catch (...) {
    // Malformed values keep the default.
  }
}

}  // namespace

Caps caps_from_env() {
  Caps caps;
  read_env("TOLKIT_MAX_SIZE", caps.max_universe);
  read_env("TOLKIT_MAX_SET", caps.max_set);
  read_env("TOLKIT_MAX_EVALS", caps.max_evals);
  return caps;
}

}  // namespace tolkit
