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

#ifndef TOLKIT_CAPS_HPP
#define TOLKIT_CAPS_HPP

#include <cstdint>

namespace tolkit {

/// Resource limits shared by the enumeration, search and checking routines.
/// Exceeding a cap raises Errc::CapExceeded; results are never silently
/// truncated.
struct Caps {
  /// Largest universe accepted by the enumeration routines.
  int max_universe = 6;
  /// Largest number of relations an enumeration may produce.
  int max_set = 20000;
  /// Largest number of quantifier evaluations a checker run may perform.
  std::int64_t max_evals = 1'000'000;
  /// Largest number of distinct term-operation tables kept during clone
  /// generation (2^16 by default).
  std::int64_t max_clone = 65536;
};

/// Reads TOLKIT_MAX_SIZE, TOLKIT_MAX_SET and TOLKIT_MAX_EVALS from the
/// environment on top of the defaults. Unset or malformed variables keep the
/// default value.
Caps caps_from_env();

}  // namespace tolkit

#endif  // TOLKIT_CAPS_HPP
