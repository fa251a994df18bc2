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

#ifndef TOLKIT_ERRORS_HPP
#define TOLKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tolkit {

enum class Errc {
  SizeMismatch,
  Shape,
  Range,
  DuplicateName,
  CapExceeded,
  Parse,
  UnboundVariable,
  VariableMismatch,
  UnsupportedPlus,
  UnknownLabel,
  UnboundLabel,
  NotReflexiveSymmetric,
  NotATolerance,
  BadWitness,
  RegularityViolation,
  LabelMismatch,
  DistinguishedMismatch,
  MissingSymbol,
  Arity,
  UnknownOperation,
  Io,
  Internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tolkit

#endif  // TOLKIT_ERRORS_HPP
