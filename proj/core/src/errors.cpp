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

#include "tolkit/errors.hpp"

namespace tolkit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SizeMismatch:
      return "SIZE_MISMATCH";
    case Errc::Shape:
      return "SHAPE";
    case Errc::Range:
      return "RANGE";
    case Errc::DuplicateName:
      return "DUPLICATE_NAME";
    case Errc::CapExceeded:
      return "CAP_EXCEEDED";
    case Errc::Parse:
      return "PARSE";
    case Errc::UnboundVariable:
      return "UNBOUND_VARIABLE";
    case Errc::VariableMismatch:
      return "VARIABLE_MISMATCH";
    case Errc::UnsupportedPlus:
      return "UNSUPPORTED_PLUS";
    case Errc::UnknownLabel:
      return "UNKNOWN_LABEL";
    case Errc::UnboundLabel:
      return "UNBOUND_LABEL";
    case Errc::NotReflexiveSymmetric:
      return "NOT_REFLEXIVE_SYMMETRIC";
    case Errc::NotATolerance:
      return "NOT_A_TOLERANCE";
    case Errc::BadWitness:
      return "BAD_WITNESS";
    case Errc::RegularityViolation:
      return "REGULARITY_VIOLATION";
    case Errc::LabelMismatch:
      return "LABEL_MISMATCH";
    case Errc::DistinguishedMismatch:
      return "DISTINGUISHED_MISMATCH";
    case Errc::MissingSymbol:
      return "MISSING_SYMBOL";
    case Errc::Arity:
      return "ARITY";
    case Errc::UnknownOperation:
      return "UNKNOWN_OPERATION";
    case Errc::Io:
      return "IO";
    case Errc::Internal:
      return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace tolkit
