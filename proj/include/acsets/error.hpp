// Copyright 2026 The acsets Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acsets {

/// Error categories raised by the engine. Every failure surfaces as an
/// acsets::Error carrying one of these codes.
enum class Errc {
  DuplicateName,
  UnknownName,
  UnknownObject,
  NonParallelEquation,
  NonComposable,
  IllTypedImage,
  NonParallel,
  InvalidDiagram,
  NotACocone,
  NotACone,
  IncompleteTyping,
  BadIndexSpec,
  TypeMismatch,
  DanglingReference,
  DuplicateKey,
  OutOfRange,
  UndefinedTraversal,
  NotNatural,
  AttributeMismatch,
  AttributeConflict,
  IncompleteInstance,
  EquationViolation,
  ObHasOutgoingHoms,
  SchemaMismatch,
  FootMismatch,
  BadParameter,
  ParseError,
  ResultMismatch,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace acsets
