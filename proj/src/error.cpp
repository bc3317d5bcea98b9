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

#include "acsets/error.hpp"

namespace acsets {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnknownName: return "UnknownName";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::NonParallelEquation: return "NonParallelEquation";
    case Errc::NonComposable: return "NonComposable";
    case Errc::IllTypedImage: return "IllTypedImage";
    case Errc::NonParallel: return "NonParallel";
    case Errc::InvalidDiagram: return "InvalidDiagram";
    case Errc::NotACocone: return "NotACocone";
    case Errc::NotACone: return "NotACone";
    case Errc::IncompleteTyping: return "IncompleteTyping";
    case Errc::BadIndexSpec: return "BadIndexSpec";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::UndefinedTraversal: return "UndefinedTraversal";
    case Errc::NotNatural: return "NotNatural";
    case Errc::AttributeMismatch: return "AttributeMismatch";
    case Errc::AttributeConflict: return "AttributeConflict";
    case Errc::IncompleteInstance: return "IncompleteInstance";
    case Errc::EquationViolation: return "EquationViolation";
    case Errc::ObHasOutgoingHoms: return "ObHasOutgoingHoms";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::FootMismatch: return "FootMismatch";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ParseError: return "ParseError";
    case Errc::ResultMismatch: return "ResultMismatch";
  }
  return "Unknown";
}

}  // namespace acsets
