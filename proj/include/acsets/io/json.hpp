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

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "acsets/acset_cat.hpp"
#include "acsets/cospan.hpp"
#include "acsets/instance.hpp"
#include "acsets/schema.hpp"

namespace acsets::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Errors: ParseError with the byte offset.
Json parse(std::string_view text);
/// Canonical text: compact, keys in declaration order, newline-terminated.
std::string dump(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json to_json(const Schema& schema);
std::shared_ptr<const Schema> schema_from_json(const Json& j);

/// An inline schema object, or a string naming a schema file (relative to
/// `base`) or a canned schema.
std::shared_ptr<const Schema> resolve_schema(const Json& j, const std::filesystem::path& base = {});

Json to_json(const Typing& typing);
Typing typing_from_json(const Json& j);

/// Hom value 0 and undefined attributes are written as 0 and null. Non-finite
/// floats are written as the strings "NaN", "Infinity", "-Infinity".
Json to_json(const Instance& x);
/// Errors: ParseError, SchemaMismatch, TypeMismatch, DanglingReference,
/// DuplicateKey.
Instance instance_from_json(const Json& j, const std::filesystem::path& base = {});

Json to_json(const SchemaMorphism& m);
SchemaMorphism schema_morphism_from_json(const Json& j, const std::filesystem::path& base = {});

/// {"components": {"V": [...], ...}}; dom and codom are supplied by the caller.
Json to_json(const ACSetMorphism& f);
ACSetMorphism acset_morphism_from_json(const Json& j, InstancePtr dom, InstancePtr codom);

/// {"target_ob", "apex", "left", "right"}.
Json to_json(const StructuredCospan& c);
StructuredCospan cospan_from_json(const Json& j, const std::filesystem::path& base = {});

// Text-level helpers.
std::string write_schema(const Schema& schema);
std::string write_instance(const Instance& x);
Instance read_instance(std::string_view text, const std::filesystem::path& base = {});
Instance read_instance_file(const std::filesystem::path& path);

}  // namespace acsets::io
