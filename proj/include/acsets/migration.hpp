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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "acsets/instance.hpp"
#include "acsets/schema.hpp"

namespace acsets {

/// Pullback of `x` (on m.target) along `m`: precomposition with the functor.
/// Errors: SchemaMismatch, IncompleteInstance, EquationViolation.
Instance delta_migrate(const SchemaMorphism& m, const Instance& x, IndexSpec index = {});

using AttrFunction = std::function<Value(const Value&)>;
using AttrPredicate = std::function<bool(const Value&)>;

/// Applies gammas[T] to every attribute with codomain T. Attribute types
/// without a function are left alone; `typing` overrides the value type of
/// the mapped ones. Undefined stays undefined. Errors: TypeMismatch.
Instance map_attributes(const std::map<std::string, AttrFunction>& gammas, const Typing& typing,
                        const Instance& x);

/// Deletes parts whose attribute fails the predicate of its attribute type,
/// then every part that refers to a deleted part, until nothing changes.
/// Survivors keep their relative order.
Instance filter_by_attributes(const std::map<std::string, AttrPredicate>& preds, const Instance& x);

/// The schema with the single object `ob`, its attributes, and every
/// attribute type of `full`.
std::shared_ptr<const Schema> foot_schema(const Schema& full, std::string_view ob);

/// Inclusion of foot_schema(*full, ob) into full.
SchemaMorphism foot_inclusion(std::shared_ptr<const Schema> full, std::string_view ob);

/// Left adjoint to restriction along foot_inclusion: the foot's parts on
/// `target_ob`, every other object empty.
/// Errors: ObHasOutgoingHoms, SchemaMismatch.
Instance discrete_instance(const Instance& foot, std::string_view target_ob,
                           std::shared_ptr<const Schema> full, IndexSpec index = {});

}  // namespace acsets
