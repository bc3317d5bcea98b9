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

#include <string>
#include <string_view>
#include <vector>

#include "acsets/acset_cat.hpp"

namespace acsets {

/// An open system: L(left_foot) -> apex <- L(right_foot), where L is
/// discrete_instance on `target_ob`.
struct StructuredCospan {
  std::string target_ob;
  InstancePtr left_foot;
  InstancePtr right_foot;
  InstancePtr apex;
  ACSetMorphism left_leg;
  ACSetMorphism right_leg;

  /// Apex parts hit by the left or right leg, in foot order.
  std::vector<Part> left_ids() const;
  std::vector<Part> right_ids() const;
};

/// Exposes apex parts of `target_ob` as feet; ids may repeat. Foot attributes
/// are copied from the apex. Errors: OutOfRange, ObHasOutgoingHoms.
StructuredCospan open(InstancePtr apex, std::string_view target_ob, const std::vector<Part>& left_ids,
                      const std::vector<Part>& right_ids);

/// Glues a's apex to b's apex along the shared foot. The shared foot must be
/// equal as data. a's apex numbering comes first in the result.
/// Errors: SchemaMismatch, FootMismatch, AttributeConflict.
StructuredCospan compose_cospans(const StructuredCospan& a, const StructuredCospan& b);

/// Apex is the discrete instance on the foot; both legs are identities.
StructuredCospan identity_cospan(InstancePtr foot, std::string_view target_ob,
                                 std::shared_ptr<const Schema> full);

enum class FootSide { Left, Right };

/// Renumbers one foot: new foot part i is old foot part order[i]. `order`
/// must be a permutation. Errors: BadParameter.
StructuredCospan relabel_foot(const StructuredCospan& c, FootSide side, const std::vector<Part>& order);

}  // namespace acsets
