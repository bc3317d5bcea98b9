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


#include "acsets/value.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>

#include "doctest.h"
#include "support/errors.hpp"

using namespace acsets;
using acsets::testing::error_of;

TEST_CASE("type tags") {
  for (ValueType t : {ValueType::Int, ValueType::Float, ValueType::String, ValueType::Bool}) {
    CHECK(parse_value_type(to_string(t)) == t);
  }
  CHECK_FALSE(parse_value_type("complex").has_value());
}

TEST_CASE("construction and access") {
  CHECK(Value().is_undefined());
  CHECK_FALSE(Value().type().has_value());
  CHECK(Value(3).type() == ValueType::Int);
  CHECK(Value(std::int64_t{3}).as_int() == 3);
  CHECK(Value(2.5).as_float() == 2.5);
  CHECK(Value("a").as_string() == "a");
  CHECK(Value(true).type() == ValueType::Bool);
  CHECK(error_of([] { Value(1).as_string(); }) == Errc::TypeMismatch);
  CHECK(error_of([] { Value().as_int(); }) == Errc::TypeMismatch);
}

TEST_CASE("equality is per type") {
  CHECK(Value(1) == Value(1));
  CHECK_FALSE(Value(1) == Value(1.0));
  CHECK_FALSE(Value(1) == Value(true));
  CHECK(Value() == Value());
  CHECK_FALSE(Value() == Value(0));
}

TEST_CASE("floats compare by bit pattern") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(Value(nan) == Value(nan));
  CHECK_FALSE(Value(0.0) == Value(-0.0));
  CHECK(Value(0.1) == Value(0.1));
}

TEST_CASE("total order") {
  CHECK(Value(1) < Value(2));
  CHECK_FALSE(Value(2) < Value(2));
  CHECK(Value("a") < Value("b"));
  // Different types order by tag, in both directions consistently.
  CHECK((Value(5) < Value(1.0)) != (Value(1.0) < Value(5)));
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Value, ValueHash> set{Value(1), Value(1.0), Value("1"), Value(true), Value()};
  CHECK(set.size() == 5);
  CHECK(set.count(Value(1)) == 1);
  CHECK(Value(2.0).hash() == Value(2.0).hash());
}

TEST_CASE("display") {
  CHECK(Value().to_display() == "undefined");
  CHECK(Value("x").to_display() == "\"x\"");
  CHECK(Value(false).to_display() == "false");
  CHECK(Value(-4).to_display() == "-4");
}
