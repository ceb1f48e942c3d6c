// Copyright 2026 The Moldex Authors
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

#include <memory>
#include <string>

#include "moldex/core/registry.hpp"
#include "moldex/packs/harness.hpp"

namespace moldex::packs {

/// The two textual operands of a failed assert_equals call.
class AssertEqualsContext : public Object {
  MOLDEX_CLASS(AssertEqualsContext, &Object::klass())

 public:
  AssertEqualsContext(std::string expected, std::string actual, std::size_t frame_index)
      : expected_(std::move(expected)), actual_(std::move(actual)), frame_index_(frame_index) {}

  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }
  /// Index of the assert_equals frame in the captured stack.
  std::size_t frame_index() const noexcept { return frame_index_; }

 private:
  std::string expected_;
  std::string actual_;
  std::size_t frame_index_;
};

/// Finds the assert_equals frame on the failure's stack. Null when the
/// failure was raised elsewhere or the operands are not comparable text
/// (both strings, each longer than one character).
std::shared_ptr<const AssertEqualsContext> locate_assert_equals_context(const AssertionFailure& failure);

inline constexpr int synthetic_specification_count = 6;

/// Textual diff on AssertionFailure, its debugger specification and the
/// synthetic inactive specifications that bring the found count to eight.
void install_assertion_pack(Registry& registry);

/// The failing scenario: compares two sentences inside assert_equals.
Value assertion_scenario();

/// Same failure raised directly, outside any assert_equals call.
Value assertion_outside_scenario();

}  // namespace moldex::packs
