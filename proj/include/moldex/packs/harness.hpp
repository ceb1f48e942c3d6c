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

// Minimal test harness used by the demo packs: failures are moldable
// exceptions and assert_equals leaves a frame the debugger can find.

#include <source_location>
#include <string>

#include "moldex/core/exception.hpp"
#include "moldex/core/stack.hpp"

namespace moldex::packs {

inline constexpr std::string_view assert_equals_frame = "assert_equals";

class TestFailure : public Error {
  MOLDEX_CLASS(TestFailure, &Error::klass())

 public:
  using Error::Error;
};

class AssertionFailure : public TestFailure {
  MOLDEX_CLASS(AssertionFailure, &TestFailure::klass())

 public:
  explicit AssertionFailure(std::string message, Value expected = nullptr, Value actual = nullptr)
      : TestFailure(std::move(message)), expected_(std::move(expected)), actual_(std::move(actual)) {}

  const Value& expected() const noexcept { return expected_; }
  const Value& actual() const noexcept { return actual_; }

 private:
  Value expected_;
  Value actual_;
};

/// Wire value of an operand: strings and numbers as themselves, anything
/// else by its stack rendering.
template <class T>
Value operand_value(const T& value) {
  if constexpr (std::is_convertible_v<const T&, std::string_view>) {
    return Value(std::string(std::string_view(value)));
  } else if constexpr (std::is_arithmetic_v<T>) {
    return Value(value);
  } else {
    return Value(render_for_stack(value));
  }
}

/// Raises `make(message, expected, actual)` when the operands differ.
template <class Make, class T, class U>
void assert_equals_with(Make make, const T& expected, const U& actual,
                        std::source_location where = std::source_location::current()) {
  FrameScope frame(std::string(assert_equals_frame), where);
  frame.local("expected", expected).local("actual", actual);
  if (expected == actual) return;
  raise(make("Expected " + render_for_stack(expected) + " but was " + render_for_stack(actual),
             operand_value(expected), operand_value(actual)),
        where);
}

template <class T, class U>
void assert_equals(const T& expected, const U& actual, std::source_location where = std::source_location::current()) {
  assert_equals_with([](std::string m, Value e, Value a) { return AssertionFailure(std::move(m), e, a); }, expected,
                     actual, where);
}

/// Fails without comparison context.
[[noreturn]] void fail(std::string message, std::source_location where = std::source_location::current());

}  // namespace moldex::packs
