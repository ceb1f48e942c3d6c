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

#include <doctest.h>

#include "helpers.hpp"

using namespace moldex;
using moldex::testing::HardFailure;
using moldex::testing::PlainFailure;

namespace {

unsigned raise_line = 0;

void inner(int depth) {
  FrameScope frame("inner");
  const std::string label = "payload";
  frame.local("depth", depth).local("label", label);
  raise_line = __LINE__ + 1;
  raise(PlainFailure("inner failed"));
}

void outer() {
  FrameScope frame("outer");
  inner(3);
}

}  // namespace

TEST_CASE("raise captures the live shadow stack with locals, top first") {
  try {
    outer();
    FAIL("expected a raise");
  } catch (const PlainFailure& e) {
    REQUIRE(e.has_traceback());
    const auto& frames = e.traceback();
    REQUIRE(frames.size() == 2);
    CHECK(frames[0].function_name == "inner");
    CHECK(frames[0].line == raise_line);
    CHECK(frames[0].file.find("test_exception.cpp") != std::string::npos);
    REQUIRE(frames[0].local("depth") != nullptr);
    CHECK(*frames[0].local("depth") == "3");
    CHECK(*frames[0].local("label") == "payload");
    CHECK(frames[1].function_name == "outer");
    CHECK(frames[1].index == 1);
  }
  CHECK(shadow_stack_depth() == 0);
}

TEST_CASE("an exception that was never raised has no stack") {
  PlainFailure e("not raised");
  CHECK_FALSE(e.has_traceback());
  CHECK(e.traceback().empty());
  CHECK(capture_stack(e).empty());
}

TEST_CASE("capture_stack drops frames at or below the boundary") {
  FrameScope caller("caller");
  const auto boundary = shadow_stack_depth();
  try {
    outer();
  } catch (const PlainFailure& e) {
    CHECK(e.traceback().size() == 3);
    const auto stack = capture_stack(e, boundary);
    REQUIRE(stack.size() == 2);
    CHECK(stack[0].function_name == "inner");
    CHECK(stack[1].function_name == "outer");
    CHECK(stack[1].index == 1);
  }
}

TEST_CASE("long locals are truncated") {
  const std::string long_text(500, 'y');
  FrameScope frame("long");
  frame.local("text", long_text);
  try {
    raise(PlainFailure("x"));
  } catch (const PlainFailure& e) {
    const auto* rendered = e.traceback()[0].local("text");
    REQUIRE(rendered != nullptr);
    CHECK(rendered->size() == max_local_chars + 3);
    CHECK(rendered->ends_with("..."));
  }
}

TEST_CASE("exceptions display class and message; errors are not resumable") {
  PlainFailure plain("boom");
  HardFailure hard("bang");
  CHECK(plain.display_string() == "PlainFailure: boom");
  CHECK(plain.resumable());
  CHECK_FALSE(hard.resumable());
  CHECK(std::string(hard.what()) == "bang");
  CHECK(hard.class_info().inherits_from(Error::klass()));
}

TEST_CASE("a transformation is marked performed once per raised instance") {
  PlainFailure e("x");
  CHECK(e.mark_transformation_performed());
  CHECK_FALSE(e.mark_transformation_performed());
  PlainFailure copy = e;
  CHECK_FALSE(copy.mark_transformation_performed());
}
