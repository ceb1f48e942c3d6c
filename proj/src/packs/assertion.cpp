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

#include "moldex/packs/assertion.hpp"

namespace moldex::packs {
namespace {

const std::string expected_sentence = "The quick brown fox jumps over the lazy dog.\nIt barked twice.";
const std::string actual_sentence = "The quick brown cat jumps over the lazy dog.\nIt barked twice.";

bool textual(const Value& operand) { return operand.is_string() && operand.get<std::string>().size() > 1; }

}  // namespace

std::shared_ptr<const AssertEqualsContext> locate_assert_equals_context(const AssertionFailure& failure) {
  if (!failure.has_traceback()) return nullptr;
  for (const auto& frame : failure.traceback()) {
    if (frame.function_name != assert_equals_frame) continue;
    if (!textual(failure.expected()) || !textual(failure.actual())) return nullptr;
    return std::make_shared<AssertEqualsContext>(failure.expected().get<std::string>(),
                                                 failure.actual().get<std::string>(), frame.index);
  }
  return nullptr;
}

void install_assertion_pack(Registry& registry) {
  if (!registry.mark_installed("moldex.packs.assertion")) return;

  registry.add_view<AssertEqualsContext>("textual_diff_view", markers::inspector_view,
                                         [](const AssertEqualsContext& self, const ViewBuilder& view) -> ViewSpec {
    return view.text_diff()
        .title("Textual Diff")
        .left("Expected", [text = self.expected()] { return text; })
        .right("Actual", [text = self.actual()] { return text; });
  });

  registry.add_view<AssertionFailure>("comparable_types_textual_diff", markers::exception_view,
                                      [](const AssertionFailure& self, const ViewBuilder& view) -> ViewSpec {
    auto context = locate_assert_equals_context(self);
    if (!context) return view.empty();
    return view.forward("Textual Diff", 0, [context] { return context; }, "textual_diff_view");
  });

  registry.add_specification<AssertionFailure>("assertion_diff_specification",
                                               [](const AssertionFailure&, const ObjectRef&) {
    DebuggerSpecification spec;
    spec.title = "Assertion Diff";
    spec.icon_id = "diff";
    spec.priority = 10;
    spec.client_kind = "assertion_diff";
    return spec;
  });

  // Specifications whose views never exist for this failure; they are found
  // but stay inactive.
  for (int i = 1; i <= synthetic_specification_count; ++i) {
    registry.add_specification<AssertionFailure>(
        "synthetic_specification_" + std::to_string(i), [i](const AssertionFailure&, const ObjectRef&) {
          DebuggerSpecification spec;
          spec.title = "Inactive specification " + std::to_string(i);
          spec.view_markers = {Marker("synthetic_view_" + std::to_string(i))};
          spec.action_markers = {Marker("synthetic_action_" + std::to_string(i))};
          spec.priority = 100 + i;
          spec.client_kind = "synthetic";
          return spec;
        });
  }
}

Value assertion_scenario() {
  FrameScope frame("assertion_scenario");
  const std::string expected = expected_sentence;
  const std::string actual = actual_sentence;
  frame.local("expected", expected).local("actual", actual);
  assert_equals(expected, actual);
  return "equal";
}

Value assertion_outside_scenario() {
  FrameScope frame("assertion_outside_scenario");
  raise(AssertionFailure("sentences differ", expected_sentence, actual_sentence));
}

}  // namespace moldex::packs
