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

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "moldex/core/view.hpp"

namespace moldex {

class ExecutionContext;

enum class ActionKind { none, button, dropdown };
enum class ActionStatus { resumed, retried, noop, error };

std::string_view to_string(ActionKind kind) noexcept;
std::string_view to_string(ActionStatus status) noexcept;

struct ActionResult {
  ActionStatus status = ActionStatus::noop;
  std::string detail;
};

Value to_json_value(const ActionResult& result);

/// Client layout hint for dropdown content; forwarded opaquely.
struct PreferredExtent {
  int width = 0;
  int height = 0;
};

struct ActionSpec {
  std::string id;
  std::string label;
  std::string icon_id;
  int priority = 0;
  ActionKind kind = ActionKind::none;
  std::optional<PreferredExtent> preferred_extent;
  std::function<std::optional<ViewData>()> preview;
  std::function<ActionResult(ExecutionContext&)> execute;
  std::string source_ref;

  bool is_none() const noexcept { return kind == ActionKind::none; }
};

/// Wire summary (no callables).
Value to_json_value(const ActionSpec& action);

template <class Derived>
class ActionBuilderBase {
 public:
  Derived& label(std::string value) {
    spec_.label = std::move(value);
    return self();
  }
  Derived& icon(std::string value) {
    spec_.icon_id = std::move(value);
    return self();
  }
  Derived& priority(int value) {
    spec_.priority = value;
    return self();
  }
  Derived& id(std::string value) {
    spec_.id = std::move(value);
    return self();
  }
  Derived& action(std::function<ActionResult(ExecutionContext&)> body) {
    spec_.execute = std::move(body);
    return self();
  }

  operator ActionSpec() const { return static_cast<const Derived&>(*this).build(); }

 protected:
  explicit ActionBuilderBase(ActionKind kind) { spec_.kind = kind; }
  Derived& self() { return static_cast<Derived&>(*this); }
  void check() const;

  ActionSpec spec_;
};

class ButtonActionBuilder : public ActionBuilderBase<ButtonActionBuilder> {
 public:
  ButtonActionBuilder() : ActionBuilderBase(ActionKind::button) {}
  ActionSpec build() const;
};

class DropdownActionBuilder : public ActionBuilderBase<DropdownActionBuilder> {
 public:
  DropdownActionBuilder() : ActionBuilderBase(ActionKind::dropdown) {}
  DropdownActionBuilder& preferred_extent(int width, int height) {
    spec_.preferred_extent = PreferredExtent{width, height};
    return *this;
  }
  DropdownActionBuilder& content(std::function<std::optional<ViewData>()> preview) {
    spec_.preview = std::move(preview);
    return *this;
  }
  ActionSpec build() const;
};

class ActionBuilder {
 public:
  ActionSpec no_action() const { return {}; }
  ButtonActionBuilder button() const { return {}; }
  DropdownActionBuilder dropdown() const { return {}; }
};

}  // namespace moldex
