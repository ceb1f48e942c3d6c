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

#include "moldex/core/action.hpp"

#include "moldex/core/errors.hpp"

namespace moldex {

std::string_view to_string(ActionKind kind) noexcept {
  switch (kind) {
    case ActionKind::none: return "none";
    case ActionKind::button: return "button";
    case ActionKind::dropdown: return "dropdown";
  }
  return "none";
}

std::string_view to_string(ActionStatus status) noexcept {
  switch (status) {
    case ActionStatus::resumed: return "resumed";
    case ActionStatus::retried: return "retried";
    case ActionStatus::noop: return "noop";
    case ActionStatus::error: return "error";
  }
  return "noop";
}

Value to_json_value(const ActionResult& result) {
  return {{"status", to_string(result.status)}, {"detail", result.detail}};
}

Value to_json_value(const ActionSpec& action) {
  Value out = {{"id", action.id},
               {"label", action.label},
               {"icon_id", action.icon_id},
               {"priority", action.priority},
               {"kind", to_string(action.kind)},
               {"has_preview", static_cast<bool>(action.preview)}};
  if (action.preferred_extent) {
    out["preferred_extent"] = {{"width", action.preferred_extent->width},
                               {"height", action.preferred_extent->height}};
  }
  return out;
}

template <class Derived>
void ActionBuilderBase<Derived>::check() const {
  if (spec_.id.empty()) throw FrameworkError(ErrorCode::invalid_argument, "actions need an id");
  if (spec_.label.empty()) throw FrameworkError(ErrorCode::invalid_argument, "action " + spec_.id + " needs a label");
  if (!spec_.execute) throw FrameworkError(ErrorCode::invalid_argument, "action " + spec_.id + " has no body");
}

template class ActionBuilderBase<ButtonActionBuilder>;
template class ActionBuilderBase<DropdownActionBuilder>;

ActionSpec ButtonActionBuilder::build() const {
  check();
  return spec_;
}

ActionSpec DropdownActionBuilder::build() const {
  check();
  if (!spec_.preview) {
    throw FrameworkError(ErrorCode::invalid_argument, "dropdown action " + spec_.id + " must supply a preview");
  }
  return spec_;
}

}  // namespace moldex
