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

#include <stdexcept>
#include <string>
#include <string_view>

namespace moldex {

/// Failure categories raised by the framework itself. These never open a
/// debugger: the guard lets them propagate untouched.
enum class ErrorCode {
  invalid_argument,
  inconsistent_hierarchy,
  duplicate_registration,
  invalid_view_spec,
  unknown_view_selector,
  target_evaluation_error,
  view_evaluation_error,
  forward_cycle,
  illegal_state,
  not_restartable,
  control_not_permitted,
  no_such_session,
  no_such_action,
  target_not_found,
  match_not_found,
  pattern_ambiguous,
  patch_invalid,
  script_error,
  io_error,
  unknown_pack,
  bind_failure,
  protocol_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class FrameworkError : public std::runtime_error {
 public:
  FrameworkError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moldex
