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

#include "moldex/core/errors.hpp"

namespace moldex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::inconsistent_hierarchy: return "inconsistent_hierarchy";
    case ErrorCode::duplicate_registration: return "duplicate_registration";
    case ErrorCode::invalid_view_spec: return "invalid_view_spec";
    case ErrorCode::unknown_view_selector: return "unknown_view_selector";
    case ErrorCode::target_evaluation_error: return "target_evaluation_error";
    case ErrorCode::view_evaluation_error: return "view_evaluation_error";
    case ErrorCode::forward_cycle: return "forward_cycle";
    case ErrorCode::illegal_state: return "illegal_state";
    case ErrorCode::not_restartable: return "not_restartable";
    case ErrorCode::control_not_permitted: return "control_not_permitted";
    case ErrorCode::no_such_session: return "no_such_session";
    case ErrorCode::no_such_action: return "no_such_action";
    case ErrorCode::target_not_found: return "target_not_found";
    case ErrorCode::match_not_found: return "match_not_found";
    case ErrorCode::pattern_ambiguous: return "pattern_ambiguous";
    case ErrorCode::patch_invalid: return "patch_invalid";
    case ErrorCode::script_error: return "script_error";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::unknown_pack: return "unknown_pack";
    case ErrorCode::bind_failure: return "bind_failure";
    case ErrorCode::protocol_error: return "protocol_error";
  }
  return "unknown";
}

}  // namespace moldex
