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

#include <string>
#include <string_view>

#include "moldex/core/object.hpp"
#include "moldex/core/session.hpp"

namespace moldex {

/// Protocol error codes carried in error{code, message}.
namespace protocol_errors {
inline constexpr std::string_view parse_error = "parse_error";
inline constexpr std::string_view unknown_method = "unknown_method";
inline constexpr std::string_view invalid_params = "invalid_params";
inline constexpr std::string_view no_such_session = "no_such_session";
inline constexpr std::string_view illegal_state = "illegal_state";
inline constexpr std::string_view no_such_action = "no_such_action";
inline constexpr std::string_view internal_error = "internal_error";
}  // namespace protocol_errors

/// Transport-independent request dispatch.
///
/// Requests are {id, session_id, method, params}; every request gets one
/// response {id, ok, result} or {id, ok: false, error{code, message}}.
/// Work on an open session is queued to the session's owning thread; once a
/// session is terminal reads are served directly.
class ProtocolHandler {
 public:
  explicit ProtocolHandler(SessionHub& hub) : hub_(hub) {}

  Value handle(const Value& request) const;
  /// Parses one line; malformed JSON yields a parse_error response.
  std::string handle_line(std::string_view line) const;

 private:
  Value dispatch(const std::string& method, const Value& request) const;
  std::shared_ptr<DebugSession> session_for(const Value& request) const;

  SessionHub& hub_;
};

Value make_error_response(const Value& id, std::string_view code, std::string_view message);

}  // namespace moldex
