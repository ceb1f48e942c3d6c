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

#include <istream>
#include <ostream>
#include <string>

#include "moldex/core/object.hpp"

namespace moldex {

/// Blocking newline-delimited JSON client for DebugServer.
class LineClient {
 public:
  /// Throws FrameworkError(io_error) when the connection fails.
  LineClient(const std::string& host, int port);
  ~LineClient();

  LineClient(const LineClient&) = delete;
  LineClient& operator=(const LineClient&) = delete;

  /// Sends one request line and reads one response line.
  std::string request_line(const std::string& line);
  /// Fills in a fresh id when the request has none.
  Value request(Value request);
  Value call(const std::string& method, const std::string& session_id = {}, Value params = Value::object());

 private:
  int fd_ = -1;
  std::string buffer_;
  long long next_id_ = 1;
};

/// Human-readable rendering of a wire ViewData.
std::string render_view_text(const Value& view);

/// Line-oriented scripted client: reads commands, prints results.
///
///   sessions | specs | views <index|fallback> | stack | actions
///   invoke <action-id> | preview <action-id> | resume [json] | restart
///   close | raw <request-json> | # comment
///
/// Returns the number of commands that got an error response.
int run_text_client(LineClient& client, const std::string& session_id, std::istream& commands, std::ostream& out);

}  // namespace moldex
