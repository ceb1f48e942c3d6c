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

#include "moldex/core/protocol.hpp"

#include <chrono>
#include <future>

#include "moldex/core/errors.hpp"

namespace moldex {
namespace {

constexpr auto owner_timeout = std::chrono::seconds(30);

struct ProtocolFailure {
  std::string_view code;
  std::string message;
};

std::string_view protocol_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::no_such_session: return protocol_errors::no_such_session;
    case ErrorCode::illegal_state: return protocol_errors::illegal_state;
    case ErrorCode::no_such_action: return protocol_errors::no_such_action;
    case ErrorCode::invalid_argument: return protocol_errors::invalid_params;
    default: return to_string(code);
  }
}

/// Runs `work` on the session's owner, or here when the owner has stopped
/// serving.
Value on_owner(DebugSession& session, std::function<Value()> work) {
  auto task = std::make_shared<std::packaged_task<Value()>>(std::move(work));
  auto result = task->get_future();
  if (!session.post([task] { (*task)(); })) {
    auto lock = session.read_lock();
    (*task)();
  }
  if (result.wait_for(owner_timeout) != std::future_status::ready) {
    throw ProtocolFailure{protocol_errors::internal_error, "session owner did not respond"};
  }
  return result.get();
}

std::optional<std::size_t> spec_index(const Value& params) {
  if (!params.contains("spec_index")) return 0;
  const Value& raw = params["spec_index"];
  if (raw.is_string() && raw.get<std::string>() == "fallback") return std::nullopt;
  if (raw.is_number_integer()) {
    const auto index = raw.get<long long>();
    if (index == -1) return std::nullopt;
    if (index >= 0) return static_cast<std::size_t>(index);
  }
  throw ProtocolFailure{protocol_errors::invalid_params, "spec_index must be an index, -1 or \"fallback\""};
}

std::string action_id(const Value& params) {
  if (!params.contains("action_id") || !params["action_id"].is_string()) {
    throw ProtocolFailure{protocol_errors::invalid_params, "action_id is required"};
  }
  return params["action_id"].get<std::string>();
}

Value views_json(const std::vector<ViewData>& views) {
  Value out = Value::array();
  for (const auto& v : views) out.push_back(v);
  return out;
}

}  // namespace

Value make_error_response(const Value& id, std::string_view code, std::string_view message) {
  return {{"id", id}, {"ok", false}, {"error", {{"code", code}, {"message", message}}}};
}

std::string ProtocolHandler::handle_line(std::string_view line) const {
  Value request;
  try {
    request = Value::parse(line);
  } catch (const Value::parse_error& e) {
    return make_error_response(nullptr, protocol_errors::parse_error, e.what()).dump();
  }
  return handle(request).dump();
}

Value ProtocolHandler::handle(const Value& request) const {
  const Value id = request.is_object() && request.contains("id") ? request["id"] : Value();
  try {
    if (!request.is_object() || !request.contains("method") || !request["method"].is_string()) {
      throw ProtocolFailure{protocol_errors::invalid_params, "request needs a string method"};
    }
    Value result = dispatch(request["method"].get<std::string>(), request);
    return {{"id", id}, {"ok", true}, {"result", std::move(result)}};
  } catch (const ProtocolFailure& f) {
    return make_error_response(id, f.code, f.message);
  } catch (const FrameworkError& e) {
    return make_error_response(id, protocol_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return make_error_response(id, protocol_errors::internal_error, e.what());
  } catch (...) {
    return make_error_response(id, protocol_errors::internal_error, "unknown failure");
  }
}

std::shared_ptr<DebugSession> ProtocolHandler::session_for(const Value& request) const {
  if (!request.contains("session_id") || !request["session_id"].is_string()) {
    throw ProtocolFailure{protocol_errors::invalid_params, "session_id is required"};
  }
  const auto id = request["session_id"].get<std::string>();
  auto session = hub_.find(id);
  if (!session) throw ProtocolFailure{protocol_errors::no_such_session, "no session " + id};
  return session;
}

Value ProtocolHandler::dispatch(const std::string& method, const Value& request) const {
  const Value params = request.contains("params") && request["params"].is_object() ? request["params"] : Value::object();

  if (method == "list_sessions") {
    Value out = Value::array();
    for (const auto& s : hub_.list()) out.push_back(s->summary());
    return out;
  }

  static const std::set<std::string, std::less<>> known = {
      "get_specs", "get_views", "get_stack", "get_actions", "invoke_action",
      "action_preview", "resume", "restart_top", "close"};
  if (!known.contains(method)) throw ProtocolFailure{protocol_errors::unknown_method, "unknown method " + method};

  auto session = session_for(request);
  DebugSession& s = *session;

  if (method == "get_specs") return on_owner(s, [&s] { return to_json_value(s.resolved()); });
  if (method == "get_stack") {
    return on_owner(s, [&s] {
      Value out = Value::array();
      for (const auto& f : s.stack()) out.push_back(to_json_value(f));
      return out;
    });
  }
  if (method == "get_views") {
    const auto index = spec_index(params);
    return on_owner(s, [&s, index] { return views_json(s.views(index)); });
  }
  if (method == "get_actions") {
    return on_owner(s, [&s] {
      Value out = Value::array();
      for (const auto& a : s.collect_actions()) out.push_back(to_json_value(a));
      return out;
    });
  }
  if (method == "action_preview") {
    const auto id = action_id(params);
    return on_owner(s, [&s, id] {
      auto preview = s.action_preview(id);
      return preview ? Value(*preview) : Value();
    });
  }

  // Control endpoints; the session state machine decides what is legal.
  if (method == "invoke_action") {
    const auto id = action_id(params);
    return on_owner(s, [&s, id] {
      Value out = to_json_value(s.invoke_action(id));
      out["state"] = to_string(s.state());
      return out;
    });
  }
  if (method == "resume") {
    std::optional<Value> substitute;
    if (params.contains("substitute")) substitute = params["substitute"];
    return on_owner(s, [&s, substitute] {
      s.resume_and_close(substitute);
      return Value{{"state", to_string(s.state())}};
    });
  }
  if (method == "restart_top") {
    return on_owner(s, [&s] {
      s.restart_top_frame();
      return Value{{"state", to_string(s.state())}};
    });
  }
  return on_owner(s, [&s] {
    s.close();
    return Value{{"state", to_string(s.state())}};
  });
}

}  // namespace moldex
