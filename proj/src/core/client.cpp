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

#include "moldex/core/client.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

#include "moldex/core/errors.hpp"

namespace moldex {

LineClient::LineClient(const std::string& host, int port) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* found = nullptr;
  if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &found) != 0 || found == nullptr) {
    throw FrameworkError(ErrorCode::io_error, "cannot resolve " + host);
  }
  fd_ = ::socket(found->ai_family, found->ai_socktype, found->ai_protocol);
  const bool ok = fd_ >= 0 && ::connect(fd_, found->ai_addr, found->ai_addrlen) == 0;
  const std::string reason = std::strerror(errno);
  ::freeaddrinfo(found);
  if (!ok) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
    throw FrameworkError(ErrorCode::io_error, "cannot connect to " + host + ":" + std::to_string(port) + ": " + reason);
  }
}

LineClient::~LineClient() {
  if (fd_ >= 0) ::close(fd_);
}

std::string LineClient::request_line(const std::string& line) {
  std::string data = line + "\n";
  std::string_view rest = data;
  while (!rest.empty()) {
    const ssize_t n = ::send(fd_, rest.data(), rest.size(), MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw FrameworkError(ErrorCode::io_error, "connection closed while sending");
    rest.remove_prefix(static_cast<std::size_t>(n));
  }
  while (true) {
    if (auto newline = buffer_.find('\n'); newline != std::string::npos) {
      std::string response = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      return response;
    }
    char chunk[4096];
    const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw FrameworkError(ErrorCode::io_error, "connection closed while waiting for a response");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Value LineClient::request(Value request) {
  if (!request.contains("id")) request["id"] = next_id_++;
  return Value::parse(request_line(request.dump()));
}

Value LineClient::call(const std::string& method, const std::string& session_id, Value params) {
  Value req = {{"method", method}, {"params", std::move(params)}};
  if (!session_id.empty()) req["session_id"] = session_id;
  return request(std::move(req));
}

namespace {

void render_tree(const Value& nodes, int depth, std::ostringstream& out) {
  for (const auto& node : nodes) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << node.value("label", "");
    const auto status = node.value("status", "");
    if (!status.empty()) out << " [" << status << "]";
    out << "\n";
    if (node.contains("children")) render_tree(node["children"], depth + 1, out);
  }
}

std::string scalar(const Value& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string render_view_text(const Value& view) {
  std::ostringstream out;
  out << "== " << view.value("title", "") << " (" << view.value("kind", "") << ", priority "
      << view.value("priority", 0) << ") ==\n";
  const std::string kind = view.value("kind", "");
  const Value& body = view.contains("body") ? view["body"] : Value();
  if (kind == "text") {
    out << scalar(body);
    if (!body.is_string() || body.get<std::string>().empty() || body.get<std::string>().back() != '\n') out << "\n";
  } else if (kind == "list") {
    for (const auto& item : body) out << "- " << scalar(item) << "\n";
  } else if (kind == "columned_list") {
    std::string sep;
    for (const auto& c : body.value("columns", Value::array())) {
      out << sep << scalar(c);
      sep = " | ";
    }
    out << "\n";
    for (const auto& row : body.value("rows", Value::array())) {
      sep.clear();
      for (const auto& cell : row) {
        out << sep << scalar(cell);
        sep = " | ";
      }
      out << "\n";
    }
  } else if (kind == "tree") {
    render_tree(body, 0, out);
  } else if (kind == "text_diff") {
    std::string line;
    for (const auto& hunk : body) {
      const auto op = hunk.value("op", "eq");
      const char mark = op == "ins" ? '+' : op == "del" ? '-' : ' ';
      std::istringstream lines(hunk.value("text", ""));
      while (std::getline(lines, line)) out << mark << " " << line << "\n";
    }
  } else if (kind == "error") {
    out << "error " << body.value("code", "") << ": " << body.value("message", "") << "\n";
  } else {
    out << body.dump() << "\n";
  }
  if (view.value("truncated", false)) out << "(truncated)\n";
  return out.str();
}

int run_text_client(LineClient& client, const std::string& session_id, std::istream& commands, std::ostream& out) {
  int failures = 0;
  std::string line;
  while (std::getline(commands, line)) {
    std::istringstream words(line);
    std::string command;
    if (!(words >> command) || command[0] == '#') continue;
    std::string argument;
    std::getline(words >> std::ws, argument);

    Value response;
    if (command == "sessions") {
      response = client.call("list_sessions");
    } else if (command == "specs") {
      response = client.call("get_specs", session_id);
    } else if (command == "views") {
      Value index = argument.empty() ? Value(0) : argument == "fallback" ? Value("fallback") : Value(std::stoi(argument));
      response = client.call("get_views", session_id, {{"spec_index", index}});
    } else if (command == "stack") {
      response = client.call("get_stack", session_id);
    } else if (command == "actions") {
      response = client.call("get_actions", session_id);
    } else if (command == "invoke" || command == "preview") {
      response = client.call(command == "invoke" ? "invoke_action" : "action_preview", session_id,
                             {{"action_id", argument}});
    } else if (command == "resume") {
      Value params = Value::object();
      if (!argument.empty()) params["substitute"] = Value::parse(argument);
      response = client.call("resume", session_id, params);
    } else if (command == "restart") {
      response = client.call("restart_top", session_id);
    } else if (command == "close") {
      response = client.call("close", session_id);
    } else if (command == "raw") {
      response = Value::parse(client.request_line(argument));
    } else {
      out << "error unknown_command: " << command << "\n";
      ++failures;
      continue;
    }

    if (!response.value("ok", false)) {
      const Value error = response.value("error", Value::object());
      out << "error " << error.value("code", "") << ": " << error.value("message", "") << "\n";
      ++failures;
      continue;
    }
    const Value& result = response["result"];
    if (command == "sessions") {
      for (const auto& s : result) {
        out << scalar(s["session_id"]) << " " << scalar(s["state"]) << " " << scalar(s["exception_class"]) << ": "
            << scalar(s["message"]) << "\n";
      }
    } else if (command == "specs") {
      out << "found " << result["found"].size() << " active " << result["active"].size() << "\n";
      std::size_t i = 0;
      for (const auto& spec : result["active"]) {
        const bool shown = result["default"].is_number() && result["default"].get<std::size_t>() == i;
        out << "[" << i++ << "] " << scalar(spec["title"]) << " (priority " << scalar(spec["priority"]) << ")"
            << (shown ? " default" : "") << "\n";
      }
    } else if (command == "views") {
      for (const auto& v : result) out << render_view_text(v);
    } else if (command == "stack") {
      for (const auto& f : result) {
        out << "#" << scalar(f["index"]) << " " << scalar(f["function_name"]);
        if (f.contains("source_ref") && f["source_ref"].is_object()) {
          out << " " << scalar(f["source_ref"]["file"]) << ":" << scalar(f["source_ref"]["line"]);
        }
        out << "\n";
      }
    } else if (command == "actions") {
      for (const auto& a : result) {
        out << scalar(a["id"]) << " \"" << scalar(a["label"]) << "\" " << scalar(a["kind"]) << " (priority "
            << scalar(a["priority"]) << ")\n";
      }
    } else if (command == "invoke") {
      out << scalar(result["status"]) << ": " << result.value("detail", "") << " (session " << result.value("state", "")
          << ")\n";
    } else if (command == "preview") {
      out << (result.is_null() ? std::string("(no preview)\n") : render_view_text(result));
    } else if (command == "raw") {
      out << response.dump() << "\n";
    } else {
      out << "session " << result.value("state", "") << "\n";
    }
  }
  return failures;
}

}  // namespace moldex
