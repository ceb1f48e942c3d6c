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

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "moldex/core/protocol.hpp"

namespace moldex {

struct ServerConfig {
  std::string host = "127.0.0.1";
  /// 0 picks a free port.
  int port = 0;
  /// HTTP mapping (POST /rpc and the /ui static mount); disabled when unset.
  std::optional<int> http_port;
  std::filesystem::path ui_dir;
};

/// Serves a SessionHub over newline-delimited JSON on a TCP socket, and
/// optionally over HTTP. Connections are handled on their own threads.
class DebugServer {
 public:
  DebugServer(SessionHub& hub, ServerConfig config);
  ~DebugServer();

  DebugServer(const DebugServer&) = delete;
  DebugServer& operator=(const DebugServer&) = delete;

  /// Throws FrameworkError(bind_failure) when a socket cannot be bound.
  void start();
  void stop();

  int port() const noexcept { return port_; }
  /// -1 when HTTP is disabled.
  int http_port() const noexcept { return http_port_; }
  const ProtocolHandler& handler() const noexcept { return handler_; }

 private:
  struct HttpState;

  void accept_loop();
  void serve_connection(int fd);
  void start_http();

  ServerConfig config_;
  ProtocolHandler handler_;
  int listen_fd_ = -1;
  int port_ = -1;
  int http_port_ = -1;
  std::atomic<bool> running_{false};
  std::thread accept_thread_;
  std::mutex connections_mutex_;
  std::vector<int> connection_fds_;
  std::vector<std::thread> connection_threads_;
  std::unique_ptr<HttpState> http_;
};

}  // namespace moldex
