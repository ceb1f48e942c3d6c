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

#include "moldex/core/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include <httplib.h>

#include "moldex/core/errors.hpp"

namespace moldex {

struct DebugServer::HttpState {
  httplib::Server server;
  std::thread thread;
};

namespace {

bool send_all(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::send(fd, data.data(), data.size(), MSG_NOSIGNAL);
    if (n <= 0) {
      if (n < 0 && errno == EINTR) continue;
      return false;
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
  return true;
}

}  // namespace

DebugServer::DebugServer(SessionHub& hub, ServerConfig config) : config_(std::move(config)), handler_(hub) {}

DebugServer::~DebugServer() { stop(); }

void DebugServer::start() {
  if (running_) return;
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw FrameworkError(ErrorCode::bind_failure, std::string("socket: ") + std::strerror(errno));
  const int yes = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(static_cast<uint16_t>(config_.port));
  if (::inet_pton(AF_INET, config_.host.c_str(), &addr.sin_addr) != 1) {
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw FrameworkError(ErrorCode::bind_failure, "not an IPv4 address: " + config_.host);
  }
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listen_fd_, 16) != 0) {
    const std::string reason = std::strerror(errno);
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw FrameworkError(ErrorCode::bind_failure,
                         "cannot bind " + config_.host + ":" + std::to_string(config_.port) + ": " + reason);
  }
  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);

  if (config_.http_port) {
    try {
      start_http();
    } catch (...) {
      ::close(listen_fd_);
      listen_fd_ = -1;
      throw;
    }
  }
  running_ = true;
  accept_thread_ = std::thread([this] { accept_loop(); });
}

void DebugServer::start_http() {
  http_ = std::make_unique<HttpState>();
  auto& server = http_->server;
  server.Post("/rpc", [this](const httplib::Request& req, httplib::Response& res) {
    res.set_content(handler_.handle_line(req.body), "application/json");
  });
  if (!config_.ui_dir.empty()) {
    if (!server.set_mount_point("/ui", config_.ui_dir.string())) {
      throw FrameworkError(ErrorCode::bind_failure, "ui directory not found: " + config_.ui_dir.string());
    }
  }
  if (*config_.http_port == 0) {
    http_port_ = server.bind_to_any_port(config_.host);
  } else if (server.bind_to_port(config_.host, *config_.http_port)) {
    http_port_ = *config_.http_port;
  }
  if (http_port_ <= 0) {
    http_.reset();
    http_port_ = -1;
    throw FrameworkError(ErrorCode::bind_failure, "cannot bind HTTP port " + std::to_string(*config_.http_port));
  }
  http_->thread = std::thread([this] { http_->server.listen_after_bind(); });
  server.wait_until_ready();
}

void DebugServer::stop() {
  if (!running_.exchange(false)) return;
  ::shutdown(listen_fd_, SHUT_RDWR);
  ::close(listen_fd_);
  listen_fd_ = -1;
  if (accept_thread_.joinable()) accept_thread_.join();
  std::vector<std::thread> threads;
  {
    std::lock_guard lock(connections_mutex_);
    for (int fd : connection_fds_) ::shutdown(fd, SHUT_RDWR);
    threads.swap(connection_threads_);
  }
  for (auto& t : threads) t.join();
  if (http_) {
    http_->server.stop();
    if (http_->thread.joinable()) http_->thread.join();
    http_.reset();
  }
}

void DebugServer::accept_loop() {
  while (running_) {
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR) continue;
      return;
    }
    std::lock_guard lock(connections_mutex_);
    if (!running_) {
      ::close(fd);
      return;
    }
    connection_fds_.push_back(fd);
    connection_threads_.emplace_back([this, fd] { serve_connection(fd); });
  }
}

void DebugServer::serve_connection(int fd) {
  std::string buffer;
  char chunk[4096];
  bool open = true;
  while (open) {
    const ssize_t n = ::recv(fd, chunk, sizeof chunk, 0);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    buffer.append(chunk, static_cast<std::size_t>(n));
    std::size_t newline;
    while ((newline = buffer.find('\n')) != std::string::npos) {
      std::string line = buffer.substr(0, newline);
      buffer.erase(0, newline + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      if (!send_all(fd, handler_.handle_line(line) + "\n")) {
        open = false;
        break;
      }
    }
  }
  std::lock_guard lock(connections_mutex_);
  connection_fds_.erase(std::remove(connection_fds_.begin(), connection_fds_.end(), fd), connection_fds_.end());
  ::close(fd);
}

}  // namespace moldex
