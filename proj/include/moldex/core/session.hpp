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
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "moldex/core/action.hpp"
#include "moldex/core/debugger_spec.hpp"
#include "moldex/core/exception.hpp"
#include "moldex/core/stack.hpp"

namespace moldex {

class Registry;

enum class SessionState { open, resumed, retried, closed };
enum class ControlEvent { restart, resume, close };

std::string_view to_string(SessionState state) noexcept;
std::string_view to_string(ControlEvent event) noexcept;

constexpr bool is_terminal(SessionState state) noexcept { return state != SessionState::open; }

/// The session state machine: open moves to exactly one terminal state and
/// terminal states accept nothing. nullopt marks an illegal transition.
std::optional<SessionState> next_state(SessionState current, ControlEvent event) noexcept;

enum class Control { restart_top, resume_close, retry_entry };

struct EntryInfo {
  std::string name;
  bool restartable = true;
  /// Why restarting is refused, when it is.
  std::string not_restartable_reason;
};

class DebugSession;

/// Handed to actions (and, without controls, to views): access to the
/// running session limited to the permitted execution controls.
class ExecutionContext {
 public:
  ExecutionContext(DebugSession& session, std::set<Control> permitted)
      : session_(&session), permitted_(std::move(permitted)) {}

  const DebugSession& session() const noexcept { return *session_; }
  bool permits(Control control) const noexcept { return permitted_.contains(control); }

  void restart_top_frame();
  void retry_entry();
  void resume_and_close(std::optional<Value> substitute = std::nullopt);

 private:
  void require(Control control) const;

  DebugSession* session_;
  std::set<Control> permitted_;
};

void restart_top_frame(ExecutionContext& context);
void resume_and_close(ExecutionContext& context, std::optional<Value> substitute = std::nullopt);

/// One raised exception bound to its captured stack and resolved debuggers.
///
/// Control methods and live materialization run on the owning (guard)
/// thread. Other threads submit work through post(); once the session is
/// terminal the owner stops serving and reads run on the caller's thread
/// under read_lock().
class DebugSession {
 public:
  DebugSession(ExceptionRef exception, std::exception_ptr raised, std::vector<CapturedFrame> stack,
               EntryInfo entry, const Registry& registry);

  DebugSession(const DebugSession&) = delete;
  DebugSession& operator=(const DebugSession&) = delete;

  const std::string& id() const noexcept { return id_; }
  const Exception& exception() const noexcept { return *exception_; }
  const ExceptionRef& exception_ref() const noexcept { return exception_; }
  std::exception_ptr raised() const noexcept { return raised_; }
  const std::vector<CapturedFrame>& stack() const noexcept { return stack_; }
  const EntryInfo& entry() const noexcept { return entry_; }
  const Registry& registry() const noexcept { return registry_; }
  SessionState state() const noexcept { return state_.load(); }
  std::optional<Value> substitute() const;

  /// Collects and resolves debugger specifications. Called once by the guard
  /// before the session is published.
  void resolve();
  const ResolvedDebuggerSet& resolved() const noexcept { return resolved_; }

  void restart_top_frame();
  void resume_and_close(std::optional<Value> substitute = std::nullopt);
  void close();

  /// Context without execution controls, passed to view methods.
  ExecutionContext* view_context() const noexcept { return &view_context_; }
  ExecutionContext action_context();

  /// Views of the active spec at `active_index`; the generic stack views for
  /// nullopt.
  std::vector<ViewData> views(std::optional<std::size_t> active_index) const;

  /// Actions across the active specs' targets, sorted by priority. Ids are
  /// unique; later duplicates are dropped. Failing and duplicate action
  /// methods are reported to `diagnostics`; the session is not modified.
  std::vector<ActionSpec> collect_actions(std::vector<std::string>* diagnostics = nullptr);
  ActionResult invoke_action(std::string_view action_id);
  std::optional<ViewData> action_preview(std::string_view action_id);

  Value summary() const;

  bool post(std::function<void()> task);
  void serve_until_terminal();
  std::unique_lock<std::mutex> read_lock() const { return std::unique_lock(read_mutex_); }

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  void transition(ControlEvent event);

  std::string id_;
  ExceptionRef exception_;
  std::exception_ptr raised_;
  std::vector<CapturedFrame> stack_;
  EntryInfo entry_;
  const Registry& registry_;
  std::atomic<SessionState> state_{SessionState::open};
  mutable std::mutex state_mutex_;
  std::optional<Value> substitute_;
  ResolvedDebuggerSet resolved_;
  std::vector<std::string> diagnostics_;
  mutable ExecutionContext view_context_;

  std::mutex queue_mutex_;
  std::condition_variable queue_cv_;
  std::deque<std::function<void()>> queue_;
  bool accepting_ = true;
  mutable std::mutex read_mutex_;
};

std::vector<ActionSpec> collect_actions(DebugSession& session);

/// Thread-safe table of published sessions.
class SessionHub {
 public:
  void publish(std::shared_ptr<DebugSession> session);
  std::shared_ptr<DebugSession> find(std::string_view id) const;
  std::vector<std::shared_ptr<DebugSession>> list() const;

  /// Waits until a published session satisfies `pred` (default: open).
  std::shared_ptr<DebugSession> wait_for(std::chrono::milliseconds timeout,
                                         std::function<bool(const DebugSession&)> pred = {}) const;

 private:
  mutable std::mutex mutex_;
  mutable std::condition_variable cv_;
  std::vector<std::shared_ptr<DebugSession>> sessions_;
};

}  // namespace moldex
