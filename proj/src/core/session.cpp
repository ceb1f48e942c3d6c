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

#include "moldex/core/session.hpp"

#include <algorithm>

#include "moldex/core/errors.hpp"
#include "moldex/core/registry.hpp"

namespace moldex {
namespace {

std::string next_session_id() {
  static std::atomic<unsigned long> counter{0};
  return "session-" + std::to_string(++counter);
}

}  // namespace

std::string_view to_string(SessionState state) noexcept {
  switch (state) {
    case SessionState::open: return "open";
    case SessionState::resumed: return "resumed";
    case SessionState::retried: return "retried";
    case SessionState::closed: return "closed";
  }
  return "open";
}

std::string_view to_string(ControlEvent event) noexcept {
  switch (event) {
    case ControlEvent::restart: return "restart";
    case ControlEvent::resume: return "resume";
    case ControlEvent::close: return "close";
  }
  return "close";
}

std::optional<SessionState> next_state(SessionState current, ControlEvent event) noexcept {
  if (current != SessionState::open) return std::nullopt;
  switch (event) {
    case ControlEvent::restart: return SessionState::retried;
    case ControlEvent::resume: return SessionState::resumed;
    case ControlEvent::close: return SessionState::closed;
  }
  return std::nullopt;
}

void ExecutionContext::require(Control control) const {
  if (!permits(control)) {
    throw FrameworkError(ErrorCode::control_not_permitted, "execution control not permitted in this context");
  }
}

void ExecutionContext::restart_top_frame() {
  require(Control::restart_top);
  session_->restart_top_frame();
}

void ExecutionContext::retry_entry() {
  require(Control::retry_entry);
  session_->restart_top_frame();
}

void ExecutionContext::resume_and_close(std::optional<Value> substitute) {
  require(Control::resume_close);
  session_->resume_and_close(std::move(substitute));
}

void restart_top_frame(ExecutionContext& context) { context.restart_top_frame(); }

void resume_and_close(ExecutionContext& context, std::optional<Value> substitute) {
  context.resume_and_close(std::move(substitute));
}

DebugSession::DebugSession(ExceptionRef exception, std::exception_ptr raised, std::vector<CapturedFrame> stack,
                           EntryInfo entry, const Registry& registry)
    : id_(next_session_id()),
      exception_(std::move(exception)),
      raised_(std::move(raised)),
      stack_(std::move(stack)),
      entry_(std::move(entry)),
      registry_(registry),
      view_context_(*this, {}) {
  if (!exception_) throw FrameworkError(ErrorCode::invalid_argument, "a session needs an exception");
}

std::optional<Value> DebugSession::substitute() const {
  std::lock_guard lock(state_mutex_);
  return substitute_;
}

void DebugSession::resolve() {
  auto specs = collect_specifications(exception_, registry_, &diagnostics_);
  resolved_ = resolve_active(std::move(specs), *this);
  diagnostics_.insert(diagnostics_.end(), resolved_.diagnostics.begin(), resolved_.diagnostics.end());
}

void DebugSession::transition(ControlEvent event) {
  const auto current = state_.load();
  const auto next = next_state(current, event);
  if (!next) {
    throw FrameworkError(ErrorCode::illegal_state, "cannot " + std::string(to_string(event)) + " a session that is " +
                                                       std::string(to_string(current)));
  }
  state_.store(*next);
}

void DebugSession::restart_top_frame() {
  std::lock_guard lock(state_mutex_);
  if (is_terminal(state_.load())) {
    throw FrameworkError(ErrorCode::illegal_state,
                         "cannot restart a session that is " + std::string(to_string(state_.load())));
  }
  if (!entry_.restartable) {
    throw FrameworkError(ErrorCode::not_restartable,
                         entry_.not_restartable_reason.empty() ? "top frame is not restartable"
                                                               : entry_.not_restartable_reason);
  }
  transition(ControlEvent::restart);
}

void DebugSession::resume_and_close(std::optional<Value> substitute) {
  std::lock_guard lock(state_mutex_);
  transition(ControlEvent::resume);
  substitute_ = std::move(substitute);
}

void DebugSession::close() {
  std::lock_guard lock(state_mutex_);
  transition(ControlEvent::close);
}

ExecutionContext DebugSession::action_context() {
  return ExecutionContext(*this, {Control::restart_top, Control::resume_close, Control::retry_entry});
}

std::vector<ViewData> DebugSession::views(std::optional<std::size_t> active_index) const {
  if (!active_index) return generic_stack_views(*this);
  if (*active_index >= resolved_.active.size()) {
    throw FrameworkError(ErrorCode::invalid_argument, "no active specification at index " +
                                                          std::to_string(*active_index));
  }
  return views_for(resolved_.active_spec(*active_index), *this);
}

std::vector<ActionSpec> DebugSession::collect_actions(std::vector<std::string>* diagnostics) {
  std::vector<ActionSpec> actions;
  std::set<std::string> ids;
  std::set<std::pair<const Object*, const RegisteredMethod*>> invoked;
  auto context = action_context();
  for (std::size_t i = 0; i < resolved_.active.size(); ++i) {
    const auto& spec = resolved_.active_spec(i);
    for (const auto& target : debugging_targets_of(spec, exception_)) {
      for (const auto& marker : spec.action_markers) {
        for (const RegisteredMethod* method : registry_.collect(target->class_info(), marker)) {
          const auto* action_method = std::get_if<ActionMethod>(&method->callable);
          if (action_method == nullptr || !invoked.insert({target.get(), method}).second) continue;
          ActionSpec action;
          try {
            action = (*action_method)(*target, ActionBuilder{}, context);
          } catch (const std::exception& e) {
            if (diagnostics != nullptr) diagnostics->push_back(method->qualified_name() + " failed: " + e.what());
            continue;
          }
          if (action.is_none()) continue;
          if (!ids.insert(action.id).second) {
            if (diagnostics != nullptr) {
              diagnostics->push_back("duplicate action id " + action.id + " from " + method->qualified_name());
            }
            continue;
          }
          action.source_ref = method->qualified_name();
          actions.push_back(std::move(action));
        }
      }
    }
  }
  std::stable_sort(actions.begin(), actions.end(),
                   [](const ActionSpec& a, const ActionSpec& b) { return a.priority < b.priority; });
  return actions;
}

ActionResult DebugSession::invoke_action(std::string_view action_id) {
  if (is_terminal(state())) {
    throw FrameworkError(ErrorCode::illegal_state,
                         "session is " + std::string(to_string(state())) + "; actions are unavailable");
  }
  for (auto& action : collect_actions()) {
    if (action.id != action_id) continue;
    auto context = action_context();
    try {
      return action.execute(context);
    } catch (const FrameworkError& e) {
      if (e.code() == ErrorCode::illegal_state) throw;
      return {ActionStatus::error, e.what()};
    } catch (const std::exception& e) {
      return {ActionStatus::error, e.what()};
    }
  }
  throw FrameworkError(ErrorCode::no_such_action, "no action with id " + std::string(action_id));
}

std::optional<ViewData> DebugSession::action_preview(std::string_view action_id) {
  for (auto& action : collect_actions()) {
    if (action.id != action_id) continue;
    if (!action.preview) return std::nullopt;
    try {
      return action.preview();
    } catch (const std::exception& e) {
      return make_error_view(action.label, 0, ErrorCode::view_evaluation_error, e.what());
    }
  }
  throw FrameworkError(ErrorCode::no_such_action, "no action with id " + std::string(action_id));
}

Value DebugSession::summary() const {
  return {{"session_id", id_},
          {"state", to_string(state())},
          {"exception_class", exception_->class_info().name()},
          {"message", exception_->message()},
          {"entry", entry_.name}};
}

bool DebugSession::post(std::function<void()> task) {
  {
    std::lock_guard lock(queue_mutex_);
    if (!accepting_) return false;
    queue_.push_back(std::move(task));
  }
  queue_cv_.notify_one();
  return true;
}

void DebugSession::serve_until_terminal() {
  while (true) {
    std::function<void()> task;
    {
      std::unique_lock lock(queue_mutex_);
      if (queue_.empty() && is_terminal(state())) {
        accepting_ = false;
        return;
      }
      queue_cv_.wait(lock, [this] { return !queue_.empty(); });
      task = std::move(queue_.front());
      queue_.pop_front();
    }
    {
      auto lock = read_lock();
      task();
    }
    if (is_terminal(state())) {
      std::deque<std::function<void()>> rest;
      {
        std::lock_guard lock(queue_mutex_);
        accepting_ = false;
        rest.swap(queue_);
      }
      auto lock = read_lock();
      for (auto& t : rest) t();
      return;
    }
  }
}

std::vector<ActionSpec> collect_actions(DebugSession& session) { return session.collect_actions(); }

void SessionHub::publish(std::shared_ptr<DebugSession> session) {
  {
    std::lock_guard lock(mutex_);
    sessions_.push_back(std::move(session));
  }
  cv_.notify_all();
}

std::shared_ptr<DebugSession> SessionHub::find(std::string_view id) const {
  std::lock_guard lock(mutex_);
  for (const auto& s : sessions_) {
    if (s->id() == id) return s;
  }
  return nullptr;
}

std::vector<std::shared_ptr<DebugSession>> SessionHub::list() const {
  std::lock_guard lock(mutex_);
  return sessions_;
}

std::shared_ptr<DebugSession> SessionHub::wait_for(std::chrono::milliseconds timeout,
                                                   std::function<bool(const DebugSession&)> pred) const {
  if (!pred) pred = [](const DebugSession& s) { return s.state() == SessionState::open; };
  std::unique_lock lock(mutex_);
  std::shared_ptr<DebugSession> match;
  cv_.wait_for(lock, timeout, [&] {
    for (const auto& s : sessions_) {
      if (pred(*s)) {
        match = s;
        return true;
      }
    }
    return false;
  });
  return match;
}

}  // namespace moldex
