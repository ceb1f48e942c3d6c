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

#include "moldex/core/guard.hpp"

#include "moldex/core/errors.hpp"
#include "moldex/core/exception.hpp"
#include "moldex/core/registry.hpp"

namespace moldex {

Guard::Guard(GuardConfig config) : config_(std::move(config)) {
  if (config_.registry == nullptr) config_.registry = &Registry::global();
  if (config_.settings == nullptr) config_.settings = &TransformationSettings::default_instance();
  if (config_.retry_limit < 0) throw FrameworkError(ErrorCode::invalid_argument, "retry limit must be >= 0");
}

Value Guard::run(const Entry& entry) {
  if (!entry.invoke) throw FrameworkError(ErrorCode::invalid_argument, "entry '" + entry.name + "' is not invocable");
  int reruns = 0;
  while (true) {
    const auto boundary = shadow_stack_depth();
    ++invocations_;
    try {
      return entry.invoke();
    } catch (const Exception& raised) {
      // Keep the thrown object alive beyond the handler.
      auto holder = std::make_shared<std::exception_ptr>(std::current_exception());
      ExceptionRef exception(holder, &raised);
      const bool budget_left = reruns < config_.retry_limit;

      if (budget_left && on_signal(raised, *config_.settings, &diagnostics_) == SignalOutcome::transformed) {
        ++transformations_applied_;
        ++reruns;
        continue;
      }

      EntryInfo info{entry.name, entry.restartable && budget_left, {}};
      if (!entry.restartable) {
        info.not_restartable_reason = "entry '" + entry.name + "' was not captured as re-invocable";
      } else if (!budget_left) {
        info.not_restartable_reason = "retry limit of " + std::to_string(config_.retry_limit) + " reached";
      }
      auto stack = capture_stack(raised, boundary);
      if (!stack.empty()) stack.back().restartable = info.restartable;

      auto session = std::make_shared<DebugSession>(exception, *holder, std::move(stack), std::move(info),
                                                    *config_.registry);
      session->resolve();
      ++sessions_opened_;
      last_session_ = session;
      // Publish first so a client reacting to on_open can find the session.
      const bool served = !config_.driver && config_.hub != nullptr;
      if (served) config_.hub->publish(session);
      if (config_.on_open) config_.on_open(*session);

      if (config_.driver) {
        config_.driver(*session);
        if (session->state() == SessionState::open) session->close();
      } else if (served) {
        session->serve_until_terminal();
      } else {
        session->close();
      }

      switch (session->state()) {
        case SessionState::resumed:
          if (auto value = session->substitute()) return *value;
          if (raised.resumable()) return Value();
          std::rethrow_exception(*holder);
        case SessionState::retried:
          ++reruns;
          continue;
        case SessionState::closed:
        case SessionState::open:
          std::rethrow_exception(*holder);
      }
    }
  }
}

}  // namespace moldex
