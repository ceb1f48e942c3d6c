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

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "moldex/core/object.hpp"
#include "moldex/core/session.hpp"
#include "moldex/core/transformation.hpp"

namespace moldex {

class Registry;

/// A guarded invocation. `invoke` is re-run on restart, so it must rebuild
/// whatever state it needs.
struct Entry {
  std::string name;
  std::function<Value()> invoke;
  bool restartable = true;
};

struct GuardConfig {
  const Registry* registry = nullptr;  // Registry::global() when null
  const TransformationSettings* settings = nullptr;  // default_instance() when null
  /// Sessions are published here and served until they reach a terminal state.
  SessionHub* hub = nullptr;
  /// Runs on the guard's thread instead of publishing; a session still open
  /// afterwards is closed.
  std::function<void(DebugSession&)> driver;
  /// Called on the guard's thread after the session is resolved and
  /// published, before it is served.
  std::function<void(const DebugSession&)> on_open;
  /// Shared budget for automatic transformations and restarts.
  int retry_limit = 3;
};

/// Runs entries, turning moldable exceptions into debug sessions.
///
/// Outcome of run(): the entry's value, the substitute given on resume, the
/// value of a re-run after a transformation or restart, or the original
/// exception rethrown (closed session, non-resumable resume without a
/// substitute). Framework errors and foreign exceptions are not intercepted.
class Guard {
 public:
  explicit Guard(GuardConfig config = {});

  Value run(const Entry& entry);

  int invocations() const noexcept { return invocations_; }
  int sessions_opened() const noexcept { return sessions_opened_; }
  int transformations_applied() const noexcept { return transformations_applied_; }
  std::shared_ptr<DebugSession> last_session() const { return last_session_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  GuardConfig config_;
  int invocations_ = 0;
  int sessions_opened_ = 0;
  int transformations_applied_ = 0;
  std::shared_ptr<DebugSession> last_session_;
  std::vector<std::string> diagnostics_;
};

inline Value guard(const Entry& entry, GuardConfig config = {}) { return Guard(std::move(config)).run(entry); }

}  // namespace moldex
