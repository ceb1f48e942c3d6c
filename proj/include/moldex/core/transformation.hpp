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
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moldex/core/view.hpp"

namespace moldex {

class Exception;

/// An automated fix. `should_transform` must not have side effects.
struct Transformation {
  std::string description;
  std::function<bool()> should_transform;
  std::function<void()> perform;
  /// Diff of the proposed change; may be unset.
  std::function<std::optional<ViewData>()> preview;
};

/// Capability interface for exceptions that carry a transformation.
/// Exceptions that do not implement it always pass through.
class Transformable {
 public:
  virtual ~Transformable() = default;
  /// nullptr when there is nothing to offer for this instance.
  virtual std::shared_ptr<const Transformation> transformation() const = 0;
};

/// Whether transformations may run at raise time, without a debugger.
class TransformationSettings {
 public:
  TransformationSettings() = default;
  explicit TransformationSettings(bool allow_automatic) : allow_automatic_(allow_automatic) {}
  virtual ~TransformationSettings() = default;

  /// Process-wide instance consulted by guards that are not given one.
  static TransformationSettings& default_instance();

  virtual bool allows_automatic() const noexcept { return allow_automatic_.load(); }
  void set_allow_automatic(bool allow) noexcept { allow_automatic_.store(allow); }

  /// Applies MOLDEX_AUTO_TRANSFORM (1/true/yes/on enable, 0/false/no/off
  /// disable); returns whether the variable was set.
  bool load_environment(const char* variable = "MOLDEX_AUTO_TRANSFORM");

  /// Reads {"allow_automatic_transformations": bool, "change_log": path}.
  void load_file(const std::filesystem::path& path);

  /// Change summaries of applied patches are appended here as JSON lines.
  void set_change_log(std::optional<std::filesystem::path> path);
  std::optional<std::filesystem::path> change_log() const;
  void log_change(const Value& summary) const;

 private:
  std::atomic<bool> allow_automatic_{false};
  mutable std::mutex log_mutex_;
  std::optional<std::filesystem::path> change_log_;
};

enum class SignalOutcome { transformed, pass_through };

/// Raise-time gate, probed in this order: the exception offers a
/// transformation, settings allow automatic use, should_transform holds.
/// Only then is perform run. A failing perform passes through.
SignalOutcome on_signal(const Exception& exception, const TransformationSettings& settings,
                        std::vector<std::string>* diagnostics = nullptr);

/// Preview of the exception's transformation; nullopt if it has none.
std::optional<ViewData> fixit_preview(const Exception& exception);

}  // namespace moldex
