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

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <source_location>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "moldex/core/object.hpp"

namespace moldex {

inline constexpr std::size_t max_local_chars = 200;

struct CapturedFrame {
  std::size_t index = 0;  // 0 = top
  std::string function_name;
  std::string file;
  unsigned line = 0;
  std::vector<std::pair<std::string, std::string>> locals;
  bool restartable = false;
  /// Absolute shadow-stack depth at raise time (0 = outermost frame).
  std::size_t depth = 0;

  const std::string* local(std::string_view name) const;
};

Value to_json_value(const CapturedFrame& frame);

std::string truncate_rendering(std::string text, std::size_t limit = max_local_chars);

template <class T>
std::string render_for_stack(const T& value) {
  if constexpr (std::is_convertible_v<const T&, std::string_view>) {
    return std::string(std::string_view(value));
  } else if constexpr (std::is_same_v<T, bool>) {
    return value ? "true" : "false";
  } else if constexpr (std::is_arithmetic_v<T>) {
    return std::to_string(value);
  } else if constexpr (std::is_base_of_v<Object, T>) {
    return value.display_string();
  } else if constexpr (std::is_same_v<T, Value>) {
    return value.dump();
  } else {
    static_assert(sizeof(T) == 0, "no stack rendering for this type");
  }
}

/// RAII registration of a function activation on the calling thread's shadow
/// stack. C++ offers no portable reified stack, so functions that should be
/// visible to the debugger open one of these on entry.
class FrameScope {
 public:
  explicit FrameScope(std::string function_name, std::source_location where = std::source_location::current());
  ~FrameScope();

  FrameScope(const FrameScope&) = delete;
  FrameScope& operator=(const FrameScope&) = delete;

  /// Registers a local; it is rendered only if the stack is captured while
  /// this frame is live, so `value` must outlive the scope.
  template <class T>
  FrameScope& local(std::string name, const T& value) {
    locals_.emplace_back(std::move(name), [&value] { return render_for_stack(value); });
    return *this;
  }

  const std::string& function_name() const noexcept { return function_name_; }

 private:
  friend std::vector<CapturedFrame> capture_live_stack(std::optional<std::source_location>);

  std::string function_name_;
  std::source_location where_;
  std::vector<std::pair<std::string, std::function<std::string()>>> locals_;
};

/// Number of live frames on the calling thread.
std::size_t shadow_stack_depth() noexcept;

/// Snapshot of the calling thread's live frames, top first. When `raise_site`
/// lies in the top frame's file, the top frame reports that line.
std::vector<CapturedFrame> capture_live_stack(std::optional<std::source_location> raise_site = std::nullopt);

}  // namespace moldex
