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
#include <concepts>
#include <exception>
#include <memory>
#include <source_location>
#include <string>
#include <vector>

#include "moldex/core/object.hpp"
#include "moldex/core/stack.hpp"

namespace moldex {

/// Root of the moldable exception hierarchy. Views, actions and debugger
/// specifications registered on these classes are found when one is raised
/// under a guard.
class Exception : public Object, public std::exception {
  MOLDEX_CLASS(Exception, &Object::klass())

 public:
  explicit Exception(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }
  const std::string& message() const noexcept { return message_; }
  std::string display_string() const override;

  /// Whether resuming without a substitute value may continue execution.
  virtual bool resumable() const { return true; }

  /// Empty until the exception is raised with moldex::raise.
  bool has_traceback() const noexcept { return traceback_ != nullptr; }
  const std::vector<CapturedFrame>& traceback() const;
  void record_traceback(std::vector<CapturedFrame> frames);

  /// Set once an automatic transformation ran for this raised instance.
  bool mark_transformation_performed() const noexcept { return !transformed_->exchange(true); }

 private:
  std::string message_;
  std::shared_ptr<const std::vector<CapturedFrame>> traceback_;
  std::shared_ptr<std::atomic<bool>> transformed_ = std::make_shared<std::atomic<bool>>(false);
};

/// Non-resumable failures.
class Error : public Exception {
  MOLDEX_CLASS(Error, &Exception::klass())

 public:
  using Exception::Exception;
  bool resumable() const override { return false; }
};

/// Captures the calling thread's shadow stack into the exception and throws it.
template <std::derived_from<Exception> E>
[[noreturn]] void raise(E exception, std::source_location where = std::source_location::current()) {
  exception.record_traceback(capture_live_stack(where));
  throw exception;
}

/// Stack relative to a guard boundary at `boundary_depth`, top first, with
/// frames belonging to the guard's callers removed. Empty for exceptions
/// that were never raised.
std::vector<CapturedFrame> capture_stack(const Exception& exception, std::size_t boundary_depth = 0);

}  // namespace moldex
