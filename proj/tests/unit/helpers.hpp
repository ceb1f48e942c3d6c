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
#include <random>
#include <string>

#include <unistd.h>

#include "moldex/core/exception.hpp"
#include "moldex/core/registry.hpp"

namespace moldex::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& stem) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

class PlainFailure : public Exception {
  MOLDEX_CLASS(PlainFailure, &Exception::klass())

 public:
  using Exception::Exception;
};

class HardFailure : public Error {
  MOLDEX_CLASS(HardFailure, &Error::klass())

 public:
  using Error::Error;
};

/// Subject with a few attributes for view scripts.
class Box : public Object {
  MOLDEX_CLASS(Box, &Object::klass())

 public:
  explicit Box(Value attributes = Value::object()) : attributes_(std::move(attributes)) {}
  std::optional<Value> attribute(std::string_view name) const override {
    auto it = attributes_.find(std::string(name));
    if (it == attributes_.end()) return std::nullopt;
    return *it;
  }

 private:
  Value attributes_;
};

}  // namespace moldex::testing

#include "moldex/core/session.hpp"

namespace moldex::testing {

/// Session over an exception that was raised and caught here.
template <class E>
std::shared_ptr<DebugSession> open_session(const Registry& registry, E raised, bool restartable = true) {
  try {
    raise(std::move(raised));
  } catch (const E& e) {
    auto holder = std::make_shared<E>(e);
    auto session = std::make_shared<DebugSession>(ExceptionRef(holder), std::current_exception(),
                                                  capture_stack(*holder), EntryInfo{"test", restartable, {}}, registry);
    session->resolve();
    return session;
  }
  return nullptr;
}

}  // namespace moldex::testing
