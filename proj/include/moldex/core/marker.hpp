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

#include <compare>
#include <string>
#include <utility>

namespace moldex {

/// Annotation name attached to a registered method. Compared exactly.
class Marker {
 public:
  explicit Marker(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  auto operator<=>(const Marker&) const = default;
  bool operator==(const Marker&) const = default;

 private:
  std::string name_;
};

namespace markers {
inline const Marker inspector_view{"inspector_view"};
inline const Marker inspector_action{"inspector_action"};
inline const Marker exception_view{"exception_view"};
inline const Marker exception_action{"exception_action"};
inline const Marker debugger_specification{"debugger_specification"};
}  // namespace markers

}  // namespace moldex
