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

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace moldex {

/// Serializable value exchanged with clients (substitutes, entry results,
/// view bodies).
using Value = nlohmann::json;

/// Runtime class descriptor. Extensions are registered against these rather
/// than against C++ types so that hierarchies can also be built at runtime.
///
/// The linearization is computed once with C3 (self first, root-most last)
/// and drives method lookup and override resolution.
class ClassInfo {
 public:
  ClassInfo(std::string name, std::initializer_list<const ClassInfo*> bases = {});
  ClassInfo(std::string name, std::vector<const ClassInfo*> bases);

  ClassInfo(const ClassInfo&) = delete;
  ClassInfo& operator=(const ClassInfo&) = delete;

  const std::string& name() const noexcept { return name_; }
  const std::vector<const ClassInfo*>& bases() const noexcept { return bases_; }
  const std::vector<const ClassInfo*>& linearization() const noexcept { return mro_; }

  /// True when `other` appears in this class's linearization (including itself).
  bool inherits_from(const ClassInfo& other) const noexcept;

 private:
  std::string name_;
  std::vector<const ClassInfo*> bases_;
  std::vector<const ClassInfo*> mro_;
};

/// Declares the static descriptor and the virtual accessor for a class that
/// takes part in extension discovery. Bases are passed as `&Base::klass()`.
#define MOLDEX_CLASS(Type, ...)                                              \
 public:                                                                     \
  static const ::moldex::ClassInfo& klass() {                                \
    static const ::moldex::ClassInfo info{#Type, {__VA_ARGS__}};             \
    return info;                                                             \
  }                                                                          \
  const ::moldex::ClassInfo& class_info() const override { return klass(); }

class Object {
 public:
  virtual ~Object() = default;

  static const ClassInfo& klass();
  virtual const ClassInfo& class_info() const { return klass(); }

  /// Short human-readable rendering used in stacks and lists.
  virtual std::string display_string() const;

  /// Named attribute lookup used by view scripts; nullopt when unknown.
  virtual std::optional<Value> attribute(std::string_view name) const;
};

using ObjectRef = std::shared_ptr<const Object>;

}  // namespace moldex
