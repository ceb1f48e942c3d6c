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
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "moldex/core/action.hpp"
#include "moldex/core/debugger_spec.hpp"
#include "moldex/core/errors.hpp"
#include "moldex/core/marker.hpp"
#include "moldex/core/object.hpp"
#include "moldex/core/view.hpp"

namespace moldex {

class ExecutionContext;

using ViewMethod = std::function<ViewSpec(const Object&, const ViewBuilder&, ExecutionContext*)>;
using ActionMethod = std::function<ActionSpec(const Object&, const ActionBuilder&, ExecutionContext&)>;
using SpecificationMethod = std::function<DebuggerSpecification(const ExceptionRef&)>;
using MethodCallable = std::variant<ViewMethod, ActionMethod, SpecificationMethod>;

struct RegisteredMethod {
  const ClassInfo* owner_class = nullptr;
  std::string method_name;
  Marker marker{""};
  MethodCallable callable;

  std::string qualified_name() const { return owner_class->name() + ">>" + method_name; }
};

/// Annotated-method registry keyed by (class, marker).
///
/// Registration is expected at startup. After that, reads take no lock and
/// must not race with further registration.
class Registry {
 public:
  Registry() = default;
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  static Registry& global();

  /// Throws duplicate_registration if (owner, name, marker) is taken.
  void register_method(const ClassInfo& owner, std::string method_name, Marker marker, MethodCallable callable);

  /// Walks the linearization self-first; per marker the most-derived method
  /// of each name wins. Order: linearization position, then method name.
  std::vector<const RegisteredMethod*> collect(const ClassInfo& subject_class, const Marker& marker) const;

  /// View method named `name` visible from `cls`, inspector views first.
  const RegisteredMethod* find_view(const ClassInfo& cls, std::string_view name) const;

  /// Returns false if `tag` was installed before; used by extension packs.
  bool mark_installed(const std::string& tag);

  template <class T, class F>
  void add_view(std::string name, const Marker& marker, F fn) {
    register_method(T::klass(), std::move(name), marker,
                    ViewMethod([fn = std::move(fn)](const Object& subject, const ViewBuilder& view,
                                                    ExecutionContext* context) -> ViewSpec {
                      const T& self = dynamic_cast<const T&>(subject);
                      if constexpr (std::is_invocable_v<F, const T&, const ViewBuilder&, ExecutionContext*>) {
                        return fn(self, view, context);
                      } else {
                        (void)context;
                        return fn(self, view);
                      }
                    }));
  }

  template <class T, class F>
  void add_action(std::string name, const Marker& marker, F fn) {
    register_method(T::klass(), std::move(name), marker,
                    ActionMethod([fn = std::move(fn)](const Object& subject, const ActionBuilder& action,
                                                      ExecutionContext& context) -> ActionSpec {
                      return fn(dynamic_cast<const T&>(subject), action, context);
                    }));
  }

  template <class T, class F>
  void add_specification(std::string name, F fn) {
    register_method(T::klass(), std::move(name), markers::debugger_specification,
                    SpecificationMethod([fn = std::move(fn)](const ExceptionRef& self) -> DebuggerSpecification {
                      return fn(dynamic_cast<const T&>(*self), ObjectRef(self));
                    }));
  }

 private:
  using MethodTable = std::map<std::string, RegisteredMethod, std::less<>>;
  using MarkerTable = std::map<Marker, MethodTable>;

  std::map<const ClassInfo*, MarkerTable> table_;
  std::set<std::string> installed_;
  std::mutex write_mutex_;
};

/// Invokes every view method for `marker` on the subject's hierarchy with a
/// fresh builder, drops empty views and sorts by (priority, discovery order).
/// Per-view failures become error views.
std::vector<ViewData> collect_views(const Object& subject, const Marker& marker, ExecutionContext* context,
                                    const Registry& registry);

}  // namespace moldex
