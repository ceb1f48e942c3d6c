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

#include "moldex/core/registry.hpp"

#include <limits>

namespace moldex {

Registry& Registry::global() {
  static Registry& instance = [] () -> Registry& {
    static Registry registry;
    install_core_extensions(registry);
    return registry;
  }();
  return instance;
}

void Registry::register_method(const ClassInfo& owner, std::string method_name, Marker marker,
                               MethodCallable callable) {
  if (method_name.empty()) throw FrameworkError(ErrorCode::invalid_argument, "method name must not be empty");
  std::lock_guard lock(write_mutex_);
  auto& methods = table_[&owner][marker];
  if (methods.contains(method_name)) {
    throw FrameworkError(ErrorCode::duplicate_registration,
                         owner.name() + ">>" + method_name + " already registered for " + marker.name());
  }
  RegisteredMethod entry{&owner, method_name, marker, std::move(callable)};
  methods.emplace(std::move(method_name), std::move(entry));
}

std::vector<const RegisteredMethod*> Registry::collect(const ClassInfo& subject_class, const Marker& marker) const {
  std::vector<const RegisteredMethod*> out;
  std::set<std::string, std::less<>> seen;
  for (const ClassInfo* cls : subject_class.linearization()) {
    auto by_class = table_.find(cls);
    if (by_class == table_.end()) continue;
    auto by_marker = by_class->second.find(marker);
    if (by_marker == by_class->second.end()) continue;
    for (const auto& [name, method] : by_marker->second) {
      if (seen.insert(name).second) out.push_back(&method);
    }
  }
  return out;
}

const RegisteredMethod* Registry::find_view(const ClassInfo& cls, std::string_view name) const {
  for (const ClassInfo* c : cls.linearization()) {
    auto by_class = table_.find(c);
    if (by_class == table_.end()) continue;
    auto lookup = [&](const MethodTable& methods) -> const RegisteredMethod* {
      auto it = methods.find(name);
      if (it != methods.end() && std::holds_alternative<ViewMethod>(it->second.callable)) return &it->second;
      return nullptr;
    };
    if (auto inspector = by_class->second.find(markers::inspector_view); inspector != by_class->second.end()) {
      if (const auto* m = lookup(inspector->second)) return m;
    }
    for (const auto& [marker, methods] : by_class->second) {
      if (marker == markers::inspector_view) continue;
      if (const auto* m = lookup(methods)) return m;
    }
  }
  return nullptr;
}

bool Registry::mark_installed(const std::string& tag) {
  std::lock_guard lock(write_mutex_);
  return installed_.insert(tag).second;
}

std::vector<ViewData> collect_views(const Object& subject, const Marker& marker, ExecutionContext* context,
                                    const Registry& registry) {
  const Materializer materializer(registry);
  std::vector<ViewData> views;
  for (const RegisteredMethod* method : registry.collect(subject.class_info(), marker)) {
    const auto* view_method = std::get_if<ViewMethod>(&method->callable);
    if (view_method == nullptr) continue;
    std::optional<ViewData> data;
    try {
      data = materializer.materialize((*view_method)(subject, ViewBuilder{}, context), subject);
    } catch (const FrameworkError& e) {
      data = make_error_view(method->method_name, std::numeric_limits<int>::max(), e.code(), e.what());
    } catch (const std::exception& e) {
      data = make_error_view(method->method_name, std::numeric_limits<int>::max(),
                             ErrorCode::view_evaluation_error, e.what());
    }
    if (!data) continue;
    data->source_ref = method->qualified_name();
    views.push_back(std::move(*data));
  }
  sort_views(views);
  return views;
}

}  // namespace moldex
