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

#include <any>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "moldex/core/errors.hpp"
#include "moldex/core/object.hpp"

namespace moldex {

class Registry;

enum class ViewKind { empty, forward, text, list, columned_list, tree, text_diff, error };

std::string_view to_string(ViewKind kind) noexcept;
ViewKind view_kind_from_string(std::string_view text);

struct ForwardPayload {
  std::function<ObjectRef()> target_provider;
  std::string view_selector;
};

struct TextPayload {
  std::function<std::string()> text;
};

struct ListPayload {
  std::function<std::vector<std::string>()> items;
};

struct Column {
  std::string title;
  std::function<std::string(const std::any&)> extractor;
};

struct ColumnedListPayload {
  std::vector<Column> columns;
  std::function<std::vector<std::any>()> items_provider;
};

/// Type-erased tree node; `identity` detects cycles during expansion.
struct TreeNode {
  std::any value;
  const void* identity = nullptr;
};

struct NodeLabel {
  std::string text;
  std::string status;
  /// Optional pointer back to the code that defined the node.
  std::string source;
};

struct TreePayload {
  std::function<std::vector<TreeNode>()> roots_provider;
  std::function<std::vector<TreeNode>(const TreeNode&)> children;
  std::function<NodeLabel(const TreeNode&)> node_label;
};

struct DiffPayload {
  std::string left_label;
  std::string right_label;
  std::function<std::string()> left_text;
  std::function<std::string()> right_text;
};

using ViewPayload = std::variant<std::monostate, ForwardPayload, TextPayload, ListPayload,
                                 ColumnedListPayload, TreePayload, DiffPayload>;

/// Declarative description of one view. Immutable once built; payload
/// computations are deferred until materialization.
class ViewSpec {
 public:
  /// The distinguished "contribute nothing" spec.
  static ViewSpec empty() { return ViewSpec(); }

  ViewSpec(std::string title, int priority, ViewPayload payload);

  ViewKind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return kind_ == ViewKind::empty; }
  const std::string& title() const noexcept { return title_; }
  int priority() const noexcept { return priority_; }
  const ViewPayload& payload() const noexcept { return payload_; }

 private:
  ViewSpec() = default;

  ViewKind kind_ = ViewKind::empty;
  std::string title_;
  int priority_ = 0;
  ViewPayload payload_;
};

template <class Derived>
class ViewBuilderBase {
 public:
  Derived& title(std::string value) {
    title_ = std::move(value);
    return self();
  }
  Derived& priority(int value) {
    priority_ = value;
    return self();
  }

  operator ViewSpec() const { return static_cast<const Derived&>(*this).build(); }

 protected:
  Derived& self() { return static_cast<Derived&>(*this); }

  std::string title_;
  int priority_ = 0;
};

class ForwardViewBuilder : public ViewBuilderBase<ForwardViewBuilder> {
 public:
  ForwardViewBuilder& object(std::function<ObjectRef()> provider) {
    provider_ = std::move(provider);
    return *this;
  }
  ForwardViewBuilder& view(std::string selector) {
    selector_ = std::move(selector);
    return *this;
  }
  ViewSpec build() const;

 private:
  std::function<ObjectRef()> provider_;
  std::string selector_;
};

class TextViewBuilder : public ViewBuilderBase<TextViewBuilder> {
 public:
  TextViewBuilder& text(std::function<std::string()> provider) {
    text_ = std::move(provider);
    return *this;
  }
  ViewSpec build() const { return ViewSpec(title_, priority_, TextPayload{text_}); }

 private:
  std::function<std::string()> text_;
};

class ListViewBuilder : public ViewBuilderBase<ListViewBuilder> {
 public:
  ListViewBuilder& items(std::function<std::vector<std::string>()> provider) {
    items_ = std::move(provider);
    return *this;
  }
  ViewSpec build() const { return ViewSpec(title_, priority_, ListPayload{items_}); }

 private:
  std::function<std::vector<std::string>()> items_;
};

template <class T>
class ColumnedListViewBuilder : public ViewBuilderBase<ColumnedListViewBuilder<T>> {
 public:
  ColumnedListViewBuilder& items(std::function<std::vector<T>()> provider) {
    items_ = std::move(provider);
    return *this;
  }
  ColumnedListViewBuilder& column(std::string column_title, std::function<std::string(const T&)> extractor) {
    columns_.push_back({std::move(column_title),
                        [extractor = std::move(extractor)](const std::any& item) {
                          return extractor(std::any_cast<const T&>(item));
                        }});
    return *this;
  }
  ViewSpec build() const {
    ColumnedListPayload payload;
    payload.columns = columns_;
    if (items_) {
      payload.items_provider = [items = items_] {
        std::vector<std::any> erased;
        for (auto& item : items()) erased.emplace_back(std::move(item));
        return erased;
      };
    }
    return ViewSpec(this->title_, this->priority_, std::move(payload));
  }

 private:
  std::function<std::vector<T>()> items_;
  std::vector<Column> columns_;
};

/// Tree over pointer-like node handles (raw or smart pointers); node identity
/// is the pointee address.
template <class T>
class TreeViewBuilder : public ViewBuilderBase<TreeViewBuilder<T>> {
 public:
  TreeViewBuilder& roots(std::function<std::vector<T>()> provider) {
    roots_ = std::move(provider);
    return *this;
  }
  TreeViewBuilder& children(std::function<std::vector<T>(const T&)> provider) {
    children_ = std::move(provider);
    return *this;
  }
  TreeViewBuilder& label(std::function<NodeLabel(const T&)> provider) {
    label_ = std::move(provider);
    return *this;
  }
  ViewSpec build() const {
    TreePayload payload;
    if (roots_) {
      payload.roots_provider = [roots = roots_] { return wrap_all(roots()); };
    }
    if (children_) {
      payload.children = [children = children_](const TreeNode& node) {
        return wrap_all(children(std::any_cast<const T&>(node.value)));
      };
    }
    if (label_) {
      payload.node_label = [label = label_](const TreeNode& node) {
        return label(std::any_cast<const T&>(node.value));
      };
    }
    return ViewSpec(this->title_, this->priority_, std::move(payload));
  }

 private:
  static std::vector<TreeNode> wrap_all(std::vector<T> nodes) {
    std::vector<TreeNode> wrapped;
    for (auto& n : nodes) {
      const void* id = static_cast<const void*>(std::to_address(n));
      wrapped.push_back({std::any(std::move(n)), id});
    }
    return wrapped;
  }

  std::function<std::vector<T>()> roots_;
  std::function<std::vector<T>(const T&)> children_;
  std::function<NodeLabel(const T&)> label_;
};

class DiffViewBuilder : public ViewBuilderBase<DiffViewBuilder> {
 public:
  DiffViewBuilder& left(std::string label, std::function<std::string()> text) {
    left_label_ = std::move(label);
    left_ = std::move(text);
    return *this;
  }
  DiffViewBuilder& right(std::string label, std::function<std::string()> text) {
    right_label_ = std::move(label);
    right_ = std::move(text);
    return *this;
  }
  ViewSpec build() const {
    return ViewSpec(title_, priority_, DiffPayload{left_label_, right_label_, left_, right_});
  }

 private:
  std::string left_label_ = "left";
  std::string right_label_ = "right";
  std::function<std::string()> left_;
  std::function<std::string()> right_;
};

/// Handed to every view method; each factory starts a fresh spec.
class ViewBuilder {
 public:
  ViewSpec empty() const { return ViewSpec::empty(); }

  ForwardViewBuilder forward() const { return {}; }
  ViewSpec forward(std::string title, int priority, std::function<ObjectRef()> target,
                   std::string selector) const;

  TextViewBuilder text() const { return {}; }
  ListViewBuilder list() const { return {}; }
  template <class T>
  ColumnedListViewBuilder<T> columned_list() const {
    return {};
  }
  template <class T>
  TreeViewBuilder<T> tree() const {
    return {};
  }
  DiffViewBuilder text_diff() const { return {}; }
};

/// Materialized, fully serializable rendering of a view.
struct ViewData {
  ViewKind kind = ViewKind::empty;
  std::string title;
  int priority = 0;
  Value body;
  std::optional<std::string> source_ref;
  /// Kind-specific extras outside the body (diff side labels); null if none.
  Value meta;
  bool truncated = false;

  bool operator==(const ViewData&) const = default;
};

void to_json(Value& out, const ViewData& view);
void from_json(const Value& in, ViewData& view);

ViewData make_error_view(std::string title, int priority, ErrorCode code, std::string message);

inline constexpr std::size_t max_view_body_bytes = 1u << 20;

/// Turns specs into ViewData. Forward targets are looked up in `registry`.
class Materializer {
 public:
  explicit Materializer(const Registry& registry, std::size_t body_limit = max_view_body_bytes)
      : registry_(registry), body_limit_(body_limit) {}

  /// Never throws: failures become an error view.
  std::optional<ViewData> materialize(const ViewSpec& spec, const Object& subject) const;

  /// Like materialize, but failures surface as FrameworkError (and view
  /// methods' own exceptions propagate unchanged).
  std::optional<ViewData> materialize_strict(const ViewSpec& spec, const Object& subject) const;

 private:
  std::optional<ViewData> materialize_at(const ViewSpec& spec, const Object& subject, int depth) const;
  void enforce_limit(ViewData& view) const;

  const Registry& registry_;
  std::size_t body_limit_;
};

std::optional<ViewData> materialize(const ViewSpec& spec, const Object& subject);
std::optional<ViewData> materialize(const ViewSpec& spec, const Object& subject, const Registry& registry);

/// Display order: priority ascending, ties keep their input order.
void sort_views(std::vector<ViewData>& views);

}  // namespace moldex
