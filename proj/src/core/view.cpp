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

#include "moldex/core/view.hpp"

#include <algorithm>
#include <unordered_set>

#include "moldex/core/diff.hpp"
#include "moldex/core/registry.hpp"

namespace moldex {
namespace {

constexpr int max_forward_depth = 16;
constexpr int max_tree_depth = 256;

struct KindName {
  ViewKind kind;
  std::string_view name;
};

constexpr KindName kind_names[] = {
    {ViewKind::empty, "empty"},
    {ViewKind::forward, "forward"},
    {ViewKind::text, "text"},
    {ViewKind::list, "list"},
    {ViewKind::columned_list, "columned_list"},
    {ViewKind::tree, "tree"},
    {ViewKind::text_diff, "text_diff"},
    {ViewKind::error, "error"},
};

ViewKind kind_of(const ViewPayload& payload) {
  return std::visit(
      [](const auto& p) -> ViewKind {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ForwardPayload>) return ViewKind::forward;
        else if constexpr (std::is_same_v<P, TextPayload>) return ViewKind::text;
        else if constexpr (std::is_same_v<P, ListPayload>) return ViewKind::list;
        else if constexpr (std::is_same_v<P, ColumnedListPayload>) return ViewKind::columned_list;
        else if constexpr (std::is_same_v<P, TreePayload>) return ViewKind::tree;
        else if constexpr (std::is_same_v<P, DiffPayload>) return ViewKind::text_diff;
        else return ViewKind::empty;
      },
      payload);
}

Value tree_node_json(const TreePayload& tree, const TreeNode& node, std::vector<const void*>& path) {
  const NodeLabel label = tree.node_label ? tree.node_label(node) : NodeLabel{};
  Value out = {{"label", label.text}, {"status", label.status}, {"children", Value::array()}};
  if (!label.source.empty()) out["source"] = label.source;
  if (!tree.children) return out;
  if (path.size() >= static_cast<std::size_t>(max_tree_depth)) {
    out["children"].push_back({{"label", "(depth limit)"}, {"status", "truncated"}, {"children", Value::array()}});
    return out;
  }
  path.push_back(node.identity);
  for (const auto& child : tree.children(node)) {
    if (child.identity != nullptr && std::find(path.begin(), path.end(), child.identity) != path.end()) {
      out["children"].push_back({{"label", "(cycle)"}, {"status", "cycle"}, {"children", Value::array()}});
      continue;
    }
    out["children"].push_back(tree_node_json(tree, child, path));
  }
  path.pop_back();
  return out;
}

std::size_t utf8_safe_cut(const std::string& text, std::size_t limit) {
  if (limit >= text.size()) return text.size();
  std::size_t cut = limit;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
  return cut;
}

void keep_prefix(Value& array, std::size_t budget) {
  std::size_t used = 2;
  std::size_t keep = 0;
  for (const auto& item : array) {
    const auto size = item.dump().size() + 1;
    if (used + size > budget) break;
    used += size;
    ++keep;
  }
  array.erase(array.begin() + static_cast<std::ptrdiff_t>(keep), array.end());
}

}  // namespace

std::string_view to_string(ViewKind kind) noexcept {
  for (const auto& kn : kind_names) {
    if (kn.kind == kind) return kn.name;
  }
  return "empty";
}

ViewKind view_kind_from_string(std::string_view text) {
  for (const auto& kn : kind_names) {
    if (kn.name == text) return kn.kind;
  }
  throw FrameworkError(ErrorCode::invalid_argument, "unknown view kind: " + std::string(text));
}

ViewSpec::ViewSpec(std::string title, int priority, ViewPayload payload)
    : kind_(kind_of(payload)), title_(std::move(title)), priority_(priority), payload_(std::move(payload)) {
  if (kind_ == ViewKind::empty) {
    throw FrameworkError(ErrorCode::invalid_view_spec, "use ViewSpec::empty() for the empty view");
  }
  if (title_.empty()) {
    throw FrameworkError(ErrorCode::invalid_view_spec, "non-empty views need a title");
  }
}

ViewSpec ForwardViewBuilder::build() const {
  if (selector_.empty()) {
    throw FrameworkError(ErrorCode::invalid_view_spec, "forward view '" + title_ + "' needs a view selector");
  }
  return ViewSpec(title_, priority_, ForwardPayload{provider_, selector_});
}

ViewSpec ViewBuilder::forward(std::string title, int priority, std::function<ObjectRef()> target,
                              std::string selector) const {
  return ForwardViewBuilder{}.title(std::move(title)).priority(priority).object(std::move(target)).view(
      std::move(selector));
}

void to_json(Value& out, const ViewData& view) {
  out = {{"kind", to_string(view.kind)},
         {"title", view.title},
         {"priority", view.priority},
         {"body", view.body},
         {"source_ref", view.source_ref ? Value(*view.source_ref) : Value(nullptr)}};
  if (!view.meta.is_null()) out["meta"] = view.meta;
  if (view.truncated) out["truncated"] = true;
}

void from_json(const Value& in, ViewData& view) {
  view.kind = view_kind_from_string(in.at("kind").get<std::string>());
  view.title = in.at("title").get<std::string>();
  view.priority = in.at("priority").get<int>();
  view.body = in.at("body");
  const auto src = in.find("source_ref");
  view.source_ref = (src == in.end() || src->is_null()) ? std::nullopt
                                                        : std::optional<std::string>(src->get<std::string>());
  view.meta = in.value("meta", Value());
  view.truncated = in.value("truncated", false);
}

ViewData make_error_view(std::string title, int priority, ErrorCode code, std::string message) {
  ViewData view;
  view.kind = ViewKind::error;
  view.title = title.empty() ? "Error" : std::move(title);
  view.priority = priority;
  view.body = {{"code", to_string(code)}, {"message", std::move(message)}};
  return view;
}

std::optional<ViewData> Materializer::materialize(const ViewSpec& spec, const Object& subject) const {
  try {
    return materialize_at(spec, subject, 0);
  } catch (const FrameworkError& e) {
    return make_error_view(spec.title(), spec.priority(), e.code(), e.what());
  } catch (const std::exception& e) {
    return make_error_view(spec.title(), spec.priority(), ErrorCode::view_evaluation_error, e.what());
  } catch (...) {
    return make_error_view(spec.title(), spec.priority(), ErrorCode::view_evaluation_error, "unknown failure");
  }
}

std::optional<ViewData> Materializer::materialize_strict(const ViewSpec& spec, const Object& subject) const {
  return materialize_at(spec, subject, 0);
}

std::optional<ViewData> Materializer::materialize_at(const ViewSpec& spec, [[maybe_unused]] const Object& subject, int depth) const {
  if (spec.is_empty()) return std::nullopt;

  ViewData out;
  out.kind = spec.kind();
  out.title = spec.title();
  out.priority = spec.priority();

  if (const auto* fwd = std::get_if<ForwardPayload>(&spec.payload())) {
    if (depth >= max_forward_depth) {
      throw FrameworkError(ErrorCode::forward_cycle, "forward chain deeper than " +
                                                         std::to_string(max_forward_depth) + " at '" +
                                                         spec.title() + "'");
    }
    ObjectRef target;
    try {
      if (!fwd->target_provider) throw FrameworkError(ErrorCode::invalid_view_spec, "no forward target");
      target = fwd->target_provider();
    } catch (const std::exception& e) {
      throw FrameworkError(ErrorCode::target_evaluation_error,
                           "forward target of '" + spec.title() + "' failed: " + e.what());
    }
    if (!target) {
      throw FrameworkError(ErrorCode::target_evaluation_error, "forward target of '" + spec.title() + "' is null");
    }
    const RegisteredMethod* method = registry_.find_view(target->class_info(), fwd->view_selector);
    if (method == nullptr) {
      throw FrameworkError(ErrorCode::unknown_view_selector,
                           target->class_info().name() + " registers no view named " + fwd->view_selector);
    }
    const auto& view_method = std::get<ViewMethod>(method->callable);
    ViewSpec inner = view_method(*target, ViewBuilder{}, nullptr);
    auto resolved = materialize_at(inner, *target, depth + 1);
    if (!resolved) return std::nullopt;
    resolved->title = spec.title();
    resolved->priority = spec.priority();
    resolved->source_ref = method->qualified_name();
    return resolved;
  }

  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, TextPayload>) {
          out.body = p.text ? p.text() : std::string();
        } else if constexpr (std::is_same_v<P, ListPayload>) {
          out.body = Value::array();
          if (p.items) {
            for (auto& item : p.items()) out.body.push_back(std::move(item));
          }
        } else if constexpr (std::is_same_v<P, ColumnedListPayload>) {
          Value columns = Value::array();
          for (const auto& c : p.columns) columns.push_back(c.title);
          Value rows = Value::array();
          if (p.items_provider) {
            for (const auto& item : p.items_provider()) {
              Value row = Value::array();
              for (const auto& c : p.columns) row.push_back(c.extractor ? c.extractor(item) : std::string());
              rows.push_back(std::move(row));
            }
          }
          out.body = {{"columns", std::move(columns)}, {"rows", std::move(rows)}};
        } else if constexpr (std::is_same_v<P, TreePayload>) {
          out.body = Value::array();
          if (p.roots_provider) {
            std::vector<const void*> path;
            for (const auto& root : p.roots_provider()) out.body.push_back(tree_node_json(p, root, path));
          }
        } else if constexpr (std::is_same_v<P, DiffPayload>) {
          const std::string left = p.left_text ? p.left_text() : std::string();
          const std::string right = p.right_text ? p.right_text() : std::string();
          out.body = hunks_to_json(compute_text_diff(left, right));
          out.meta = {{"left_label", p.left_label}, {"right_label", p.right_label}};
        }
      },
      spec.payload());

  enforce_limit(out);
  return out;
}

void Materializer::enforce_limit(ViewData& view) const {
  if (view.body.dump().size() <= body_limit_) return;
  view.truncated = true;
  if (view.body.is_string()) {
    auto text = view.body.get<std::string>();
    text.resize(utf8_safe_cut(text, body_limit_ > 2 ? body_limit_ - 2 : 0));
    view.body = std::move(text);
    // Escaping can still push a cut string over the limit.
    while (view.body.dump().size() > body_limit_) {
      auto t = view.body.get<std::string>();
      t.resize(utf8_safe_cut(t, t.size() / 2));
      view.body = std::move(t);
    }
  } else if (view.body.is_array()) {
    keep_prefix(view.body, body_limit_);
  } else if (view.body.is_object() && view.body.contains("rows")) {
    const auto overhead = view.body["columns"].dump().size() + 32;
    keep_prefix(view.body["rows"], body_limit_ > overhead ? body_limit_ - overhead : 0);
  }
}

std::optional<ViewData> materialize(const ViewSpec& spec, const Object& subject) {
  return Materializer(Registry::global()).materialize(spec, subject);
}

std::optional<ViewData> materialize(const ViewSpec& spec, const Object& subject, const Registry& registry) {
  return Materializer(registry).materialize(spec, subject);
}

void sort_views(std::vector<ViewData>& views) {
  std::stable_sort(views.begin(), views.end(),
                   [](const ViewData& a, const ViewData& b) { return a.priority < b.priority; });
}

}  // namespace moldex
