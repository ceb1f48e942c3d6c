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

#include "moldex/packs/fixit.hpp"

#include "moldex/core/errors.hpp"
#include "moldex/core/script.hpp"
#include "moldex/core/session.hpp"
#include "moldex/core/stack.hpp"

namespace moldex::packs {

std::optional<Value> Inventory::attribute(std::string_view name) const {
  if (name == "has_items") return Value(false);
  if (name == "items") return Value::array();
  return std::nullopt;
}

std::string faulty_view_script() {
  return "// Inspector views for Inventory.\n"
         "view items_view(view) {\n"
         "  return view;\n"
         "}\n";
}

void prepare_view_script(const std::filesystem::path& data_dir, bool reset) {
  std::filesystem::create_directories(data_dir);
  const auto path = data_dir / view_script_name;
  if (reset || !std::filesystem::exists(path)) write_text_file(path, faulty_view_script());
}

SourcePatch empty_view_patch(const std::filesystem::path& script) {
  return {{script, std::string(items_view_method)}, "return $param;", "return $param.empty();"};
}

EmptyViewError::EmptyViewError(PatchTarget method, const TransformationSettings* change_log)
    : Error(method.function + " returned the view builder instead of a view"),
      method_(std::move(method)),
      change_log_(change_log) {}

namespace {

bool applicable(const SourcePatch& patch) {
  try {
    return probe_patch(patch, read_text_file(patch.target.file)) == PatchStatus::applicable;
  } catch (const FrameworkError&) {
    return false;
  }
}

}  // namespace

bool EmptyViewError::patch_applicable() const { return applicable(patch()); }

ChangeSummary EmptyViewError::apply_fix() const { return apply_patch(patch(), change_log_); }

std::shared_ptr<const Transformation> EmptyViewError::transformation() const {
  auto t = std::make_shared<Transformation>();
  t->description = "return an empty view from " + method_.function;
  t->should_transform = [p = patch()] { return applicable(p); };
  t->perform = [p = patch(), log = change_log_] { apply_patch(p, log); };
  t->preview = [p = patch()] { return patch_preview(p); };
  return t;
}

void install_fixit_pack(Registry& registry) {
  if (!registry.mark_installed("moldex.packs.fixit")) return;

  registry.add_view<EmptyViewError>("empty_view_error", markers::exception_view,
                                    [](const EmptyViewError& self, const ViewBuilder& view) -> ViewSpec {
    return view.text().title("Empty view error").priority(10).text([&self] {
      return self.message() + "\n\n" + self.method().file.string() + ":\n" + read_text_file(self.method().file);
    });
  });

  registry.add_action<EmptyViewError>("fix_and_retry", markers::exception_action,
                                      [](const EmptyViewError& self, const ActionBuilder& action,
                                         ExecutionContext&) -> ActionSpec {
    if (!self.patch_applicable()) return action.no_action();
    return action.dropdown()
        .label("Fix & retry")
        .icon("fix")
        .priority(50)
        .id(std::string(fixit_action_id))
        .preferred_extent(650, 350)
        .content([patch = self.patch()] { return patch_preview(patch, "Fix & retry preview"); })
        .action([&self](ExecutionContext& context) {
          const ChangeSummary summary = self.apply_fix();
          context.restart_top_frame();
          return ActionResult{ActionStatus::retried, summary.to_json().dump()};
        });
  });
}

Value fixit_scenario(const std::filesystem::path& data_dir, const TransformationSettings* change_log) {
  FrameScope frame("fixit_scenario");
  const auto path = data_dir / view_script_name;
  const std::string script_path = path.string();
  frame.local("script", script_path);

  // Re-read on every run, so a rewritten file rebinds the method.
  const script::Module module = script::parse_module(read_text_file(path));
  const script::Method* method = module.find(items_view_method);
  if (method == nullptr) {
    throw FrameworkError(ErrorCode::target_not_found, "no " + std::string(items_view_method) + " in " + script_path);
  }
  const Inventory inventory;
  auto result = script::evaluate(*method, inventory);
  if (std::holds_alternative<script::BuilderReturned>(result)) {
    raise(EmptyViewError({path, method->name}, change_log));
  }
  const auto data = Materializer(Registry::global()).materialize_strict(std::get<ViewSpec>(result), inventory);
  return Value{{"view", data ? Value(*data) : Value(nullptr)}};
}

}  // namespace moldex::packs
