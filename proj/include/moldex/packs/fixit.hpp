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

#include <filesystem>
#include <memory>
#include <string>

#include "moldex/core/exception.hpp"
#include "moldex/core/registry.hpp"
#include "moldex/core/source_patch.hpp"
#include "moldex/core/transformation.hpp"

namespace moldex::packs {

inline constexpr std::string_view fixit_action_id = "gtDebugAction-fixit";
inline constexpr std::string_view view_script_name = "inspector_views.mview";
inline constexpr std::string_view items_view_method = "items_view";

/// The subject whose inspector view lives in the script file.
class Inventory : public Object {
  MOLDEX_CLASS(Inventory, &Object::klass())

 public:
  std::optional<Value> attribute(std::string_view name) const override;
  std::string display_string() const override { return "an Inventory (empty)"; }
};

/// Script source with the faulty method (it returns the builder itself).
std::string faulty_view_script();

/// Seeds the script file when missing (or always, with `reset`).
void prepare_view_script(const std::filesystem::path& data_dir, bool reset);

/// The rewrite offered for an empty-view error in `script`.
SourcePatch empty_view_patch(const std::filesystem::path& script);

class EmptyViewError : public Error, public Transformable {
  MOLDEX_CLASS(EmptyViewError, &Error::klass())

 public:
  EmptyViewError(PatchTarget method, const TransformationSettings* change_log);

  const PatchTarget& method() const noexcept { return method_; }
  SourcePatch patch() const { return empty_view_patch(method_.file); }
  bool patch_applicable() const;
  ChangeSummary apply_fix() const;

  std::shared_ptr<const Transformation> transformation() const override;

 private:
  PatchTarget method_;
  const TransformationSettings* change_log_;
};

void install_fixit_pack(Registry& registry);

/// Materializes Inventory's scripted items_view strictly.
Value fixit_scenario(const std::filesystem::path& data_dir, const TransformationSettings* change_log);

}  // namespace moldex::packs
