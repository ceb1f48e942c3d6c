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
#include <optional>
#include <string>
#include <vector>

#include "moldex/core/object.hpp"
#include "moldex/core/view.hpp"

namespace moldex {

class TransformationSettings;

struct PatchTarget {
  std::filesystem::path file;
  /// View method name inside the script file.
  std::string function;
};

/// Structural rewrite of one statement in a view script. `match` and
/// `replacement` are statements; `$param` stands for the builder parameter.
struct SourcePatch {
  PatchTarget target;
  std::string match;
  std::string replacement;
};

struct SourceChange {
  unsigned line = 0;
  std::string before;
  std::string after;
};

struct ChangeSummary {
  std::filesystem::path file;
  std::string function;
  bool changed = false;
  std::vector<SourceChange> changes;

  Value to_json() const;
};

enum class PatchStatus { applicable, already_applied };

/// Throws target_not_found, match_not_found or pattern_ambiguous.
PatchStatus probe_patch(const SourcePatch& patch, const std::string& source);

/// Pure rewrite of `source`; returns it unchanged when already applied.
/// Throws patch_invalid if the result would not parse.
std::string patched_source(const SourcePatch& patch, const std::string& source,
                           std::vector<SourceChange>* changes = nullptr);

/// Rewrites the target file in place under a process-wide lock. Idempotent:
/// a second application reports changed = false. Summaries go to the
/// settings' change log when given.
ChangeSummary apply_patch(const SourcePatch& patch, const TransformationSettings* log = nullptr);

/// Diff of the file before and after the patch; nullopt if the patch does
/// not apply (or is already applied).
std::optional<ViewData> patch_preview(const SourcePatch& patch, std::string title = "Proposed change");

std::string read_text_file(const std::filesystem::path& path);
/// Writes via a temporary file and rename.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace moldex
