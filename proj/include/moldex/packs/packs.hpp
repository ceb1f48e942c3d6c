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
#include <vector>

#include "moldex/core/guard.hpp"
#include "moldex/core/registry.hpp"

namespace moldex::packs {

struct PackOptions {
  /// Golden files and view scripts live here.
  std::filesystem::path data_dir = "moldex-data";
  /// Re-seed pack files even when they exist.
  bool reset = false;
};

struct PackOutcome {
  std::string pack;
  /// Entry value, the resume substitute or the re-run's value.
  Value result;
  /// Set when the guard rethrew the exception.
  bool raised = false;
  std::string error_class;
  std::string error_message;
  int invocations = 0;
  int sessions_opened = 0;
  int transformations_applied = 0;
  std::shared_ptr<DebugSession> last_session;

  Value to_json() const;
};

const std::vector<std::string>& pack_names();

/// Installs the core extensions and every pack. Idempotent.
void install_all(Registry& registry);

/// Seeds the pack's files and returns its guarded entry. Throws
/// FrameworkError(unknown_pack) for unknown names.
Entry make_entry(const std::string& name, const PackOptions& options,
                 const TransformationSettings* settings = nullptr);

/// Runs the pack's failing scenario under a guard configured by `config`.
/// When config.registry is unset, packs are installed into the global
/// registry; a given registry must already have them installed.
PackOutcome run_pack(const std::string& name, const PackOptions& options, GuardConfig config = {});

}  // namespace moldex::packs
