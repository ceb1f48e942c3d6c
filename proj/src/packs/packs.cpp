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

#include "moldex/packs/packs.hpp"

#include <algorithm>

#include "moldex/core/errors.hpp"
#include "moldex/core/exception.hpp"
#include "moldex/packs/assertion.hpp"
#include "moldex/packs/fixit.hpp"
#include "moldex/packs/golden.hpp"
#include "moldex/packs/ludo.hpp"
#include "moldex/packs/scripter.hpp"

namespace moldex::packs {

Value PackOutcome::to_json() const {
  Value out = {{"pack", pack},
               {"result", result},
               {"raised", raised},
               {"invocations", invocations},
               {"sessions_opened", sessions_opened},
               {"transformations_applied", transformations_applied}};
  if (raised) out["error"] = {{"class", error_class}, {"message", error_message}};
  if (last_session) out["last_session"] = last_session->summary();
  return out;
}

const std::vector<std::string>& pack_names() {
  static const std::vector<std::string> names = {"assertion", "ludo", "scripter", "golden", "fixit"};
  return names;
}

void install_all(Registry& registry) {
  install_core_extensions(registry);
  install_assertion_pack(registry);
  install_ludo_pack(registry);
  install_scripter_pack(registry);
  install_golden_pack(registry);
  install_fixit_pack(registry);
}

Entry make_entry(const std::string& name, const PackOptions& options, const TransformationSettings* settings) {
  if (name == "assertion") return {"assertion_scenario", [] { return assertion_scenario(); }};
  if (name == "ludo") return {"ludo_scenario", [] { return ludo_scenario(); }};
  if (name == "scripter") return {"scripter_scenario", [] { return scripter_scenario(); }};
  if (name == "golden") {
    prepare_golden(options.data_dir, options.reset);
    return {"golden_scenario", [dir = options.data_dir] { return golden_scenario(dir); }};
  }
  if (name == "fixit") {
    prepare_view_script(options.data_dir, options.reset);
    const auto* log = settings != nullptr ? settings : &TransformationSettings::default_instance();
    return {"fixit_scenario", [dir = options.data_dir, log] { return fixit_scenario(dir, log); }};
  }
  std::string known;
  for (const auto& n : pack_names()) known += (known.empty() ? "" : ", ") + n;
  throw FrameworkError(ErrorCode::unknown_pack, "unknown pack '" + name + "' (known: " + known + ")");
}

PackOutcome run_pack(const std::string& name, const PackOptions& options, GuardConfig config) {
  if (config.registry == nullptr) {
    install_all(Registry::global());
    config.registry = &Registry::global();
  }
  const Entry entry = make_entry(name, options, config.settings);
  Guard guard(std::move(config));
  PackOutcome outcome;
  outcome.pack = name;
  try {
    outcome.result = guard.run(entry);
  } catch (const Exception& e) {
    outcome.raised = true;
    outcome.error_class = e.class_info().name();
    outcome.error_message = e.message();
  }
  outcome.invocations = guard.invocations();
  outcome.sessions_opened = guard.sessions_opened();
  outcome.transformations_applied = guard.transformations_applied();
  outcome.last_session = guard.last_session();
  return outcome;
}

}  // namespace moldex::packs
