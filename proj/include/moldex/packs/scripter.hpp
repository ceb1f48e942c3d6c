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

#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "moldex/core/registry.hpp"
#include "moldex/packs/harness.hpp"

namespace moldex::packs {

inline const Marker scripter_view{"scripter_view"};

enum class StepStatus { pending, passed, failed };
std::string_view to_string(StepStatus status) noexcept;

/// One scripted UI step. `definer` names the function that created it,
/// which has usually returned by the time the step runs.
class ScripterStep : public Object {
  MOLDEX_CLASS(ScripterStep, &Object::klass())

 public:
  ScripterStep(std::string label, std::string definer, std::function<void()> body = {})
      : label_(std::move(label)), definer_(std::move(definer)), body_(std::move(body)) {}

  const std::string& label() const noexcept { return label_; }
  const std::string& definer() const noexcept { return definer_; }
  /// Steps without a body summarize their children.
  StepStatus status() const noexcept;
  const std::vector<std::shared_ptr<ScripterStep>>& children() const noexcept { return children_; }

  ScripterStep& add(std::shared_ptr<ScripterStep> child);
  std::string display_string() const override { return "step " + label_; }

 private:
  friend class ScripterRun;

  std::string label_;
  std::string definer_;
  std::function<void()> body_;
  StepStatus status_ = StepStatus::pending;
  std::vector<std::shared_ptr<ScripterStep>> children_;
};

/// Simulated UI: a page count mutated by steps.
struct ScripterScene {
  int pages = 1;
};

/// Runs steps through a deterministic queue, never on the definer's stack.
class ScripterRun : public Object {
  MOLDEX_CLASS(ScripterRun, &Object::klass())

 public:
  ScripterRun() : root_(std::make_shared<ScripterStep>("Scripter", "ScripterRun")) {}

  const std::shared_ptr<ScripterStep>& root() const noexcept { return root_; }
  ScripterScene& scene() noexcept { return scene_; }

  /// Schedules every step under the root, depth first.
  void play(const std::shared_ptr<const ScripterRun>& self);
  std::string display_string() const override { return "a ScripterRun"; }

 private:
  void schedule(const std::shared_ptr<ScripterStep>& step, const std::shared_ptr<const ScripterRun>& self);

  std::shared_ptr<ScripterStep> root_;
  ScripterScene scene_;
  std::deque<std::function<void()>> queue_;
};

class ScripterCheckFailure : public AssertionFailure {
  MOLDEX_CLASS(ScripterCheckFailure, &AssertionFailure::klass())

 public:
  ScripterCheckFailure(std::string message, Value expected, Value actual)
      : AssertionFailure(std::move(message), std::move(expected), std::move(actual)) {}

  std::shared_ptr<const ScripterStep> step() const { return step_; }
  std::shared_ptr<const ScripterRun> run() const { return run_; }
  void attach(std::shared_ptr<const ScripterStep> step, std::shared_ptr<const ScripterRun> run) {
    step_ = std::move(step);
    run_ = std::move(run);
  }

 private:
  std::shared_ptr<const ScripterStep> step_;
  std::shared_ptr<const ScripterRun> run_;
};

/// Defines the click-and-check steps on `run` and returns before they run.
void page_with_class_clicked(ScripterRun& run);

inline constexpr std::string_view scripter_definer = "page_with_class_clicked";
inline constexpr std::string_view failing_check_label = "Check that page was spawned";

void install_scripter_pack(Registry& registry);

Value scripter_scenario();

}  // namespace moldex::packs
