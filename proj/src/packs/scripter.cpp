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

#include "moldex/packs/scripter.hpp"

#include "moldex/packs/assertion.hpp"

namespace moldex::packs {
namespace {

// Set while a step body runs so checks can attach it to their failure.
thread_local std::shared_ptr<const ScripterStep> running_step_ref;
thread_local std::shared_ptr<const ScripterRun> running_run;

void check_equals(int expected, int actual, const std::string& what) {
  assert_equals_with(
      [](std::string message, Value e, Value a) {
        ScripterCheckFailure failure(std::move(message), std::move(e), std::move(a));
        failure.attach(running_step_ref, running_run);
        return failure;
      },
      std::to_string(expected) + " " + what, std::to_string(actual) + " " + what);
}

}  // namespace

std::string_view to_string(StepStatus status) noexcept {
  switch (status) {
    case StepStatus::pending: return "pending";
    case StepStatus::passed: return "passed";
    case StepStatus::failed: return "failed";
  }
  return "pending";
}

StepStatus ScripterStep::status() const noexcept {
  if (body_ || children_.empty()) return status_;
  bool all_passed = true;
  for (const auto& child : children_) {
    const auto s = child->status();
    if (s == StepStatus::failed) return StepStatus::failed;
    all_passed = all_passed && s == StepStatus::passed;
  }
  return all_passed ? StepStatus::passed : StepStatus::pending;
}

ScripterStep& ScripterStep::add(std::shared_ptr<ScripterStep> child) {
  children_.push_back(std::move(child));
  return *this;
}

void ScripterRun::schedule(const std::shared_ptr<ScripterStep>& step, const std::shared_ptr<const ScripterRun>& self) {
  queue_.push_back([step, self] {
    if (!step->body_) return;
    FrameScope frame("ScripterStep::run");
    frame.local("step", step->label_);
    running_step_ref = step;
    running_run = self;
    try {
      step->body_();
      step->status_ = StepStatus::passed;
    } catch (...) {
      step->status_ = StepStatus::failed;
      running_step_ref.reset();
      running_run.reset();
      throw;
    }
    running_step_ref.reset();
    running_run.reset();
  });
  for (const auto& child : step->children_) schedule(child, self);
}

void ScripterRun::play(const std::shared_ptr<const ScripterRun>& self) {
  FrameScope frame("ScripterRun::play");
  queue_.clear();
  schedule(root_, self);
  while (!queue_.empty()) {
    auto task = std::move(queue_.front());
    queue_.pop_front();
    task();
  }
}

void page_with_class_clicked(ScripterRun& run) {
  FrameScope frame{std::string(scripter_definer)};
  const std::string definer(scripter_definer);
  ScripterScene* scene = &run.scene();
  auto group = std::make_shared<ScripterStep>("Page with class clicked", definer);
  group->add(std::make_shared<ScripterStep>("Click on page with class", definer, [] {
    // The bug under test: the click does not spawn a page.
  }));
  group->add(std::make_shared<ScripterStep>("Check that the click was registered", definer,
                                            [scene] { check_equals(1, scene->pages, "page(s) before spawn"); }));
  group->add(std::make_shared<ScripterStep>(std::string(failing_check_label), definer,
                                            [scene] { check_equals(2, scene->pages, "page(s)"); }));
  group->add(std::make_shared<ScripterStep>("Check the new page title", definer, [scene] {
    check_equals(2, scene->pages, "page(s)");
  }));
  run.root()->add(group);
}

void install_scripter_pack(Registry& registry) {
  if (!registry.mark_installed("moldex.packs.scripter")) return;
  install_assertion_pack(registry);

  registry.add_view<ScripterRun>("steps_view", markers::inspector_view,
                                 [](const ScripterRun& self, const ViewBuilder& view) -> ViewSpec {
    return view.tree<std::shared_ptr<const ScripterStep>>()
        .title("Steps")
        .priority(10)
        .roots([root = self.root()] { return std::vector<std::shared_ptr<const ScripterStep>>{root}; })
        .children([](const std::shared_ptr<const ScripterStep>& step) {
          return std::vector<std::shared_ptr<const ScripterStep>>(step->children().begin(), step->children().end());
        })
        .label([](const std::shared_ptr<const ScripterStep>& step) {
          return NodeLabel{step->label(), std::string(to_string(step->status())), step->definer()};
        });
  });

  registry.add_view<ScripterCheckFailure>("step_preview", scripter_view,
                                          [](const ScripterCheckFailure& self, const ViewBuilder& view) -> ViewSpec {
    if (!self.step()) return view.empty();
    return view.text().title("Failed step").priority(10).text([step = self.step(), message = self.message()] {
      return step->label() + " (defined in " + step->definer() + ")\n" + message;
    });
  });

  registry.add_view<ScripterCheckFailure>("steps_tree", scripter_view,
                                          [](const ScripterCheckFailure& self, const ViewBuilder& view) -> ViewSpec {
    if (!self.run()) return view.empty();
    return view.forward("Scripter steps", 20, [run = self.run()] { return run; }, "steps_view");
  });

  registry.add_view<ScripterCheckFailure>("check_diff", scripter_view,
                                          [](const ScripterCheckFailure& self, const ViewBuilder& view) -> ViewSpec {
    auto context = locate_assert_equals_context(self);
    if (!context) return view.empty();
    return view.forward("Textual Diff", 30, [context] { return context; }, "textual_diff_view");
  });

  registry.add_specification<ScripterCheckFailure>("scripter_specification",
                                                   [](const ScripterCheckFailure&, const ObjectRef&) {
    DebuggerSpecification spec;
    spec.title = "Scripter";
    spec.icon_id = "scripter";
    spec.priority = 5;
    spec.client_kind = "scripter";
    spec.view_markers = {scripter_view};
    spec.action_markers = {Marker("scripter_action")};
    return spec;
  });
}

Value scripter_scenario() {
  FrameScope frame("scripter_scenario");
  auto run = std::make_shared<ScripterRun>();
  page_with_class_clicked(*run);
  run->play(run);
  return "passed";
}

}  // namespace moldex::packs
