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

#include <doctest.h>

#include <thread>

#include "helpers.hpp"

using namespace moldex;
using moldex::testing::open_session;
using moldex::testing::PlainFailure;

namespace {

void install_actions(Registry& registry) {
  install_core_extensions(registry);
  registry.add_view<PlainFailure>("v", markers::exception_view, [](const PlainFailure&, const ViewBuilder& v) {
    return v.text().title("V").text([] { return "x"; });
  });
  registry.add_action<PlainFailure>("resume_with_42", markers::exception_action,
                                    [](const PlainFailure&, const ActionBuilder& a, ExecutionContext&) -> ActionSpec {
                                      return a.button().label("Answer").id("answer").priority(2).action(
                                          [](ExecutionContext& context) {
                                            context.resume_and_close(Value(42));
                                            return ActionResult{ActionStatus::resumed, "42"};
                                          });
                                    });
  registry.add_action<PlainFailure>("restart", markers::exception_action,
                                    [](const PlainFailure&, const ActionBuilder& a, ExecutionContext&) -> ActionSpec {
                                      return a.button().label("Again").id("again").priority(1).action(
                                          [](ExecutionContext& context) {
                                            restart_top_frame(context);
                                            return ActionResult{ActionStatus::retried, ""};
                                          });
                                    });
  registry.add_action<PlainFailure>("hidden", markers::exception_action,
                                    [](const PlainFailure&, const ActionBuilder& a, ExecutionContext&) {
                                      return a.no_action();
                                    });
  registry.add_action<PlainFailure>("throws", markers::exception_action,
                                    [](const PlainFailure&, const ActionBuilder& a, ExecutionContext&) -> ActionSpec {
                                      return a.button().label("Throw").id("throw").priority(3).action(
                                          [](ExecutionContext&) -> ActionResult {
                                            throw std::runtime_error("action broke");
                                          });
                                    });
}

}  // namespace

TEST_CASE("the session state machine moves open to exactly one terminal state") {
  const SessionState states[] = {SessionState::open, SessionState::resumed, SessionState::retried,
                                 SessionState::closed};
  const ControlEvent events[] = {ControlEvent::restart, ControlEvent::resume, ControlEvent::close};
  for (auto s : states) {
    for (auto e : events) {
      const auto next = next_state(s, e);
      CHECK(next.has_value() == (s == SessionState::open));
      if (next) CHECK(is_terminal(*next));
    }
  }
  CHECK(next_state(SessionState::open, ControlEvent::restart) == SessionState::retried);
  CHECK(next_state(SessionState::open, ControlEvent::resume) == SessionState::resumed);
  CHECK(next_state(SessionState::open, ControlEvent::close) == SessionState::closed);
}

TEST_CASE("terminal sessions refuse further controls and keep their state") {
  Registry registry;
  auto session = open_session(registry, PlainFailure("x"));
  session->close();
  CHECK(session->state() == SessionState::closed);
  CHECK_THROWS_AS(session->resume_and_close(), FrameworkError);
  CHECK_THROWS_AS(session->restart_top_frame(), FrameworkError);
  CHECK(session->state() == SessionState::closed);
}

TEST_CASE("non-restartable sessions refuse restart but stay open") {
  Registry registry;
  auto session = open_session(registry, PlainFailure("x"), false);
  try {
    session->restart_top_frame();
    FAIL("expected not_restartable");
  } catch (const FrameworkError& e) {
    CHECK(e.code() == ErrorCode::not_restartable);
  }
  CHECK(session->state() == SessionState::open);
}

TEST_CASE("view contexts carry no execution controls") {
  Registry registry;
  auto session = open_session(registry, PlainFailure("x"));
  ExecutionContext* view_context = session->view_context();
  CHECK_FALSE(view_context->permits(Control::restart_top));
  CHECK_FALSE(view_context->permits(Control::resume_close));
  CHECK_THROWS_AS(view_context->resume_and_close(), FrameworkError);
  CHECK(session->state() == SessionState::open);
  auto action_context = session->action_context();
  CHECK(action_context.permits(Control::restart_top));
  CHECK(action_context.permits(Control::retry_entry));
}

TEST_CASE("actions are collected by priority and invoked by id") {
  Registry registry;
  install_actions(registry);
  auto session = open_session(registry, PlainFailure("x"));
  const auto actions = session->collect_actions();
  REQUIRE(actions.size() == 3);
  CHECK(actions[0].id == "again");
  CHECK(actions[1].id == "answer");
  CHECK(actions[2].id == "throw");
  CHECK(actions[1].source_ref == "PlainFailure>>resume_with_42");

  const auto failed = session->invoke_action("throw");
  CHECK(failed.status == ActionStatus::error);
  CHECK(session->state() == SessionState::open);

  try {
    session->invoke_action("nope");
    FAIL("expected no_such_action");
  } catch (const FrameworkError& e) {
    CHECK(e.code() == ErrorCode::no_such_action);
  }

  const auto result = session->invoke_action("answer");
  CHECK(result.status == ActionStatus::resumed);
  CHECK(session->state() == SessionState::resumed);
  CHECK(session->substitute() == Value(42));
  try {
    session->invoke_action("again");
    FAIL("expected illegal_state");
  } catch (const FrameworkError& e) {
    CHECK(e.code() == ErrorCode::illegal_state);
  }
}

TEST_CASE("reading views and actions leaves the session unchanged") {
  Registry registry;
  install_actions(registry);
  auto session = open_session(registry, PlainFailure("x"));
  const auto before = session->diagnostics();
  for (int i = 0; i < 3; ++i) {
    session->views(0);
    session->views(std::nullopt);
    session->collect_actions();
    session->action_preview("answer");
  }
  CHECK(session->state() == SessionState::open);
  CHECK(session->diagnostics() == before);
}

TEST_CASE("posted work runs on the serving thread until the session ends") {
  Registry registry;
  auto session = open_session(registry, PlainFailure("x"));
  std::thread::id served_on;
  std::thread client([&] {
    session->post([&] { served_on = std::this_thread::get_id(); });
    session->post([&] { session->resume_and_close(Value("done")); });
  });
  session->serve_until_terminal();
  client.join();
  CHECK(served_on == std::this_thread::get_id());
  CHECK(session->state() == SessionState::resumed);
  CHECK_FALSE(session->post([] {}));
}

TEST_CASE("the hub lists published sessions and waits for them") {
  Registry registry;
  SessionHub hub;
  CHECK(hub.list().empty());
  auto session = open_session(registry, PlainFailure("x"));
  std::thread publisher([&] { hub.publish(session); });
  auto found = hub.wait_for(std::chrono::seconds(5));
  publisher.join();
  REQUIRE(found);
  CHECK(found == session);
  CHECK(hub.find(session->id()) == session);
  CHECK(hub.find("missing") == nullptr);
  CHECK(session->summary()["state"] == "open");
  CHECK(session->summary()["exception_class"] == "PlainFailure");
}
