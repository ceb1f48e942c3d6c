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

#include <climits>

#include "helpers.hpp"

using namespace moldex;
using moldex::testing::HardFailure;
using moldex::testing::open_session;
using moldex::testing::PlainFailure;

TEST_CASE("a plain exception resolves to exactly the default specification") {
  Registry registry;
  install_core_extensions(registry);
  auto session = open_session(registry, PlainFailure("plain"));
  const auto& set = session->resolved();
  REQUIRE(set.found.size() == 1);
  CHECK(set.found[0].title == "Moldable Exception");
  CHECK(set.found[0].priority == 50);
  CHECK(set.found[0].view_markers == std::vector<Marker>{markers::exception_view});
  // No exception views: the default spec is found but not active.
  CHECK(set.active.empty());
  CHECK_FALSE(set.shown_by_default.has_value());
  CHECK(set.fallback.client_kind == generic_stack_kind);
  CHECK(set.fallback.priority == INT_MAX);
}

TEST_CASE("the default specification activates once the exception has views") {
  Registry registry;
  install_core_extensions(registry);
  registry.add_view<PlainFailure>("v", markers::exception_view, [](const PlainFailure&, const ViewBuilder& v) {
    return v.text().title("V").text([] { return "x"; });
  });
  auto session = open_session(registry, PlainFailure("p"));
  REQUIRE(session->resolved().active.size() == 1);
  CHECK(session->resolved().shown_by_default == 0u);
  CHECK(session->views(0).at(0).title == "V");
}

TEST_CASE("active specs order by priority; unavailable ones are never shown by default") {
  Registry registry;
  install_core_extensions(registry);
  registry.add_view<PlainFailure>("v", markers::exception_view, [](const PlainFailure&, const ViewBuilder& v) {
    return v.text().title("V").text([] { return "x"; });
  });
  registry.add_specification<PlainFailure>("manual", [](const PlainFailure&, const ObjectRef&) {
    DebuggerSpecification spec;
    spec.title = "Manual";
    spec.priority = 1;
    spec.available_automatically = false;
    return spec;
  });
  registry.add_specification<PlainFailure>("auto", [](const PlainFailure&, const ObjectRef&) {
    DebuggerSpecification spec;
    spec.title = "Auto";
    spec.priority = 20;
    return spec;
  });
  auto session = open_session(registry, PlainFailure("p"));
  const auto& set = session->resolved();
  CHECK(set.found.size() == 3);
  REQUIRE(set.active.size() == 3);
  CHECK(set.active_spec(0).title == "Manual");
  CHECK(set.active_spec(1).title == "Auto");
  CHECK(set.active_spec(2).title == "Moldable Exception");
  CHECK(set.shown_by_default == 1u);
}

TEST_CASE("failing predicates and specification methods fail closed with diagnostics") {
  Registry registry;
  install_core_extensions(registry);
  registry.add_specification<HardFailure>("broken", [](const HardFailure&, const ObjectRef&) -> DebuggerSpecification {
    throw std::runtime_error("cannot build");
  });
  registry.add_specification<HardFailure>("throwing_predicate", [](const HardFailure&, const ObjectRef&) {
    DebuggerSpecification spec;
    spec.title = "Predicate";
    spec.activation_predicate = [](const DebugSession&) -> bool { throw std::runtime_error("predicate broke"); };
    return spec;
  });
  auto session = open_session(registry, HardFailure("h"));
  const auto& set = session->resolved();
  CHECK(set.found.size() == 2);
  CHECK(set.active.empty());
  const auto& diagnostics = session->diagnostics();
  REQUIRE(diagnostics.size() == 2);
  CHECK(diagnostics[0].find("cannot build") != std::string::npos);
  CHECK(diagnostics[1].find("predicate broke") != std::string::npos);
}

TEST_CASE("debugging targets default to the exception and may be replaced") {
  Registry registry;
  auto box = std::make_shared<moldex::testing::Box>();
  registry.add_view<moldex::testing::Box>("box_view", Marker("box_marker"),
                                          [](const moldex::testing::Box&, const ViewBuilder& v) {
                                            return v.text().title("Box").text([] { return "in a box"; });
                                          });
  registry.add_specification<PlainFailure>("boxed", [box](const PlainFailure&, const ObjectRef&) {
    DebuggerSpecification spec;
    spec.title = "Boxed";
    spec.view_markers = {Marker("box_marker")};
    spec.debugging_targets = [box] { return std::vector<ObjectRef>{box}; };
    return spec;
  });
  auto session = open_session(registry, PlainFailure("p"));
  REQUIRE(session->resolved().active.size() == 1);
  CHECK(session->views(0).at(0).title == "Box");
  DebuggerSpecification plain;
  CHECK(debugging_targets_of(plain, session->exception_ref()).at(0).get() == &session->exception());
}

TEST_CASE("the generic stack fallback shows message and frames") {
  Registry registry;
  auto session = open_session(registry, PlainFailure("fallback"));
  const auto views = session->views(std::nullopt);
  REQUIRE(views.size() == 2);
  CHECK(views[0].title == "Exception");
  CHECK(views[0].body == "PlainFailure: fallback");
  CHECK(views[1].title == "Stack");
  CHECK(views[1].body["columns"] == Value::array({"#", "Function", "Source"}));
}

TEST_CASE("resolved sets serialize found, active, default and fallback") {
  Registry registry;
  install_core_extensions(registry);
  auto session = open_session(registry, PlainFailure("p"));
  const auto json = to_json_value(session->resolved());
  CHECK(json["found"].size() == 1);
  CHECK(json["active"].empty());
  CHECK(json["default"].is_null());
  CHECK(json["fallback"]["client_kind"] == "generic_stack");
}
