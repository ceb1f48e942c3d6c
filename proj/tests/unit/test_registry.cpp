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

#include <limits>

#include "helpers.hpp"

using namespace moldex;
using moldex::testing::HardFailure;
using moldex::testing::PlainFailure;

namespace {

ViewSpec titled(const ViewBuilder& v, std::string title, int priority) {
  return v.text().title(std::move(title)).priority(priority).text([] { return "x"; });
}

}  // namespace

TEST_CASE("the most derived method of a name wins") {
  Registry registry;
  registry.add_view<Exception>("summary", markers::exception_view,
                               [](const Exception&, const ViewBuilder& v) { return titled(v, "base", 1); });
  registry.add_view<PlainFailure>("summary", markers::exception_view,
                                  [](const PlainFailure&, const ViewBuilder& v) { return titled(v, "derived", 1); });
  registry.add_view<Exception>("details", markers::exception_view,
                               [](const Exception&, const ViewBuilder& v) { return titled(v, "details", 2); });

  PlainFailure failure("x");
  const auto methods = registry.collect(failure.class_info(), markers::exception_view);
  REQUIRE(methods.size() == 2);
  CHECK(methods[0]->qualified_name() == "PlainFailure>>summary");
  CHECK(methods[1]->qualified_name() == "Exception>>details");

  const auto views = collect_views(failure, markers::exception_view, nullptr, registry);
  REQUIRE(views.size() == 2);
  CHECK(views[0].title == "derived");
  CHECK(views[1].title == "details");
  CHECK(views[0].source_ref == "PlainFailure>>summary");
}

TEST_CASE("markers separate method tables") {
  Registry registry;
  registry.add_view<Exception>("v", markers::inspector_view,
                               [](const Exception&, const ViewBuilder& v) { return titled(v, "inspector", 0); });
  PlainFailure failure("x");
  CHECK(registry.collect(failure.class_info(), markers::exception_view).empty());
  CHECK(registry.collect(failure.class_info(), markers::inspector_view).size() == 1);
}

TEST_CASE("duplicate registrations are rejected") {
  Registry registry;
  auto fn = [](const Exception&, const ViewBuilder& v) { return v.empty(); };
  registry.add_view<Exception>("v", markers::exception_view, fn);
  try {
    registry.add_view<Exception>("v", markers::exception_view, fn);
    FAIL("expected duplicate_registration");
  } catch (const FrameworkError& e) {
    CHECK(e.code() == ErrorCode::duplicate_registration);
  }
}

TEST_CASE("failing view methods become error views at the end") {
  Registry registry;
  registry.add_view<Exception>("bad", markers::exception_view, [](const Exception&, const ViewBuilder&) -> ViewSpec {
    throw std::runtime_error("broken view");
  });
  registry.add_view<Exception>("good", markers::exception_view,
                               [](const Exception&, const ViewBuilder& v) { return titled(v, "good", 100); });
  registry.add_view<Exception>("nothing", markers::exception_view,
                               [](const Exception&, const ViewBuilder& v) { return v.empty(); });
  HardFailure failure("x");
  const auto views = collect_views(failure, markers::exception_view, nullptr, registry);
  REQUIRE(views.size() == 2);
  CHECK(views[0].title == "good");
  CHECK(views[1].kind == ViewKind::error);
  CHECK(views[1].priority == std::numeric_limits<int>::max());
  CHECK(views[1].body["message"] == "broken view");
}

TEST_CASE("find_view prefers inspector views") {
  Registry registry;
  registry.add_view<Exception>("shared", markers::exception_view,
                               [](const Exception&, const ViewBuilder& v) { return titled(v, "exception", 0); });
  registry.add_view<Exception>("shared", markers::inspector_view,
                               [](const Exception&, const ViewBuilder& v) { return titled(v, "inspector", 0); });
  const auto* found = registry.find_view(PlainFailure::klass(), "shared");
  REQUIRE(found != nullptr);
  CHECK(found->marker == markers::inspector_view);
  CHECK(registry.find_view(PlainFailure::klass(), "missing") == nullptr);
}

TEST_CASE("install tags are recorded once") {
  Registry registry;
  CHECK(registry.mark_installed("pack"));
  CHECK_FALSE(registry.mark_installed("pack"));
}
