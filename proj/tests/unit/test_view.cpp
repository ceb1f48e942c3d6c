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

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "moldex/core/diff.hpp"
#include "moldex/core/registry.hpp"
#include "moldex/core/view.hpp"

using namespace moldex;
using moldex::testing::Box;

namespace {

struct Node {
  std::string name;
  std::vector<std::shared_ptr<Node>> kids;
};

}  // namespace

TEST_CASE("empty specs materialize to nothing") {
  Registry registry;
  CHECK_FALSE(Materializer(registry).materialize(ViewSpec::empty(), Object()).has_value());
}

TEST_CASE("text and list views carry title, priority and body") {
  Registry registry;
  ViewBuilder view;
  auto text = Materializer(registry).materialize(view.text().title("T").priority(3).text([] { return "hi"; }),
                                                 Object());
  REQUIRE(text);
  CHECK(text->kind == ViewKind::text);
  CHECK(text->title == "T");
  CHECK(text->priority == 3);
  CHECK(text->body == "hi");

  auto list = Materializer(registry).materialize(
      view.list().title("L").items([] { return std::vector<std::string>{"a", "b"}; }), Object());
  REQUIRE(list);
  CHECK(list->body == Value::array({"a", "b"}));
}

TEST_CASE("non-empty views need a title") {
  try {
    ViewSpec spec = ViewBuilder().text().text([] { return "x"; });
    FAIL("expected invalid_view_spec");
  } catch (const FrameworkError& e) {
    CHECK(e.code() == ErrorCode::invalid_view_spec);
  }
  // Inside a registered view method the failure becomes an error view.
  Registry registry;
  registry.add_view<moldex::testing::Box>("untitled", markers::exception_view,
                                          [](const moldex::testing::Box&, const ViewBuilder& v) -> ViewSpec {
                                            return v.text().text([] { return "x"; });
                                          });
  const auto views = collect_views(moldex::testing::Box(), markers::exception_view, nullptr, registry);
  REQUIRE(views.size() == 1);
  CHECK(views[0].kind == ViewKind::error);
  CHECK(views[0].body["code"] == "invalid_view_spec");
}

TEST_CASE("columned lists extract one cell per column") {
  Registry registry;
  auto spec = ViewBuilder()
                  .columned_list<int>()
                  .title("Numbers")
                  .items([] { return std::vector<int>{1, 2}; })
                  .column("n", [](const int& n) { return std::to_string(n); })
                  .column("square", [](const int& n) { return std::to_string(n * n); });
  auto data = Materializer(registry).materialize(spec, Object());
  REQUIRE(data);
  CHECK(data->body["columns"] == Value::array({"n", "square"}));
  CHECK(data->body["rows"] == Value::parse(R"([["1","1"],["2","4"]])"));
}

TEST_CASE("trees stop at cycles") {
  Registry registry;
  auto root = std::make_shared<Node>(Node{"root", {}});
  auto child = std::make_shared<Node>(Node{"child", {}});
  root->kids.push_back(child);
  child->kids.push_back(root);
  auto spec = ViewBuilder()
                  .tree<std::shared_ptr<Node>>()
                  .title("Tree")
                  .roots([root] { return std::vector<std::shared_ptr<Node>>{root}; })
                  .children([](const std::shared_ptr<Node>& n) { return n->kids; })
                  .label([](const std::shared_ptr<Node>& n) { return NodeLabel{n->name, "passed", ""}; });
  auto data = Materializer(registry).materialize(spec, Object());
  REQUIRE(data);
  const auto& top = data->body[0];
  CHECK(top["label"] == "root");
  CHECK(top["children"][0]["label"] == "child");
  CHECK(top["children"][0]["children"][0]["label"] == "(cycle)");
  root->kids.clear();  // break the ownership cycle
}

TEST_CASE("diff views carry hunks and side labels") {
  Registry registry;
  auto spec = ViewBuilder().text_diff().title("D").left("old", [] { return "a\n"; }).right("new", [] {
    return "b\n";
  });
  auto data = Materializer(registry).materialize(spec, Object());
  REQUIRE(data);
  CHECK(data->kind == ViewKind::text_diff);
  CHECK(data->meta["left_label"] == "old");
  CHECK(data->meta["right_label"] == "new");
  CHECK(reconstruct_right(hunks_from_json(data->body)) == "b\n");
}

TEST_CASE("failing payloads become error views but strict materialization propagates") {
  Registry registry;
  auto spec = ViewBuilder().text().title("Boom").priority(4).text([]() -> std::string {
    throw std::runtime_error("no text");
  });
  auto data = Materializer(registry).materialize(spec, Object());
  REQUIRE(data);
  CHECK(data->kind == ViewKind::error);
  CHECK(data->title == "Boom");
  CHECK(data->body["code"] == "view_evaluation_error");
  CHECK_THROWS_AS(Materializer(registry).materialize_strict(spec, Object()), std::runtime_error);
}

TEST_CASE("forwarding uses the forwarder's title and priority and the target's body") {
  Registry registry;
  registry.add_view<Box>("inner", markers::inspector_view, [](const Box&, const ViewBuilder& v) {
    return v.text().title("Inner").priority(99).text([] { return "body"; });
  });
  auto box = std::make_shared<Box>();
  auto fwd = ViewBuilder().forward("Outer", 5, [box] { return box; }, "inner");
  auto data = Materializer(registry).materialize(fwd, Object());
  auto direct = Materializer(registry).materialize(
      ViewBuilder().text().title("Inner").priority(99).text([] { return "body"; }), *box);
  REQUIRE(data);
  REQUIRE(direct);
  CHECK(data->title == "Outer");
  CHECK(data->priority == 5);
  CHECK(data->body.dump() == direct->body.dump());
  CHECK(data->source_ref == "Box>>inner");
}

TEST_CASE("forward cycles are cut off") {
  Registry registry;
  auto box = std::make_shared<Box>();
  registry.add_view<Box>("loop", markers::inspector_view, [box](const Box&, const ViewBuilder& v) {
    return v.forward("Loop", 0, [box] { return box; }, "loop");
  });
  auto data = Materializer(registry).materialize(ViewBuilder().forward("Loop", 0, [box] { return box; }, "loop"),
                                                 Object());
  REQUIRE(data);
  CHECK(data->kind == ViewKind::error);
  CHECK(data->body["code"] == "forward_cycle");
}

TEST_CASE("unknown forward selectors are reported") {
  Registry registry;
  auto box = std::make_shared<Box>();
  auto data = Materializer(registry).materialize(ViewBuilder().forward("F", 0, [box] { return box; }, "missing"),
                                                 Object());
  REQUIRE(data);
  CHECK(data->body["code"] == "unknown_view_selector");
}

TEST_CASE("oversized bodies are truncated and flagged") {
  Registry registry;
  auto spec = ViewBuilder().text().title("Big").text([] { return std::string(300, 'x'); });
  auto data = Materializer(registry, 100).materialize(spec, Object());
  REQUIRE(data);
  CHECK(data->truncated);
  CHECK(data->body.dump().size() <= 100);
}

TEST_CASE("view data round-trips through JSON") {
  ViewData v;
  v.kind = ViewKind::list;
  v.title = "L";
  v.priority = 2;
  v.body = Value::array({"x"});
  v.source_ref = "Box>>l";
  Value json = v;
  CHECK(json["kind"] == "list");
  CHECK(json.get<ViewData>() == v);
}

TEST_CASE("sort_views orders by priority and keeps ties in input order") {
  // Every permutation of up to six views against a comparison oracle.
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> priorities(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) priorities[static_cast<std::size_t>(i)] = (i * 7) % 3;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<ViewData> views;
      for (int i : order) {
        ViewData v;
        v.title = std::to_string(i);
        v.priority = priorities[static_cast<std::size_t>(i)];
        views.push_back(v);
      }
      auto oracle = views;
      sort_views(views);
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        for (std::size_t j = i + 1; j < oracle.size(); ++j) {
          // Oracle: i must precede j iff priority(i) < priority(j), or equal and i came first.
          auto pos = [&](const ViewData& v) {
            return std::find_if(views.begin(), views.end(), [&](const ViewData& w) { return w.title == v.title; }) -
                   views.begin();
          };
          const bool before = oracle[i].priority <= oracle[j].priority;
          REQUIRE((pos(oracle[i]) < pos(oracle[j])) == before);
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}
