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

#include "helpers.hpp"
#include "moldex/core/script.hpp"

using namespace moldex;
using namespace moldex::script;
using moldex::testing::Box;

namespace {

const char* source =
    "// inventory views\n"
    "view items_view(view) {\n"
    "  if (!subject.has_items) { return view.empty(); }\n"
    "  return view.list(\"Items\", 10, subject.items);\n"
    "}\n"
    "view raw(v) { return v; }\n"
    "view title_view(view) { return view.text(\"Title\", 1, subject.meta.title); }\n";

}  // namespace

TEST_CASE("modules parse into methods with statement spans") {
  const Module module = parse_module(source);
  REQUIRE(module.methods.size() == 3);
  const Method* items = module.find("items_view");
  REQUIRE(items != nullptr);
  CHECK(items->parameter == "view");
  REQUIRE(items->body.size() == 2);
  CHECK(items->body[0].kind == StmtKind::if_);
  CHECK(items->body[0].span.line == 3);
  CHECK(items->body[1].span.line == 4);
  const auto& ret = items->body[1];
  CHECK(module.source.substr(ret.span.begin, ret.span.end - ret.span.begin) ==
        "return view.list(\"Items\", 10, subject.items);");
  CHECK(render(ret) == "return view.list(\"Items\", 10, subject.items);");
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_module("view a(v) {\n  return v\n}\n");
    FAIL("expected a parse error");
  } catch (const FrameworkError& e) {
    CHECK(e.code() == ErrorCode::script_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_module("view a(v) { return \"open; }"), FrameworkError);
  CHECK_THROWS_AS(parse_module("return 1;"), FrameworkError);
}

TEST_CASE("evaluation follows conditions and reads subject attributes") {
  const Module module = parse_module(source);
  Box empty(Value{{"has_items", false}, {"items", Value::array()}});
  auto result = evaluate(*module.find("items_view"), empty);
  REQUIRE(std::holds_alternative<ViewSpec>(result));
  CHECK(std::get<ViewSpec>(result).is_empty());

  Box full(Value{{"has_items", true}, {"items", {"apple", "pear"}}});
  result = evaluate(*module.find("items_view"), full);
  const auto& spec = std::get<ViewSpec>(result);
  CHECK(spec.title() == "Items");
  CHECK(spec.priority() == 10);
  Registry registry;
  auto data = Materializer(registry).materialize(spec, full);
  REQUIRE(data);
  CHECK(data->body == Value::array({"apple", "pear"}));

  Box meta(Value{{"meta", {{"title", "Hello"}}}});
  auto titled = evaluate(*module.find("title_view"), meta);
  CHECK(Materializer(registry).materialize(std::get<ViewSpec>(titled), meta)->body == "Hello");
}

TEST_CASE("returning the builder itself is a distinct outcome") {
  const Module module = parse_module(source);
  auto result = evaluate(*module.find("raw"), Box());
  CHECK(std::holds_alternative<BuilderReturned>(result));
}

TEST_CASE("runtime errors name the problem") {
  const Module module = parse_module("view a(v) { return v.text(\"T\", 1, subject.missing); }\n"
                                     "view b(v) { return subject; }\n"
                                     "view c(v) { if (false) { return v; } }\n");
  CHECK_THROWS_WITH_AS(evaluate(module.methods[0], Box()), doctest::Contains("no attribute 'missing'"),
                       FrameworkError);
  CHECK_THROWS_AS(evaluate(module.methods[1], Box()), FrameworkError);
  CHECK_THROWS_WITH_AS(evaluate(module.methods[2], Box()), doctest::Contains("returned nothing"), FrameworkError);
}

TEST_CASE("patterns match structurally and bind metavariables") {
  const Module module = parse_module(source);
  const Method& items = *module.find("items_view");
  Bindings bindings;
  const Stmt pattern = parse_statement("return $param.list($title, $p, $items);");
  CHECK(match(pattern, items.body[1], items.parameter, bindings));
  REQUIRE(bindings.contains("title"));
  CHECK(render(*bindings.at("title")) == "\"Items\"");
  CHECK(instantiate(parse_statement("return $param.text($title, $p, $items);"), bindings, module.source) ==
        "return view.text(\"Items\", 10, subject.items);");

  Bindings none;
  CHECK_FALSE(match(parse_statement("return $param;"), items.body[1], items.parameter, none));
  Bindings other;
  // $param only matches the builder parameter's name.
  CHECK_FALSE(match(parse_statement("return $param.list($a, $b, $c);"), items.body[1], "v", other));
  Bindings repeated;
  CHECK_FALSE(match(parse_statement("return $x.list($y, $y, $z);"), items.body[1], items.parameter, repeated));
}
