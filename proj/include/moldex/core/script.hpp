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

// View scripts: a tiny language for inspector view methods that live in
// source files and are re-read on every invocation, so rewriting the file
// rebinds the method. Example:
//
//   view items_view(view) {
//     if (!subject.has_items) { return view.empty(); }
//     return view.list("Items", 10, subject.items);
//   }

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "moldex/core/object.hpp"
#include "moldex/core/view.hpp"

namespace moldex::script {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  unsigned line = 0;
};

enum class ExprKind { identifier, metavariable, string, integer, boolean, member, call, negation };

struct Expr {
  ExprKind kind = ExprKind::identifier;
  /// Identifier/member/call name, metavariable name, or string contents.
  std::string text;
  long long number = 0;
  /// member/call: receiver first, then call arguments; negation: operand.
  std::vector<Expr> operands;
  Span span;
};

enum class StmtKind { if_, return_ };

struct Stmt {
  StmtKind kind = StmtKind::return_;
  Expr expr;  // condition or returned expression
  std::vector<Stmt> body;
  Span span;
};

struct Method {
  std::string name;
  std::string parameter;
  std::vector<Stmt> body;
  Span span;
};

struct Module {
  std::string source;
  std::vector<Method> methods;

  const Method* find(std::string_view name) const;
};

/// Throws FrameworkError(script_error) with a line number on bad input.
Module parse_module(std::string source);

/// Parses a single statement; `$name` metavariables are allowed.
Stmt parse_statement(std::string_view snippet);

std::string render(const Expr& expr);
std::string render(const Stmt& stmt);

using Bindings = std::map<std::string, const Expr*, std::less<>>;

/// Structural match of `pattern` against `target`. `$param` only matches the
/// method's builder parameter; other metavariables bind any expression and
/// must bind equal structures when repeated.
bool match(const Stmt& pattern, const Stmt& target, std::string_view parameter, Bindings& bindings);

/// Renders `pattern` with metavariables replaced by the source text they
/// were bound to.
std::string instantiate(const Stmt& pattern, const Bindings& bindings, std::string_view source);

/// Returned when a view method hands back the raw builder instead of a view.
struct BuilderReturned {};

using MethodResult = std::variant<ViewSpec, BuilderReturned>;

MethodResult evaluate(const Method& method, const Object& subject);

}  // namespace moldex::script
