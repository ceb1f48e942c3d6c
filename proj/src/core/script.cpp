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

#include "moldex/core/script.hpp"

#include <cctype>
#include <optional>

#include "moldex/core/errors.hpp"

namespace moldex::script {
namespace {

enum class Tok { ident, metavar, string, integer, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  long long number = 0;
  Span span;
};

[[noreturn]] void fail(unsigned line, const std::string& message) {
  throw FrameworkError(ErrorCode::script_error, "line " + std::to_string(line) + ": " + message);
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token t;
      t.span.begin = pos_;
      t.span.line = line_;
      if (pos_ >= src_.size()) {
        t.span.end = pos_;
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
        const bool meta = c == '$';
        if (meta) ++pos_;
        const auto start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          ++pos_;
        }
        if (pos_ == start) fail(line_, "expected a name after '$'");
        t.kind = meta ? Tok::metavar : Tok::ident;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        const auto start = pos_++;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        t.kind = Tok::integer;
        t.text = std::string(src_.substr(start, pos_ - start));
        t.number = std::stoll(t.text);
      } else if (c == '"') {
        ++pos_;
        t.kind = Tok::string;
        while (true) {
          if (pos_ >= src_.size() || src_[pos_] == '\n') fail(t.span.line, "unterminated string");
          char ch = src_[pos_++];
          if (ch == '"') break;
          if (ch == '\\') {
            if (pos_ >= src_.size()) fail(line_, "bad escape");
            const char esc = src_[pos_++];
            switch (esc) {
              case 'n': ch = '\n'; break;
              case 't': ch = '\t'; break;
              case '"': ch = '"'; break;
              case '\\': ch = '\\'; break;
              default: fail(line_, std::string("unknown escape \\") + esc);
            }
          }
          t.text.push_back(ch);
        }
      } else if (std::string_view("(){};,.!").find(c) != std::string_view::npos) {
        ++pos_;
        t.kind = Tok::punct;
        t.text = std::string(1, c);
      } else {
        fail(line_, std::string("unexpected character '") + c + "'");
      }
      t.span.end = pos_;
      out.push_back(std::move(t));
    }
  }

 private:
  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Method> module() {
    std::vector<Method> methods;
    while (peek().kind != Tok::end) methods.push_back(method());
    return methods;
  }

  Stmt single_statement() {
    Stmt s = statement();
    if (peek().kind != Tok::end) fail(peek().span.line, "trailing input after statement");
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }
  bool at_keyword(std::string_view kw) const { return peek().kind == Tok::ident && peek().text == kw; }

  const Token& expect_punct(char c) {
    if (!at_punct(c)) fail(peek().span.line, std::string("expected '") + c + "'");
    return advance();
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::ident) fail(peek().span.line, std::string("expected ") + what);
    return advance().text;
  }

  Method method() {
    Method m;
    m.span = peek().span;
    if (!at_keyword("view")) fail(peek().span.line, "expected 'view'");
    advance();
    m.name = expect_ident("method name");
    expect_punct('(');
    m.parameter = expect_ident("builder parameter");
    expect_punct(')');
    m.body = block();
    m.span.end = toks_[pos_ - 1].span.end;
    return m;
  }

  std::vector<Stmt> block() {
    expect_punct('{');
    std::vector<Stmt> body;
    while (!at_punct('}')) {
      if (peek().kind == Tok::end) fail(peek().span.line, "unterminated block");
      body.push_back(statement());
    }
    advance();
    return body;
  }

  Stmt statement() {
    Stmt s;
    s.span = peek().span;
    if (at_keyword("if")) {
      advance();
      s.kind = StmtKind::if_;
      expect_punct('(');
      s.expr = expression();
      expect_punct(')');
      s.body = block();
    } else if (at_keyword("return")) {
      advance();
      s.kind = StmtKind::return_;
      s.expr = expression();
      expect_punct(';');
    } else {
      fail(peek().span.line, "expected 'if' or 'return'");
    }
    s.span.end = toks_[pos_ - 1].span.end;
    return s;
  }

  Expr expression() {
    if (at_punct('!')) {
      Expr e;
      e.kind = ExprKind::negation;
      e.span = advance().span;
      e.operands.push_back(expression());
      e.span.end = e.operands.back().span.end;
      return e;
    }
    Expr e = primary();
    while (at_punct('.')) {
      advance();
      Expr next;
      next.span = e.span;
      next.text = expect_ident("member name");
      next.kind = ExprKind::member;
      next.operands.push_back(std::move(e));
      if (at_punct('(')) {
        advance();
        next.kind = ExprKind::call;
        if (!at_punct(')')) {
          next.operands.push_back(expression());
          while (at_punct(',')) {
            advance();
            next.operands.push_back(expression());
          }
        }
        expect_punct(')');
      }
      next.span.end = toks_[pos_ - 1].span.end;
      e = std::move(next);
    }
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    Expr e;
    e.span = t.span;
    switch (t.kind) {
      case Tok::ident:
        if (t.text == "true" || t.text == "false") {
          e.kind = ExprKind::boolean;
          e.number = t.text == "true";
        } else if (t.text == "if" || t.text == "return") {
          fail(t.span.line, "unexpected keyword '" + t.text + "'");
        } else {
          e.kind = ExprKind::identifier;
        }
        e.text = t.text;
        break;
      case Tok::metavar:
        e.kind = ExprKind::metavariable;
        e.text = t.text;
        break;
      case Tok::string:
        e.kind = ExprKind::string;
        e.text = t.text;
        break;
      case Tok::integer:
        e.kind = ExprKind::integer;
        e.number = t.number;
        e.text = t.text;
        break;
      case Tok::punct:
        if (t.text == "(") {
          advance();
          Expr inner = expression();
          expect_punct(')');
          return inner;
        }
        fail(t.span.line, "unexpected '" + t.text + "'");
      case Tok::end:
        fail(t.span.line, "unexpected end of input");
    }
    advance();
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.number != b.number || a.operands.size() != b.operands.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!same_structure(a.operands[i], b.operands[i])) return false;
  }
  return true;
}

bool match_expr(const Expr& pattern, const Expr& target, std::string_view parameter, Bindings& bindings) {
  if (pattern.kind == ExprKind::metavariable) {
    if (pattern.text == "param") {
      if (target.kind != ExprKind::identifier || target.text != parameter) return false;
      bindings.emplace(pattern.text, &target);
      return true;
    }
    auto it = bindings.find(pattern.text);
    if (it != bindings.end()) return same_structure(*it->second, target);
    bindings.emplace(pattern.text, &target);
    return true;
  }
  if (pattern.kind != target.kind || pattern.text != target.text || pattern.number != target.number ||
      pattern.operands.size() != target.operands.size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.operands.size(); ++i) {
    if (!match_expr(pattern.operands[i], target.operands[i], parameter, bindings)) return false;
  }
  return true;
}

std::string render_expr(const Expr& e, const Bindings* bindings, std::string_view source) {
  switch (e.kind) {
    case ExprKind::identifier:
    case ExprKind::boolean:
    case ExprKind::integer:
      return e.text;
    case ExprKind::metavariable:
      if (bindings != nullptr) {
        if (auto it = bindings->find(e.text); it != bindings->end()) {
          const Span& s = it->second->span;
          return std::string(source.substr(s.begin, s.end - s.begin));
        }
      }
      return "$" + e.text;
    case ExprKind::string:
      return quote(e.text);
    case ExprKind::member:
      return render_expr(e.operands[0], bindings, source) + "." + e.text;
    case ExprKind::call: {
      std::string out = render_expr(e.operands[0], bindings, source) + "." + e.text + "(";
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        if (i > 1) out += ", ";
        out += render_expr(e.operands[i], bindings, source);
      }
      return out + ")";
    }
    case ExprKind::negation:
      return "!" + render_expr(e.operands[0], bindings, source);
  }
  return {};
}

std::string render_stmt(const Stmt& s, const Bindings* bindings, std::string_view source) {
  if (s.kind == StmtKind::return_) return "return " + render_expr(s.expr, bindings, source) + ";";
  std::string out = "if (" + render_expr(s.expr, bindings, source) + ") {";
  for (const auto& inner : s.body) out += " " + render_stmt(inner, bindings, source);
  return out + " }";
}

// ---- evaluation ----

struct BuilderValue {};
struct SubjectValue {};
using Runtime = std::variant<BuilderValue, SubjectValue, ViewSpec, Value>;

class Evaluator {
 public:
  Evaluator(const Method& method, const Object& subject) : method_(method), subject_(subject) {}

  MethodResult run() {
    if (auto result = exec(method_.body)) return *result;
    fail(method_.span.line, "view method " + method_.name + " returned nothing");
  }

 private:
  std::optional<MethodResult> exec(const std::vector<Stmt>& body) {
    for (const auto& s : body) {
      if (s.kind == StmtKind::if_) {
        if (truthy(as_value(eval(s.expr), s.expr))) {
          if (auto r = exec(s.body)) return r;
        }
        continue;
      }
      Runtime value = eval(s.expr);
      if (std::holds_alternative<BuilderValue>(value)) return MethodResult(BuilderReturned{});
      if (auto* spec = std::get_if<ViewSpec>(&value)) return MethodResult(std::move(*spec));
      fail(s.span.line, "view methods must return a view");
    }
    return std::nullopt;
  }

  static bool truthy(const Value& v) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_null()) return false;
    if (v.is_number()) return v.get<double>() != 0.0;
    if (v.is_string()) return !v.get<std::string>().empty();
    return !v.empty();
  }

  Value as_value(Runtime r, const Expr& at) {
    if (auto* v = std::get_if<Value>(&r)) return std::move(*v);
    fail(at.span.line, "expected a plain value in '" + render(at) + "'");
  }

  std::string as_string(Runtime r, const Expr& at) {
    Value v = as_value(std::move(r), at);
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  Runtime eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::identifier:
        if (e.text == method_.parameter) return BuilderValue{};
        if (e.text == "subject") return SubjectValue{};
        fail(e.span.line, "unknown identifier '" + e.text + "'");
      case ExprKind::metavariable:
        fail(e.span.line, "metavariables are only allowed in patterns");
      case ExprKind::string: return Value(e.text);
      case ExprKind::integer: return Value(e.number);
      case ExprKind::boolean: return Value(e.number != 0);
      case ExprKind::negation: return Value(!truthy(as_value(eval(e.operands[0]), e.operands[0])));
      case ExprKind::member: {
        Runtime receiver = eval(e.operands[0]);
        if (std::holds_alternative<SubjectValue>(receiver)) {
          auto attr = subject_.attribute(e.text);
          if (!attr) fail(e.span.line, subject_.class_info().name() + " has no attribute '" + e.text + "'");
          return *attr;
        }
        if (auto* v = std::get_if<Value>(&receiver); v != nullptr && v->is_object() && v->contains(e.text)) {
          return (*v)[e.text];
        }
        fail(e.span.line, "no member '" + e.text + "'");
      }
      case ExprKind::call: return call(e);
    }
    fail(e.span.line, "unsupported expression");
  }

  Runtime call(const Expr& e) {
    Runtime receiver = eval(e.operands[0]);
    if (!std::holds_alternative<BuilderValue>(receiver)) {
      fail(e.span.line, "only the view builder has methods ('" + e.text + "')");
    }
    const std::size_t argc = e.operands.size() - 1;
    auto arg = [&](std::size_t i) -> const Expr& { return e.operands[i + 1]; };
    ViewBuilder builder;
    if (e.text == "empty") {
      if (argc != 0) fail(e.span.line, "empty() takes no arguments");
      return builder.empty();
    }
    if (e.text == "text" || e.text == "list") {
      if (argc != 3) fail(e.span.line, e.text + "(title, priority, content) takes 3 arguments");
      const std::string title = as_string(eval(arg(0)), arg(0));
      const Value priority = as_value(eval(arg(1)), arg(1));
      if (!priority.is_number_integer()) fail(arg(1).span.line, "priority must be an integer");
      Value content = as_value(eval(arg(2)), arg(2));
      if (e.text == "text") {
        std::string text = content.is_string() ? content.get<std::string>() : content.dump();
        return builder.text().title(title).priority(priority.get<int>()).text([text] { return text; }).build();
      }
      std::vector<std::string> items;
      if (!content.is_array()) fail(arg(2).span.line, "list content must be an array");
      for (const auto& item : content) items.push_back(item.is_string() ? item.get<std::string>() : item.dump());
      return builder.list().title(title).priority(priority.get<int>()).items([items] { return items; }).build();
    }
    fail(e.span.line, "unknown builder method '" + e.text + "'");
  }

  const Method& method_;
  const Object& subject_;
};

}  // namespace

const Method* Module::find(std::string_view name) const {
  for (const auto& m : methods) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

Module parse_module(std::string source) {
  Module module;
  module.methods = Parser(Lexer(source).run()).module();
  module.source = std::move(source);
  return module;
}

Stmt parse_statement(std::string_view snippet) { return Parser(Lexer(snippet).run()).single_statement(); }

std::string render(const Expr& expr) { return render_expr(expr, nullptr, {}); }
std::string render(const Stmt& stmt) { return render_stmt(stmt, nullptr, {}); }

bool match(const Stmt& pattern, const Stmt& target, std::string_view parameter, Bindings& bindings) {
  if (pattern.kind != target.kind || pattern.body.size() != target.body.size()) return false;
  if (!match_expr(pattern.expr, target.expr, parameter, bindings)) return false;
  for (std::size_t i = 0; i < pattern.body.size(); ++i) {
    if (!match(pattern.body[i], target.body[i], parameter, bindings)) return false;
  }
  return true;
}

std::string instantiate(const Stmt& pattern, const Bindings& bindings, std::string_view source) {
  return render_stmt(pattern, &bindings, source);
}

MethodResult evaluate(const Method& method, const Object& subject) { return Evaluator(method, subject).run(); }

}  // namespace moldex::script
