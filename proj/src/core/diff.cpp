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

#include "moldex/core/diff.hpp"

#include <cctype>

#include "moldex/core/errors.hpp"

namespace moldex {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void append(std::vector<Hunk>& out, DiffOp op, std::string_view text) {
  if (text.empty()) return;
  if (!out.empty() && out.back().op == op) {
    out.back().text.append(text);
  } else {
    out.push_back({op, std::string(text)});
  }
}

std::string join(std::span<const std::string_view> parts) {
  std::string out;
  for (auto p : parts) out.append(p);
  return out;
}

void refine_block(std::vector<Hunk>& out, std::span<const std::string_view> removed,
                  std::span<const std::string_view> added) {
  const std::string left = join(removed);
  const std::string right = join(added);
  const auto lw = split_words(left);
  const auto rw = split_words(right);
  for (const auto& e : myers_diff<std::string_view>(lw, rw)) {
    switch (e.op) {
      case DiffOp::eq: append(out, DiffOp::eq, lw[e.left]); break;
      case DiffOp::del: append(out, DiffOp::del, lw[e.left]); break;
      case DiffOp::ins: append(out, DiffOp::ins, rw[e.right]); break;
    }
  }
}

}  // namespace

std::string_view to_string(DiffOp op) noexcept {
  switch (op) {
    case DiffOp::eq: return "eq";
    case DiffOp::ins: return "ins";
    case DiffOp::del: return "del";
  }
  return "eq";
}

DiffOp diff_op_from_string(std::string_view text) {
  if (text == "eq") return DiffOp::eq;
  if (text == "ins") return DiffOp::ins;
  if (text == "del") return DiffOp::del;
  throw FrameworkError(ErrorCode::invalid_argument, "unknown diff op: " + std::string(text));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    auto end = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back(text.substr(start, end - start));
    start = end;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t start = 0;
  while (start < text.size()) {
    const bool space = is_space(text[start]);
    std::size_t end = start + 1;
    while (end < text.size() && is_space(text[end]) == space) ++end;
    words.push_back(text.substr(start, end - start));
    start = end;
  }
  return words;
}

std::vector<Hunk> compute_text_diff(std::string_view left, std::string_view right) {
  const auto ll = split_lines(left);
  const auto rl = split_lines(right);
  const auto script = myers_diff<std::string_view>(ll, rl);

  std::vector<Hunk> out;
  std::vector<std::string_view> removed;
  std::vector<std::string_view> added;
  auto flush = [&] {
    if (!removed.empty() && !added.empty()) {
      refine_block(out, removed, added);
    } else {
      for (auto l : removed) append(out, DiffOp::del, l);
      for (auto l : added) append(out, DiffOp::ins, l);
    }
    removed.clear();
    added.clear();
  };

  for (const auto& e : script) {
    switch (e.op) {
      case DiffOp::eq:
        flush();
        append(out, DiffOp::eq, ll[e.left]);
        break;
      case DiffOp::del: removed.push_back(ll[e.left]); break;
      case DiffOp::ins: added.push_back(rl[e.right]); break;
    }
  }
  flush();
  return out;
}

std::string reconstruct_left(std::span<const Hunk> hunks) {
  std::string out;
  for (const auto& h : hunks) {
    if (h.op != DiffOp::ins) out += h.text;
  }
  return out;
}

std::string reconstruct_right(std::span<const Hunk> hunks) {
  std::string out;
  for (const auto& h : hunks) {
    if (h.op != DiffOp::del) out += h.text;
  }
  return out;
}

nlohmann::json hunks_to_json(std::span<const Hunk> hunks) {
  auto body = nlohmann::json::array();
  for (const auto& h : hunks) body.push_back({{"op", to_string(h.op)}, {"text", h.text}});
  return body;
}

std::vector<Hunk> hunks_from_json(const nlohmann::json& body) {
  std::vector<Hunk> hunks;
  for (const auto& item : body) {
    hunks.push_back({diff_op_from_string(item.at("op").get<std::string>()), item.at("text").get<std::string>()});
  }
  return hunks;
}

}  // namespace moldex
