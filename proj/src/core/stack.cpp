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

#include "moldex/core/stack.hpp"

#include <cstring>

namespace moldex {
namespace {

thread_local std::vector<FrameScope*> live_frames;

}  // namespace

const std::string* CapturedFrame::local(std::string_view name) const {
  for (const auto& [key, value] : locals) {
    if (key == name) return &value;
  }
  return nullptr;
}

Value to_json_value(const CapturedFrame& frame) {
  Value locals = Value::object();
  for (const auto& [key, value] : frame.locals) locals[key] = value;
  return {{"index", frame.index},
          {"function_name", frame.function_name},
          {"source_ref", {{"file", frame.file}, {"line", frame.line}}},
          {"locals", std::move(locals)},
          {"restartable", frame.restartable}};
}

std::string truncate_rendering(std::string text, std::size_t limit) {
  if (text.size() <= limit) return text;
  std::size_t cut = limit;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
  text.resize(cut);
  text += "...";
  return text;
}

FrameScope::FrameScope(std::string function_name, std::source_location where)
    : function_name_(std::move(function_name)), where_(where) {
  live_frames.push_back(this);
}

FrameScope::~FrameScope() {
  // Scopes are strictly nested, so this is the top entry.
  if (!live_frames.empty() && live_frames.back() == this) live_frames.pop_back();
}

std::size_t shadow_stack_depth() noexcept { return live_frames.size(); }

std::vector<CapturedFrame> capture_live_stack(std::optional<std::source_location> raise_site) {
  std::vector<CapturedFrame> frames;
  frames.reserve(live_frames.size());
  for (std::size_t i = live_frames.size(); i-- > 0;) {
    const FrameScope& scope = *live_frames[i];
    CapturedFrame frame;
    frame.index = frames.size();
    frame.function_name = scope.function_name_;
    frame.file = scope.where_.file_name();
    frame.line = scope.where_.line();
    frame.depth = i;
    for (const auto& [name, render] : scope.locals_) {
      std::string rendered;
      try {
        rendered = render();
      } catch (const std::exception& e) {
        rendered = std::string("<unrenderable: ") + e.what() + ">";
      }
      frame.locals.emplace_back(name, truncate_rendering(std::move(rendered)));
    }
    frames.push_back(std::move(frame));
  }
  if (raise_site && !frames.empty() && std::strcmp(raise_site->file_name(), frames.front().file.c_str()) == 0) {
    frames.front().line = raise_site->line();
  }
  return frames;
}

}  // namespace moldex
