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

#include "moldex/core/exception.hpp"

namespace moldex {

std::string Exception::display_string() const { return class_info().name() + ": " + message_; }

const std::vector<CapturedFrame>& Exception::traceback() const {
  static const std::vector<CapturedFrame> none;
  return traceback_ ? *traceback_ : none;
}

void Exception::record_traceback(std::vector<CapturedFrame> frames) {
  traceback_ = std::make_shared<const std::vector<CapturedFrame>>(std::move(frames));
}

std::vector<CapturedFrame> capture_stack(const Exception& exception, std::size_t boundary_depth) {
  std::vector<CapturedFrame> frames;
  for (const auto& frame : exception.traceback()) {
    if (frame.depth < boundary_depth) continue;
    frames.push_back(frame);
    frames.back().index = frames.size() - 1;
  }
  return frames;
}

}  // namespace moldex
