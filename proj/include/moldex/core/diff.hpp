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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace moldex {

enum class DiffOp { eq, ins, del };

std::string_view to_string(DiffOp op) noexcept;
DiffOp diff_op_from_string(std::string_view text);

struct Hunk {
  DiffOp op;
  std::string text;

  bool operator==(const Hunk&) const = default;
};

/// One step of an edit script. `left` is meaningful for eq/del, `right` for
/// eq/ins.
struct Edit {
  DiffOp op;
  std::size_t left;
  std::size_t right;
};

/// Shortest edit script between two sequences (Myers' greedy O((N+M)D)
/// algorithm). The number of eq steps equals the LCS length.
template <class T, class Equal = std::equal_to<>>
std::vector<Edit> myers_diff(std::span<const T> a, std::span<const T> b, Equal equal = {}) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const auto m = static_cast<std::ptrdiff_t>(b.size());
  const std::ptrdiff_t max = n + m;
  const std::ptrdiff_t offset = max + 1;
  std::vector<std::ptrdiff_t> v(static_cast<std::size_t>(2 * max + 3), 0);
  std::vector<std::vector<std::ptrdiff_t>> trace;

  auto at = [&](std::vector<std::ptrdiff_t>& vec, std::ptrdiff_t k) -> std::ptrdiff_t& {
    return vec[static_cast<std::size_t>(k + offset)];
  };

  bool done = false;
  for (std::ptrdiff_t d = 0; d <= max && !done; ++d) {
    trace.push_back(v);
    for (std::ptrdiff_t k = -d; k <= d; k += 2) {
      std::ptrdiff_t x;
      if (k == -d || (k != d && at(v, k - 1) < at(v, k + 1))) {
        x = at(v, k + 1);
      } else {
        x = at(v, k - 1) + 1;
      }
      std::ptrdiff_t y = x - k;
      while (x < n && y < m && equal(a[static_cast<std::size_t>(x)], b[static_cast<std::size_t>(y)])) {
        ++x;
        ++y;
      }
      at(v, k) = x;
      if (x >= n && y >= m) {
        done = true;
        break;
      }
    }
  }

  std::vector<Edit> script;
  std::ptrdiff_t x = n;
  std::ptrdiff_t y = m;
  for (auto d = static_cast<std::ptrdiff_t>(trace.size()) - 1; d >= 0; --d) {
    auto& vd = trace[static_cast<std::size_t>(d)];
    const std::ptrdiff_t k = x - y;
    std::ptrdiff_t prev_k;
    if (k == -d || (k != d && at(vd, k - 1) < at(vd, k + 1))) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    const std::ptrdiff_t prev_x = at(vd, prev_k);
    const std::ptrdiff_t prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      --x;
      --y;
      script.push_back({DiffOp::eq, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
    if (d > 0) {
      if (x == prev_x) {
        script.push_back({DiffOp::ins, static_cast<std::size_t>(x), static_cast<std::size_t>(prev_y)});
      } else {
        script.push_back({DiffOp::del, static_cast<std::size_t>(prev_x), static_cast<std::size_t>(y)});
      }
    }
    x = prev_x;
    y = prev_y;
  }
  std::reverse(script.begin(), script.end());
  return script;
}

/// Splits text into lines, each keeping its trailing newline.
std::vector<std::string_view> split_lines(std::string_view text);

/// Splits text into alternating runs of whitespace and non-whitespace.
std::vector<std::string_view> split_words(std::string_view text);

/// Line-level diff with word-level refinement inside replaced line blocks.
/// Adjacent hunks never share an op.
std::vector<Hunk> compute_text_diff(std::string_view left, std::string_view right);

std::string reconstruct_left(std::span<const Hunk> hunks);
std::string reconstruct_right(std::span<const Hunk> hunks);

nlohmann::json hunks_to_json(std::span<const Hunk> hunks);
std::vector<Hunk> hunks_from_json(const nlohmann::json& body);

}  // namespace moldex
