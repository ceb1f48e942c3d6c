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
#include <random>

#include "moldex/core/diff.hpp"

using namespace moldex;

namespace {

std::size_t lcs_length(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1 : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

void check_script(const std::vector<int>& a, const std::vector<int>& b) {
  const auto script = myers_diff<int>(a, b);
  std::vector<int> left, right;
  std::size_t eq = 0;
  for (const auto& e : script) {
    if (e.op != DiffOp::ins) left.push_back(a.at(e.left));
    if (e.op != DiffOp::del) right.push_back(b.at(e.right));
    if (e.op == DiffOp::eq) {
      ++eq;
      REQUIRE(a[e.left] == b[e.right]);
    }
  }
  REQUIRE(left == a);
  REQUIRE(right == b);
  REQUIRE(eq == lcs_length(a, b));
}

}  // namespace

TEST_CASE("myers diff is minimal on random sequences") {
  std::mt19937 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::vector<int> a(rng() % 15), b(rng() % 15);
    for (auto& x : a) x = static_cast<int>(rng() % 4);
    for (auto& x : b) x = static_cast<int>(rng() % 4);
    check_script(a, b);
  }
}

TEST_CASE("myers diff handles empty sides") {
  check_script({}, {});
  check_script({1, 2}, {});
  check_script({}, {3});
}

TEST_CASE("text diff marks a changed word inside a changed line") {
  const auto hunks = compute_text_diff("the quick fox\nsame\n", "the slow fox\nsame\n");
  CHECK(reconstruct_left(hunks) == "the quick fox\nsame\n");
  CHECK(reconstruct_right(hunks) == "the slow fox\nsame\n");
  const std::vector<Hunk> expected = {
      {DiffOp::eq, "the "}, {DiffOp::del, "quick"}, {DiffOp::ins, "slow"}, {DiffOp::eq, " fox\nsame\n"}};
  CHECK(hunks == expected);
}

TEST_CASE("adjacent hunks never share an op") {
  std::mt19937 rng(11);
  const char* words[] = {"a", "b", " ", "\n", "cc"};
  for (int round = 0; round < 300; ++round) {
    std::string l, r;
    for (unsigned i = rng() % 12; i > 0; --i) l += words[rng() % 5];
    for (unsigned i = rng() % 12; i > 0; --i) r += words[rng() % 5];
    const auto hunks = compute_text_diff(l, r);
    for (std::size_t i = 1; i < hunks.size(); ++i) CHECK(hunks[i].op != hunks[i - 1].op);
    for (const auto& h : hunks) CHECK_FALSE(h.text.empty());
    CHECK(reconstruct_left(hunks) == l);
    CHECK(reconstruct_right(hunks) == r);
  }
}

TEST_CASE("hunks round-trip through JSON") {
  const auto hunks = compute_text_diff("one\ntwo\n", "one\nthree\n");
  const auto json = hunks_to_json(hunks);
  CHECK(json[0]["op"] == "eq");
  CHECK(hunks_from_json(json) == hunks);
}

TEST_CASE("splitting keeps every character") {
  CHECK(split_lines("a\nb") == std::vector<std::string_view>{"a\n", "b"});
  CHECK(split_words("ab  c\n") == std::vector<std::string_view>{"ab", "  ", "c", "\n"});
}
