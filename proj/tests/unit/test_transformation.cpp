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

#include <cstdlib>
#include <fstream>

#include "helpers.hpp"
#include "moldex/core/transformation.hpp"

using namespace moldex;
using moldex::testing::TempDir;

namespace {

class Fixable : public Exception, public Transformable {
  MOLDEX_CLASS(Fixable, &Exception::klass())

 public:
  Fixable(bool offers, bool should, int* performed)
      : Exception("fixable"), offers_(offers), should_(should), performed_(performed) {}

  std::shared_ptr<const Transformation> transformation() const override {
    if (!offers_) return nullptr;
    auto t = std::make_shared<Transformation>();
    t->description = "fix";
    t->should_transform = [should = should_] { return should; };
    t->perform = [performed = performed_] { ++*performed; };
    return t;
  }

 private:
  bool offers_;
  bool should_;
  int* performed_;
};

}  // namespace

TEST_CASE("the gate transforms only when offered, allowed and wanted") {
  for (int bits = 0; bits < 8; ++bits) {
    const bool offers = bits & 1, allowed = bits & 2, should = bits & 4;
    int performed = 0;
    Fixable e(offers, should, &performed);
    TransformationSettings settings(allowed);
    const auto outcome = on_signal(e, settings);
    const bool expected = offers && allowed && should;
    CHECK((outcome == SignalOutcome::transformed) == expected);
    CHECK(performed == (expected ? 1 : 0));
  }
}

TEST_CASE("exceptions without the capability pass through") {
  moldex::testing::PlainFailure e("plain");
  CHECK(on_signal(e, TransformationSettings(true)) == SignalOutcome::pass_through);
  CHECK_FALSE(fixit_preview(e).has_value());
}

TEST_CASE("a transformation runs at most once per raised instance") {
  int performed = 0;
  Fixable e(true, true, &performed);
  TransformationSettings settings(true);
  CHECK(on_signal(e, settings) == SignalOutcome::transformed);
  CHECK(on_signal(e, settings) == SignalOutcome::pass_through);
  CHECK(performed == 1);
}

TEST_CASE("settings read the environment toggle") {
  TransformationSettings settings;
  ::setenv("MOLDEX_TEST_TOGGLE", "1", 1);
  CHECK(settings.load_environment("MOLDEX_TEST_TOGGLE"));
  CHECK(settings.allows_automatic());
  ::setenv("MOLDEX_TEST_TOGGLE", "off", 1);
  settings.load_environment("MOLDEX_TEST_TOGGLE");
  CHECK_FALSE(settings.allows_automatic());
  ::setenv("MOLDEX_TEST_TOGGLE", "maybe", 1);
  CHECK_THROWS_AS(settings.load_environment("MOLDEX_TEST_TOGGLE"), FrameworkError);
  ::unsetenv("MOLDEX_TEST_TOGGLE");
  CHECK_FALSE(settings.load_environment("MOLDEX_TEST_TOGGLE"));
}

TEST_CASE("settings files set the flag and the change log") {
  TempDir dir("moldex-settings");
  const auto config = dir.path() / "settings.json";
  const auto log = dir.path() / "changes.jsonl";
  std::ofstream(config) << R"({"allow_automatic_transformations": true, "change_log": ")" << log.string() << "\"}";
  TransformationSettings settings;
  settings.load_file(config);
  CHECK(settings.allows_automatic());
  settings.log_change({{"changed", true}});
  settings.log_change({{"changed", false}});
  std::ifstream in(log);
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  CHECK(Value::parse(first)["changed"] == true);
  CHECK(Value::parse(second)["changed"] == false);
}
