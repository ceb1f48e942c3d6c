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

#include <filesystem>
#include <memory>
#include <string>

#include "moldex/core/registry.hpp"
#include "moldex/core/transformation.hpp"
#include "moldex/packs/harness.hpp"

namespace moldex::packs {

inline constexpr std::string_view accept_action_id = "gtDebugAction-accept";
inline constexpr std::string_view golden_file_name = "report.golden";

/// Two-layer document: raw markup plus the text extracted from it.
struct GoldenDocument {
  std::string markup;

  /// Tag-free text, one line per block element.
  std::string text() const;
};

/// The document the scenario produces.
GoldenDocument produce_report();
/// The outdated document a fresh golden file is seeded with.
GoldenDocument outdated_report();

/// Seeds the golden file when missing (or always, with `reset`).
void prepare_golden(const std::filesystem::path& data_dir, bool reset);

class ComparisonFailure : public TestFailure, public Transformable {
  MOLDEX_CLASS(ComparisonFailure, &TestFailure::klass())

 public:
  ComparisonFailure(std::filesystem::path expected_path, GoldenDocument expected, GoldenDocument actual);

  const std::filesystem::path& expected_path() const noexcept { return expected_path_; }
  const GoldenDocument& expected() const noexcept { return expected_; }
  const GoldenDocument& actual() const noexcept { return actual_; }

  /// Overwrites the golden file with the produced document.
  void accept() const;

  std::shared_ptr<const Transformation> transformation() const override;

 private:
  std::filesystem::path expected_path_;
  GoldenDocument expected_;
  GoldenDocument actual_;
};

void install_golden_pack(Registry& registry);

/// Produces the report and compares it with the golden file in `data_dir`.
Value golden_scenario(const std::filesystem::path& data_dir);

}  // namespace moldex::packs
