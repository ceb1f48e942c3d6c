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

#include "moldex/packs/golden.hpp"

#include <fstream>
#include <regex>

#include "moldex/core/errors.hpp"
#include "moldex/core/session.hpp"
#include "moldex/core/source_patch.hpp"

namespace moldex::packs {
namespace {

std::string report_markup(const std::string& revenue, const std::string& closing) {
  return "<doc>\n"
         "<h1>Quarterly report</h1>\n"
         "<p>Revenue grew by <b>" + revenue + "</b> compared to last quarter.</p>\n"
         "<p>Costs stayed flat.</p>\n"
         "<p>" + closing + "</p>\n"
         "</doc>\n";
}

}  // namespace

std::string GoldenDocument::text() const {
  static const std::regex block(R"(<(h1|p)>(.*?)</\1>)");
  static const std::regex tag(R"(<[^>]*>)");
  std::string out;
  for (std::sregex_iterator it(markup.begin(), markup.end(), block), end; it != end; ++it) {
    out += std::regex_replace((*it)[2].str(), tag, "") + "\n";
  }
  return out;
}

GoldenDocument produce_report() { return {report_markup("12%", "Outlook: <i>positive</i>.")}; }
GoldenDocument outdated_report() { return {report_markup("10%", "Outlook: stable.")}; }

void prepare_golden(const std::filesystem::path& data_dir, bool reset) {
  std::filesystem::create_directories(data_dir);
  const auto path = data_dir / golden_file_name;
  if (reset || !std::filesystem::exists(path)) write_text_file(path, outdated_report().markup);
}

ComparisonFailure::ComparisonFailure(std::filesystem::path expected_path, GoldenDocument expected,
                                     GoldenDocument actual)
    : TestFailure("document differs from golden file " + expected_path.filename().string()),
      expected_path_(std::move(expected_path)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

void ComparisonFailure::accept() const { write_text_file(expected_path_, actual_.markup); }

std::shared_ptr<const Transformation> ComparisonFailure::transformation() const {
  auto t = std::make_shared<Transformation>();
  t->description = "accept the produced document as the new golden file";
  t->should_transform = [path = expected_path_] { return std::filesystem::is_regular_file(path); };
  t->perform = [path = expected_path_, markup = actual_.markup] { write_text_file(path, markup); };
  return t;
}

void install_golden_pack(Registry& registry) {
  if (!registry.mark_installed("moldex.packs.golden")) return;

  registry.add_view<ComparisonFailure>("textual_diff", markers::exception_view,
                                       [](const ComparisonFailure& self, const ViewBuilder& view) -> ViewSpec {
    return view.text_diff()
        .title("Textual Diff")
        .priority(10)
        .left("Golden", [text = self.expected().text()] { return text; })
        .right("Produced", [text = self.actual().text()] { return text; });
  });

  registry.add_view<ComparisonFailure>("source_diff", markers::exception_view,
                                       [](const ComparisonFailure& self, const ViewBuilder& view) -> ViewSpec {
    return view.text_diff()
        .title("Source Diff")
        .priority(20)
        .left("Golden", [markup = self.expected().markup] { return markup; })
        .right("Produced", [markup = self.actual().markup] { return markup; });
  });

  registry.add_action<ComparisonFailure>("accept_action", markers::exception_action,
                                         [](const ComparisonFailure& self, const ActionBuilder& action,
                                            ExecutionContext&) -> ActionSpec {
    return action.button()
        .label("Accept")
        .icon("accept")
        .priority(10)
        .id(std::string(accept_action_id))
        .action([&self](ExecutionContext& context) {
          self.accept();
          context.resume_and_close(Value{{"status", "accepted"}, {"golden", self.expected_path().string()}});
          return ActionResult{ActionStatus::resumed, "golden file replaced"};
        });
  });
}

Value golden_scenario(const std::filesystem::path& data_dir) {
  FrameScope frame("golden_scenario");
  const auto path = data_dir / golden_file_name;
  const GoldenDocument produced = produce_report();
  const GoldenDocument golden{read_text_file(path)};
  const std::string golden_path = path.string();
  frame.local("golden", golden_path);
  if (golden.markup != produced.markup) raise(ComparisonFailure(path, golden, produced));
  return Value{{"status", "matched"}, {"golden", path.string()}};
}

}  // namespace moldex::packs
