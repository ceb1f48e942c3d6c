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

#include "moldex/core/transformation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include "moldex/core/errors.hpp"
#include "moldex/core/exception.hpp"

namespace moldex {
namespace {

std::optional<bool> parse_flag(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off" || text.empty()) return false;
  return std::nullopt;
}

}  // namespace

TransformationSettings& TransformationSettings::default_instance() {
  static TransformationSettings instance;
  return instance;
}

bool TransformationSettings::load_environment(const char* variable) {
  const char* raw = std::getenv(variable);
  if (raw == nullptr) return false;
  auto flag = parse_flag(raw);
  if (!flag) {
    throw FrameworkError(ErrorCode::invalid_argument, std::string(variable) + " has unrecognized value '" + raw + "'");
  }
  set_allow_automatic(*flag);
  return true;
}

void TransformationSettings::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FrameworkError(ErrorCode::io_error, "cannot read settings file " + path.string());
  Value config;
  try {
    config = Value::parse(in);
  } catch (const Value::exception& e) {
    throw FrameworkError(ErrorCode::invalid_argument, "bad settings file " + path.string() + ": " + e.what());
  }
  if (auto it = config.find("allow_automatic_transformations"); it != config.end()) {
    set_allow_automatic(it->get<bool>());
  }
  if (auto it = config.find("change_log"); it != config.end() && it->is_string()) {
    set_change_log(std::filesystem::path(it->get<std::string>()));
  }
}

void TransformationSettings::set_change_log(std::optional<std::filesystem::path> path) {
  std::lock_guard lock(log_mutex_);
  change_log_ = std::move(path);
}

std::optional<std::filesystem::path> TransformationSettings::change_log() const {
  std::lock_guard lock(log_mutex_);
  return change_log_;
}

void TransformationSettings::log_change(const Value& summary) const {
  std::lock_guard lock(log_mutex_);
  if (!change_log_) return;
  std::ofstream out(*change_log_, std::ios::app);
  out << summary.dump() << '\n';
}

SignalOutcome on_signal(const Exception& exception, const TransformationSettings& settings,
                        std::vector<std::string>* diagnostics) {
  const auto* capable = dynamic_cast<const Transformable*>(&exception);
  if (capable == nullptr) return SignalOutcome::pass_through;
  const auto transformation = capable->transformation();
  if (!transformation) return SignalOutcome::pass_through;
  if (!settings.allows_automatic()) return SignalOutcome::pass_through;
  try {
    if (!transformation->should_transform || !transformation->should_transform()) {
      return SignalOutcome::pass_through;
    }
    if (!exception.mark_transformation_performed()) return SignalOutcome::pass_through;
    if (transformation->perform) transformation->perform();
    return SignalOutcome::transformed;
  } catch (const std::exception& e) {
    if (diagnostics != nullptr) {
      diagnostics->push_back("transformation '" + transformation->description + "' failed: " + e.what());
    }
    return SignalOutcome::pass_through;
  }
}

std::optional<ViewData> fixit_preview(const Exception& exception) {
  const auto* capable = dynamic_cast<const Transformable*>(&exception);
  if (capable == nullptr) return std::nullopt;
  const auto transformation = capable->transformation();
  if (!transformation || !transformation->preview) return std::nullopt;
  return transformation->preview();
}

}  // namespace moldex
