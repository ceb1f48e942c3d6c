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

#include "moldex/core/source_patch.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "moldex/core/errors.hpp"
#include "moldex/core/script.hpp"
#include "moldex/core/transformation.hpp"

namespace moldex {
namespace {

struct Site {
  const script::Stmt* stmt;
  script::Bindings bindings;
};

void collect_sites(const std::vector<script::Stmt>& body, const script::Stmt& pattern, std::string_view parameter,
                   std::vector<Site>& out) {
  for (const auto& stmt : body) {
    script::Bindings bindings;
    if (script::match(pattern, stmt, parameter, bindings)) out.push_back({&stmt, std::move(bindings)});
    collect_sites(stmt.body, pattern, parameter, out);
  }
}

const script::Method& find_target(const script::Module& module, const SourcePatch& patch) {
  const script::Method* method = module.find(patch.target.function);
  if (method == nullptr) {
    throw FrameworkError(ErrorCode::target_not_found,
                         "no view method '" + patch.target.function + "' in " + patch.target.file.string());
  }
  return *method;
}

script::Module parse_target(const SourcePatch& patch, const std::string& source) {
  try {
    return script::parse_module(source);
  } catch (const FrameworkError& e) {
    throw FrameworkError(ErrorCode::target_not_found,
                         "cannot parse " + patch.target.file.string() + ": " + e.what());
  }
}

script::Stmt parse_pattern(const std::string& snippet) {
  try {
    return script::parse_statement(snippet);
  } catch (const FrameworkError& e) {
    throw FrameworkError(ErrorCode::patch_invalid, "bad pattern '" + snippet + "': " + e.what());
  }
}

std::vector<Site> sites_for(const script::Method& method, const script::Stmt& pattern) {
  std::vector<Site> sites;
  collect_sites(method.body, pattern, method.parameter, sites);
  return sites;
}

[[noreturn]] void ambiguous(const std::vector<Site>& sites) {
  std::string lines;
  for (const auto& s : sites) {
    if (!lines.empty()) lines += ", ";
    lines += std::to_string(s.stmt->span.line);
  }
  throw FrameworkError(ErrorCode::pattern_ambiguous, "pattern matches at lines " + lines);
}

std::string line_at(const std::string& text, std::size_t offset) {
  const auto begin = text.rfind('\n', offset == 0 ? 0 : offset - 1);
  const auto start = (begin == std::string::npos || offset == 0) ? 0 : begin + 1;
  const auto end = text.find('\n', offset);
  return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

Value ChangeSummary::to_json() const {
  Value changes_json = Value::array();
  for (const auto& c : changes) changes_json.push_back({{"line", c.line}, {"before", c.before}, {"after", c.after}});
  return {{"file", file.string()}, {"function", function}, {"changed", changed}, {"changes", changes_json}};
}

PatchStatus probe_patch(const SourcePatch& patch, const std::string& source) {
  const script::Module module = parse_target(patch, source);
  const script::Method& method = find_target(module, patch);
  const auto sites = sites_for(method, parse_pattern(patch.match));
  if (sites.size() > 1) ambiguous(sites);
  if (sites.size() == 1) return PatchStatus::applicable;
  if (!sites_for(method, parse_pattern(patch.replacement)).empty()) return PatchStatus::already_applied;
  throw FrameworkError(ErrorCode::match_not_found,
                       "'" + patch.match + "' does not occur in " + patch.target.function);
}

std::string patched_source(const SourcePatch& patch, const std::string& source, std::vector<SourceChange>* changes) {
  if (probe_patch(patch, source) == PatchStatus::already_applied) return source;
  const script::Module module = parse_target(patch, source);
  const auto sites = sites_for(find_target(module, patch), parse_pattern(patch.match));
  const Site& site = sites.front();
  const std::string replacement = script::instantiate(parse_pattern(patch.replacement), site.bindings, source);
  const script::Span span = site.stmt->span;
  std::string result = source.substr(0, span.begin) + replacement + source.substr(span.end);
  try {
    script::parse_module(result);
  } catch (const FrameworkError& e) {
    throw FrameworkError(ErrorCode::patch_invalid, std::string("patched source does not parse: ") + e.what());
  }
  if (changes != nullptr) {
    changes->push_back({span.line, line_at(source, span.begin), line_at(result, span.begin)});
  }
  return result;
}

ChangeSummary apply_patch(const SourcePatch& patch, const TransformationSettings* log) {
  static std::mutex patch_mutex;
  std::lock_guard lock(patch_mutex);
  ChangeSummary summary;
  summary.file = patch.target.file;
  summary.function = patch.target.function;
  const std::string source = read_text_file(patch.target.file);
  const std::string result = patched_source(patch, source, &summary.changes);
  if (result != source) {
    write_text_file(patch.target.file, result);
    summary.changed = true;
  }
  if (log != nullptr) log->log_change(summary.to_json());
  return summary;
}

std::optional<ViewData> patch_preview(const SourcePatch& patch, std::string title) {
  const std::string source = read_text_file(patch.target.file);
  if (probe_patch(patch, source) != PatchStatus::applicable) return std::nullopt;
  const std::string result = patched_source(patch, source);
  const std::string name = patch.target.file.filename().string();
  ViewSpec spec = ViewBuilder()
                      .text_diff()
                      .title(std::move(title))
                      .left(name + " (current)", [source] { return source; })
                      .right(name + " (patched)", [result] { return result; })
                      .build();
  return materialize(spec, Object());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameworkError(ErrorCode::io_error, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FrameworkError(ErrorCode::io_error, "cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw FrameworkError(ErrorCode::io_error, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw FrameworkError(ErrorCode::io_error, "cannot replace " + path.string() + ": " + ec.message());
}

}  // namespace moldex
