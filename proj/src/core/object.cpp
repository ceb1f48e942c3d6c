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

#include "moldex/core/object.hpp"

#include <algorithm>

#include "moldex/core/errors.hpp"

namespace moldex {
namespace {

using Sequence = std::vector<const ClassInfo*>;

bool appears_in_tail(const ClassInfo* candidate, const std::vector<Sequence>& seqs) {
  for (const auto& seq : seqs) {
    if (seq.size() > 1 && std::find(seq.begin() + 1, seq.end(), candidate) != seq.end()) {
      return true;
    }
  }
  return false;
}

Sequence c3_linearize(const ClassInfo* self, const Sequence& bases) {
  std::vector<Sequence> seqs;
  for (const auto* base : bases) seqs.push_back(base->linearization());
  seqs.push_back(bases);

  Sequence result{self};
  while (true) {
    std::erase_if(seqs, [](const Sequence& s) { return s.empty(); });
    if (seqs.empty()) return result;
    const ClassInfo* head = nullptr;
    for (const auto& seq : seqs) {
      if (!appears_in_tail(seq.front(), seqs)) {
        head = seq.front();
        break;
      }
    }
    if (head == nullptr) {
      throw FrameworkError(ErrorCode::inconsistent_hierarchy,
                           "no consistent linearization for class " + self->name());
    }
    result.push_back(head);
    for (auto& seq : seqs) {
      if (!seq.empty() && seq.front() == head) seq.erase(seq.begin());
    }
  }
}

}  // namespace

ClassInfo::ClassInfo(std::string name, std::initializer_list<const ClassInfo*> bases)
    : ClassInfo(std::move(name), std::vector<const ClassInfo*>(bases)) {}

ClassInfo::ClassInfo(std::string name, std::vector<const ClassInfo*> bases)
    : name_(std::move(name)), bases_(std::move(bases)) {
  if (name_.empty()) throw FrameworkError(ErrorCode::invalid_argument, "class name must not be empty");
  for (const auto* base : bases_) {
    if (base == nullptr) throw FrameworkError(ErrorCode::invalid_argument, "null base class for " + name_);
  }
  mro_ = c3_linearize(this, bases_);
}

bool ClassInfo::inherits_from(const ClassInfo& other) const noexcept {
  return std::find(mro_.begin(), mro_.end(), &other) != mro_.end();
}

const ClassInfo& Object::klass() {
  static const ClassInfo info{"Object"};
  return info;
}

std::string Object::display_string() const { return "a " + class_info().name(); }

std::optional<Value> Object::attribute(std::string_view) const { return std::nullopt; }

}  // namespace moldex
