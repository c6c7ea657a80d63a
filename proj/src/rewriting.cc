// Copyright 2026 The semrw Authors.
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

#include "semrw/rewriting.h"

#include "semrw/features.h"

namespace semrw {

const char *Rewriting::KindName() const {
  if (is_dict()) return "dict";
  if (is_template()) return "template";
  return "identity";
}

std::string Rewriting::TraceString() const {
  if (const auto *dict = std::get_if<DictTrace>(&trace)) {
    std::string out;
    for (const Replacement &r : dict->replacements) {
      if (!out.empty()) out += ", ";
      out += r.word + "→" + JoinWords(r.explanation);
    }
    return out;
  }
  if (const auto *t = std::get_if<TemplateTrace>(&trace)) {
    return t->source + " => " + t->target + " [" + t->entity + "]";
  }
  return "-";
}

Rewriting IdentityRewriting(const Sentence &sentence) {
  Rewriting rewriting;
  rewriting.original = sentence;
  rewriting.rewritten = sentence;
  rewriting.trace = IdentityTrace{};
  rewriting.features = IdentityFeatures();
  return rewriting;
}

}  // namespace semrw
