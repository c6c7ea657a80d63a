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

#ifndef SEMRW_REWRITING_H_
#define SEMRW_REWRITING_H_

#include <string>
#include <variant>
#include <vector>

#include "semrw/feature_vector.h"
#include "semrw/lex.h"

namespace semrw {

struct IdentityTrace {};

// One noun replaced by its dictionary explanation. Position and neighbor tags
// refer to the original sentence.
struct Replacement {
  int position = 0;
  std::string word;
  std::vector<std::string> explanation;
  std::string left_pos;   // BOS at the sentence start
  std::string right_pos;  // EOS at the sentence end
};

struct DictTrace {
  std::vector<Replacement> replacements;
};

struct TemplateTrace {
  std::string source;  // t1, matched against the sentence
  std::string target;  // t2, instantiated with the entity
  std::string entity;  // KB id
  std::string surface; // entity words as they appeared in the sentence
};

using RewriteTrace = std::variant<IdentityTrace, DictTrace, TemplateTrace>;

// A candidate x' for question x. `features` holds the rewriting features
// that do not depend on the derivation; the template-to-predicate feature is
// added per derivation by RewritingFeatures().
struct Rewriting {
  Sentence original;
  Sentence rewritten;
  RewriteTrace trace;
  FeatureVector features;

  bool is_identity() const {
    return std::holds_alternative<IdentityTrace>(trace);
  }
  bool is_dict() const { return std::holds_alternative<DictTrace>(trace); }
  bool is_template() const {
    return std::holds_alternative<TemplateTrace>(trace);
  }

  // "identity", "dict", "template".
  const char *KindName() const;
  // Human-readable trace, e.g. "daughter→female child" or "t1 => t2 [id]".
  std::string TraceString() const;
};

// x' = x with the single feature rw:identity.
Rewriting IdentityRewriting(const Sentence &sentence);

}  // namespace semrw

#endif  // SEMRW_REWRITING_H_
