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

// Rewriting features phi(x, x'). All ids live in the rw: namespace:
//
//   rw:identity                 the unchanged sentence
//   rw:d:word:<w>               dictionary: replaced word
//   rw:d:repl:<w>→<ex>          dictionary: replacement used
//   rw:d:lpos:<tag>, rw:d:rpos:<tag>
//                               dictionary: tags around w in the original
//   rw:t:pair:<t1>|<t2>         template pair used
//   rw:t:sim                    word overlap of the sentence with t1
//   rw:t:pmi                    PMI of (t1, t2)
//   rw:t:map:<t2>→<p>           t2 paired with an atomic root predicate p

#ifndef SEMRW_FEATURES_H_
#define SEMRW_FEATURES_H_

#include <string>
#include <vector>

#include "semrw/feature_vector.h"
#include "semrw/lex.h"
#include "semrw/logical_form.h"
#include "semrw/rewrite_template.h"
#include "semrw/rewriting.h"

namespace semrw {

inline constexpr char kIdentityFeature[] = "rw:identity";
inline constexpr char kSimFeature[] = "rw:t:sim";
inline constexpr char kPmiFeature[] = "rw:t:pmi";

FeatureVector IdentityFeatures();

// Union over the replacements; shared indicators stay at 1.
FeatureVector DictFeatures(const Sentence &original, const DictTrace &trace);

// |multiset intersection of the non-slot words of t1 with the sentence| /
// |non-slot words of t1|.
double TemplateSimilarity(const std::vector<std::string> &sentence_words,
                          const Template &t1);

// Throws MissingPair if (t1, t2) is not in db. `root` may be null.
FeatureVector TemplateFeatures(const Sentence &original,
                               const TemplateTrace &trace,
                               const TemplatePairDB &db,
                               const LogicalForm *root);

// Predicate-dependent part of the template features; empty unless `root` is
// atomic.
FeatureVector TemplateMapFeatures(const TemplateTrace &trace,
                                  const LogicalForm *root);

// Complete phi(x, x') for a rewriting paired with a derivation root.
FeatureVector RewritingFeatures(const Rewriting &rewriting,
                                const LogicalForm *root);

}  // namespace semrw

#endif  // SEMRW_FEATURES_H_
