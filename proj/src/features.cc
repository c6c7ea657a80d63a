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

#include "semrw/features.h"

#include <map>

#include "semrw/errors.h"

namespace semrw {

FeatureVector IdentityFeatures() { return FeatureVector{{kIdentityFeature, 1.0}}; }

FeatureVector DictFeatures(const Sentence &original, const DictTrace &trace) {
  (void)original;
  FeatureVector features;
  for (const Replacement &r : trace.replacements) {
    features.Set("rw:d:word:" + r.word, 1.0);
    features.Set("rw:d:repl:" + r.word + "→" + JoinWords(r.explanation), 1.0);
    features.Set("rw:d:lpos:" + r.left_pos, 1.0);
    features.Set("rw:d:rpos:" + r.right_pos, 1.0);
  }
  return features;
}

double TemplateSimilarity(const std::vector<std::string> &sentence_words,
                          const Template &t1) {
  std::vector<std::string> words = t1.NonSlotWords();
  std::map<std::string, int> available;
  for (const std::string &w : sentence_words) ++available[w];
  int overlap = 0;
  for (const std::string &w : words) {
    auto it = available.find(w);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return static_cast<double>(overlap) / static_cast<double>(words.size());
}

FeatureVector TemplateMapFeatures(const TemplateTrace &trace,
                                  const LogicalForm *root) {
  FeatureVector features;
  if (root != nullptr && root->IsAtomic()) {
    features.Set("rw:t:map:" + trace.target + "→" + root->symbol(), 1.0);
  }
  return features;
}

FeatureVector TemplateFeatures(const Sentence &original,
                               const TemplateTrace &trace,
                               const TemplatePairDB &db,
                               const LogicalForm *root) {
  const TemplatePairDB::Pair *pair = db.Find(trace.source, trace.target);
  if (pair == nullptr) throw MissingPair(trace.source, trace.target);
  FeatureVector features;
  features.Set("rw:t:pair:" + trace.source + "|" + trace.target, 1.0);
  features.Set(kSimFeature, TemplateSimilarity(original.words(),
                                               Template::Parse(trace.source)));
  features.Set(kPmiFeature, pair->pmi);
  features.AddScaled(TemplateMapFeatures(trace, root));
  return features;
}

FeatureVector RewritingFeatures(const Rewriting &rewriting,
                                const LogicalForm *root) {
  FeatureVector features = rewriting.features;
  if (const auto *trace = std::get_if<TemplateTrace>(&rewriting.trace)) {
    features.AddScaled(TemplateMapFeatures(*trace, root));
  }
  return features;
}

}  // namespace semrw
