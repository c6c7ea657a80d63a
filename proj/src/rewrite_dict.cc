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

#include "semrw/rewrite_dict.h"

#include <set>

#include "io_util.h"
#include "semrw/errors.h"
#include "semrw/features.h"

namespace semrw {

bool Dictionary::Add(const std::string &word,
                     const std::vector<std::string> &explanation) {
  if (word.empty() || explanation.empty() ||
      explanation.size() > kMaxExplanationLength) {
    return false;
  }
  return entries_.emplace(word, explanation).second;
}

const std::vector<std::string> *Dictionary::Find(
    const std::string &word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

Dictionary ReadDictionary(std::istream &in, const std::string &source) {
  Dictionary dictionary;
  // Words whose first noun sense has been seen, kept or not.
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(source, lineno,
                       "expected word<TAB>explanation[<TAB>pos]");
    }
    std::vector<std::string> word = Tokenize(fields[0]);
    if (word.size() != 1) {
      throw ParseError(source, lineno, "headword must be a single word");
    }
    std::vector<std::string> explanation = Tokenize(fields[1]);
    if (explanation.empty()) {
      throw ParseError(source, lineno, "empty explanation");
    }
    if (fields.size() == 3 && !IsNounTag(fields[2])) continue;
    if (!seen.insert(word[0]).second) continue;
    dictionary.Add(word[0], explanation);
  }
  return dictionary;
}

Dictionary LoadDictionary(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadDictionary(in, path);
}

namespace {

Rewriting ApplyReplacements(const Sentence &sentence,
                            const std::vector<int> &positions,
                            const Dictionary &dictionary,
                            const PosLexicon &pos) {
  DictTrace trace;
  std::vector<std::string> words;
  // new index of every original token
  std::vector<int> moved(sentence.size() + 1, 0);
  size_t next = 0;
  for (int i = 0; i < sentence.size(); ++i) {
    moved[i] = static_cast<int>(words.size());
    const std::string &surface = sentence.tokens[i].surface;
    if (next < positions.size() && positions[next] == i) {
      ++next;
      const std::vector<std::string> &explanation = *dictionary.Find(surface);
      Replacement r;
      r.position = i;
      r.word = surface;
      r.explanation = explanation;
      r.left_pos = i > 0 ? sentence.tokens[i - 1].pos : "BOS";
      r.right_pos = i + 1 < sentence.size() ? sentence.tokens[i + 1].pos : "EOS";
      trace.replacements.push_back(std::move(r));
      words.insert(words.end(), explanation.begin(), explanation.end());
    } else {
      words.push_back(surface);
    }
  }
  moved[sentence.size()] = static_cast<int>(words.size());

  std::vector<EntitySpan> spans;
  for (const EntitySpan &span : sentence.entity_spans) {
    spans.push_back({moved[span.start], moved[span.end - 1] + 1, span.entity});
  }

  Rewriting rewriting;
  rewriting.original = sentence;
  rewriting.rewritten = MakeSentence(words, std::move(spans), pos);
  rewriting.features = DictFeatures(sentence, trace);
  rewriting.trace = std::move(trace);
  return rewriting;
}

// Advances `combo` (k strictly increasing indexes below n) to the next
// combination in lexicographic order. Returns false after the last one.
bool NextCombination(std::vector<int> *combo, int n) {
  int k = static_cast<int>(combo->size());
  for (int i = k - 1; i >= 0; --i) {
    if ((*combo)[i] < n - k + i) {
      ++(*combo)[i];
      for (int j = i + 1; j < k; ++j) (*combo)[j] = (*combo)[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Rewriting> DictRewrites(const Sentence &sentence,
                                    const Dictionary &dictionary, size_t cap,
                                    const PosLexicon &pos) {
  std::vector<Rewriting> out;
  if (cap == 0) return out;
  out.push_back(IdentityRewriting(sentence));

  std::vector<int> candidates;
  for (int i = 0; i < sentence.size(); ++i) {
    if (IsCommonNoun(sentence, i) &&
        dictionary.Find(sentence.tokens[i].surface) != nullptr) {
      candidates.push_back(i);
    }
  }
  int n = static_cast<int>(candidates.size());
  for (int k = 1; k <= n && out.size() < cap; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    do {
      std::vector<int> positions;
      for (int index : combo) positions.push_back(candidates[index]);
      out.push_back(ApplyReplacements(sentence, positions, dictionary, pos));
    } while (out.size() < cap && NextCombination(&combo, n));
  }
  return out;
}

}  // namespace semrw
