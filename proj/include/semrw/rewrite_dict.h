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

// Dictionary-based rewriting: common nouns are replaced by short dictionary
// explanations ("daughter" -> "female child") so that a single word mapping
// to a compound formula becomes a phrase with the formula's structure.

#ifndef SEMRW_REWRITE_DICT_H_
#define SEMRW_REWRITE_DICT_H_

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "semrw/lex.h"
#include "semrw/rewriting.h"

namespace semrw {

class Dictionary {
 public:
  static constexpr size_t kMaxExplanationLength = 5;

  // Keeps the first explanation seen for a word. Returns false when the entry
  // is rejected (empty, too long, or a repeated word).
  bool Add(const std::string &word, const std::vector<std::string> &explanation);

  // nullptr if the word has no explanation.
  const std::vector<std::string> *Find(const std::string &word) const;

  size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<std::string>> &entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

// `word<TAB>explanation words[<TAB>pos]` lines. Entries longer than five
// words, repeated senses after the first, and entries whose optional POS
// column is not a noun tag are dropped. Throws ParseError.
Dictionary ReadDictionary(std::istream &in, const std::string &source = "<dict>");
Dictionary LoadDictionary(const std::string &path);

// Identity first, then one rewriting per non-empty subset of the rewritable
// nouns, by ascending subset size and then lexicographic position order,
// truncated to `cap` entries in total.
std::vector<Rewriting> DictRewrites(const Sentence &sentence,
                                    const Dictionary &dictionary, size_t cap,
                                    const PosLexicon &pos);

}  // namespace semrw

#endif  // SEMRW_REWRITE_DICT_H_
