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

// Template-based rewriting. Paraphrase template pairs are mined from
// clusters of questions that ask the same thing; a sentence is rewritten by
// abstracting one entity into the slot $y, looking up paraphrases of the
// resulting template, and filling the entity back in. This turns multiword
// expressions ("how many people live in") into phrasings that map to a
// single predicate ("what is the population of").

#ifndef SEMRW_REWRITE_TEMPLATE_H_
#define SEMRW_REWRITE_TEMPLATE_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "semrw/lex.h"
#include "semrw/rewriting.h"

namespace semrw {

inline constexpr char kSlot[] = "$y";

// Word sequence with exactly one slot and at least one other word.
class Template {
 public:
  // Throws std::invalid_argument if the invariants do not hold.
  explicit Template(std::vector<std::string> words);
  static Template Parse(const std::string &text);

  const std::vector<std::string> &words() const { return words_; }
  int slot() const { return slot_; }
  std::vector<std::string> NonSlotWords() const;
  std::string ToString() const { return JoinWords(words_); }

  // Words with the slot replaced by `filler`.
  std::vector<std::string> Fill(const std::vector<std::string> &filler) const;

  bool operator==(const Template &other) const { return words_ == other.words_; }

 private:
  std::vector<std::string> words_;
  int slot_ = -1;
};

// Unordered paraphrase template pairs with co-occurrence counts and PMI.
// Pairs are stored once under (min, max) and retrievable from either side.
class TemplatePairDB {
 public:
  static constexpr int kDefaultThreshold = 3;

  struct Pair {
    std::string first;
    std::string second;
    int count = 0;
    double pmi = 0.0;
  };

  struct Partner {
    std::string target;
    int count = 0;
    double pmi = 0.0;
  };

  void AddPair(const std::string &t1, const std::string &t2, int count,
               double pmi);

  // nullptr when absent; argument order does not matter.
  const Pair *Find(const std::string &t1, const std::string &t2) const;

  // Throws MissingPair.
  double Pmi(const std::string &t1, const std::string &t2) const;

  // Every template paired with t, by descending PMI then target text.
  std::vector<Partner> Partners(const std::string &t) const;

  const std::map<std::pair<std::string, std::string>, Pair> &pairs() const {
    return pairs_;
  }
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Mining statistics; not persisted in the DB file.
  std::map<std::string, int> template_counts;
  int total = 0;

 private:
  std::map<std::pair<std::string, std::string>, Pair> pairs_;
  std::multimap<std::string, std::string> partners_;
};

// `t1<TAB>t2<TAB>count<TAB>pmi`, t1 < t2, sorted. Write(Read(f)) == f for
// files produced by Write.
TemplatePairDB ReadTemplateDB(std::istream &in,
                              const std::string &source = "<template-db>");
TemplatePairDB LoadTemplateDB(const std::string &path);
void WriteTemplateDB(const TemplatePairDB &db, std::ostream &out);
void SaveTemplateDB(const TemplatePairDB &db, const std::string &path);

using QuestionCluster = std::vector<std::string>;

// Blank-line-separated blocks of one question per line; '#' lines ignored.
std::vector<QuestionCluster> ReadClusters(std::istream &in);
std::vector<QuestionCluster> LoadClusters(const std::string &path);

// Longest contiguous word sequence present in every question that contains a
// noun (NN*, or UNK for out-of-lexicon words). Questions are put in sorted
// order first and ties go to the earliest occurrence in the first one, so the
// result does not depend on question order. Empty when nothing is shared.
std::vector<std::string> SharedNounPhrase(
    const std::vector<std::vector<Token>> &questions);

// Template for one question: the first occurrence of `shared`, widened over
// adjacent proper or unknown nouns, becomes the slot. nullopt when no other
// word would remain.
std::optional<Template> SlotQuestion(const std::vector<Token> &question,
                                     const std::vector<std::string> &shared);

struct MiningResult {
  TemplatePairDB db;
  // Indexes of clusters that yielded no template pair source (fewer than two
  // questions or no shared noun phrase).
  std::vector<size_t> skipped;
  // Pairs dropped by the count threshold.
  size_t dropped_pairs = 0;
};

// Pairs every two distinct templates of a cluster, keeps pairs whose count
// exceeds `threshold`, and scores them with
//   PMI(t1, t2) = log(c(t1, t2) * T / (c(t1) * c(t2)))
// where c(t) counts clusters producing t and T counts clusters producing any
// template.
MiningResult MineTemplates(const std::vector<QuestionCluster> &clusters,
                           int threshold, const PosLexicon &pos);

// Template of the sentence for one entity span.
struct SentenceTemplate {
  Template tmpl;
  EntitySpan span;
};

// One template per entity span, that span replaced by $y.
std::vector<SentenceTemplate> SentenceTemplates(const Sentence &sentence);

// Rewritings from every stored pair (st, t2) with st a sentence template,
// ordered by descending PMI then t2, truncated to `cap`.
std::vector<Rewriting> TemplateRewrites(const Sentence &sentence,
                                        const TemplatePairDB &db, size_t cap,
                                        const PosLexicon &pos);

}  // namespace semrw

#endif  // SEMRW_REWRITE_TEMPLATE_H_
