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

#ifndef SEMRW_LEX_H_
#define SEMRW_LEX_H_

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "semrw/kb.h"
#include "semrw/logical_form.h"

namespace semrw {

inline constexpr char kUnknownTag[] = "UNK";

struct Token {
  std::string surface;
  std::string pos;
};

// Half-open token range [start, end) linked to a KB entity.
struct EntitySpan {
  int start = 0;
  int end = 0;
  std::string entity;

  bool operator==(const EntitySpan &other) const {
    return start == other.start && end == other.end && entity == other.entity;
  }
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;
  // Sorted, disjoint.
  std::vector<EntitySpan> entity_spans;

  int size() const { return static_cast<int>(tokens.size()); }
  std::vector<std::string> words() const;
  // Words joined by single spaces.
  std::string Text() const;
  // Span covering token i, or nullptr.
  const EntitySpan *SpanAt(int i) const;
};

// Lowercases, splits on whitespace, and strips terminal '?', '.' and '!'
// from the end of the sentence. Internal apostrophes stay inside the word;
// typographic ones become ASCII.
std::vector<std::string> Tokenize(const std::string &raw);

std::string JoinWords(const std::vector<std::string> &words);

// word -> POS tag. Lookup misses tag as UNK.
class PosLexicon {
 public:
  void Add(const std::string &word, const std::string &tag);
  const std::string &TagOf(const std::string &word) const;
  size_t size() const { return tags_.size(); }

 private:
  std::map<std::string, std::string> tags_;
};

// `word<TAB>tag` lines. Throws ParseError.
PosLexicon ReadPosLexicon(std::istream &in, const std::string &source = "<pos>");
PosLexicon LoadPosLexicon(const std::string &path);

std::vector<Token> Tag(const std::vector<std::string> &words,
                       const PosLexicon &lexicon);

// NN-family tag other than proper nouns (NNP, NNPS).
bool IsNounTag(const std::string &tag);
bool IsCommonNounTag(const std::string &tag);

// Common noun outside every entity span.
bool IsCommonNoun(const Sentence &sentence, int i);

// Lowercased multiword name -> entity id.
class Gazetteer {
 public:
  // Names are tokenized like sentences. The first entity registered for a
  // name keeps it.
  void Add(const std::string &name, const std::string &entity);

  // Longest-match lookup starting at token `start`; returns the match length
  // (0 if none) and sets *entity. The last word of a match may carry a
  // possessive "'s" that the name lacks ("gandhi's" matches "gandhi").
  int LongestMatch(const std::vector<std::string> &words, int start,
                   std::string *entity) const;

  size_t size() const { return names_.size(); }
  int max_length() const { return max_length_; }

 private:
  std::map<std::vector<std::string>, std::string> names_;
  int max_length_ = 0;
};

// Gazetteer over every KB entity name.
Gazetteer BuildGazetteer(const KnowledgeBase &kb);

// Extends a gazetteer with `alias<TAB>entity-id` lines; ids must exist in kb.
void ReadAliases(std::istream &in, const KnowledgeBase &kb, Gazetteer *gazetteer,
                 const std::string &source = "<aliases>");
void LoadAliases(const std::string &path, const KnowledgeBase &kb,
                 Gazetteer *gazetteer);

// Greedy leftmost longest-match entity linking.
std::vector<EntitySpan> FindEntities(const std::vector<std::string> &words,
                                     const Gazetteer &gazetteer);

// Tokenize, tag and entity-link a raw question.
Sentence Analyze(const std::string &raw, const PosLexicon &pos,
                 const Gazetteer &gazetteer);

// Builds a sentence from already tokenized words with the given spans,
// re-tagging every word.
Sentence MakeSentence(const std::vector<std::string> &words,
                      std::vector<EntitySpan> spans, const PosLexicon &pos);

enum class TriggerKind { kUnary, kBinary };

// A lexicon phrase that triggers a predicate. Unary triggers may name either
// a unary predicate or a binary predicate applied to a fixed entity written
// as `pred.entity` (for example gender.female); `form` holds the resolved
// logical form in both cases.
struct LexiconEntry {
  std::vector<std::string> phrase;
  std::string predicate;
  TriggerKind kind = TriggerKind::kUnary;
  LogicalForm form = LogicalForm::Unary("");

  std::string PhraseText() const { return JoinWords(phrase); }
};

class Lexicon {
 public:
  // Throws UnknownSymbol / std::invalid_argument when the predicate does not
  // resolve in kb with the arity the trigger kind requires.
  void Add(const std::string &phrase, const std::string &predicate,
           TriggerKind kind, const KnowledgeBase &kb);

  const std::vector<LexiconEntry> &entries() const { return entries_; }

  // Entries whose phrase starts at token `start`, in insertion order.
  std::vector<const LexiconEntry *> MatchesAt(
      const std::vector<std::string> &words, int start) const;

  // True if some phrase contains this word.
  bool Covers(const std::string &word) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, size_t> by_first_word_;
};

// `phrase<TAB>predicate<TAB>unary|binary` lines. Throws ParseError.
Lexicon ReadLexicon(std::istream &in, const KnowledgeBase &kb,
                    const std::string &source = "<lexicon>");
Lexicon LoadLexicon(const std::string &path, const KnowledgeBase &kb);

}  // namespace semrw

#endif  // SEMRW_LEX_H_
