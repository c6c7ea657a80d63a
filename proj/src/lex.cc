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

#include "semrw/lex.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "io_util.h"
#include "semrw/errors.h"

namespace semrw {

std::vector<std::string> Sentence::words() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

std::string Sentence::Text() const { return JoinWords(words()); }

const EntitySpan *Sentence::SpanAt(int i) const {
  for (const EntitySpan &span : entity_spans) {
    if (span.start <= i && i < span.end) return &span;
  }
  return nullptr;
}

std::vector<std::string> Tokenize(const std::string &raw) {
  std::vector<std::string> words;
  std::istringstream in(raw);
  std::string word;
  while (in >> word) {
    for (char &c : word) c = std::tolower(static_cast<unsigned char>(c));
    // Typographic apostrophe (U+2019) to ASCII.
    for (size_t at; (at = word.find("\xE2\x80\x99")) != std::string::npos;) {
      word.replace(at, 3, "'");
    }
    words.push_back(std::move(word));
  }
  while (!words.empty()) {
    std::string &last = words.back();
    while (!last.empty() &&
           (last.back() == '?' || last.back() == '.' || last.back() == '!')) {
      last.pop_back();
    }
    if (!last.empty()) break;
    words.pop_back();
  }
  return words;
}

std::string JoinWords(const std::vector<std::string> &words) {
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void PosLexicon::Add(const std::string &word, const std::string &tag) {
  tags_[word] = tag;
}

const std::string &PosLexicon::TagOf(const std::string &word) const {
  static const std::string *unknown = new std::string(kUnknownTag);
  auto it = tags_.find(word);
  return it == tags_.end() ? *unknown : it->second;
}

PosLexicon ReadPosLexicon(std::istream &in, const std::string &source) {
  PosLexicon lexicon;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(source, lineno, "expected word<TAB>tag");
    }
    std::vector<std::string> word = Tokenize(fields[0]);
    if (word.size() != 1) {
      throw ParseError(source, lineno, "POS entry must be a single word");
    }
    lexicon.Add(word[0], fields[1]);
  }
  return lexicon;
}

PosLexicon LoadPosLexicon(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadPosLexicon(in, path);
}

std::vector<Token> Tag(const std::vector<std::string> &words,
                       const PosLexicon &lexicon) {
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (const std::string &w : words) tokens.push_back({w, lexicon.TagOf(w)});
  return tokens;
}

bool IsNounTag(const std::string &tag) { return tag.rfind("NN", 0) == 0; }

bool IsCommonNounTag(const std::string &tag) {
  return IsNounTag(tag) && tag.rfind("NNP", 0) != 0;
}

bool IsCommonNoun(const Sentence &sentence, int i) {
  return IsCommonNounTag(sentence.tokens[i].pos) &&
         sentence.SpanAt(i) == nullptr;
}

void Gazetteer::Add(const std::string &name, const std::string &entity) {
  std::vector<std::string> key = Tokenize(name);
  if (key.empty()) return;
  int length = static_cast<int>(key.size());
  if (names_.emplace(std::move(key), entity).second) {
    max_length_ = std::max(max_length_, length);
  }
}

namespace {

bool StripPossessive(std::string *word) {
  if (word->size() > 2 && word->compare(word->size() - 2, 2, "'s") == 0) {
    word->resize(word->size() - 2);
    return true;
  }
  return false;
}

}  // namespace

int Gazetteer::LongestMatch(const std::vector<std::string> &words, int start,
                            std::string *entity) const {
  int n = static_cast<int>(words.size());
  for (int length = std::min(max_length_, n - start); length >= 1; --length) {
    std::vector<std::string> key(words.begin() + start,
                                 words.begin() + start + length);
    auto it = names_.find(key);
    if (it == names_.end() && StripPossessive(&key.back())) {
      it = names_.find(key);
    }
    if (it != names_.end()) {
      *entity = it->second;
      return length;
    }
  }
  return 0;
}

Gazetteer BuildGazetteer(const KnowledgeBase &kb) {
  Gazetteer gazetteer;
  for (const auto &[id, entity] : kb.entities()) {
    gazetteer.Add(entity.name, id);
  }
  return gazetteer;
}

void ReadAliases(std::istream &in, const KnowledgeBase &kb,
                 Gazetteer *gazetteer, const std::string &source) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(source, lineno, "expected alias<TAB>entity-id");
    }
    if (!kb.HasEntity(fields[1])) {
      throw ParseError(source, lineno, "unknown entity " + fields[1]);
    }
    gazetteer->Add(fields[0], fields[1]);
  }
}

void LoadAliases(const std::string &path, const KnowledgeBase &kb,
                 Gazetteer *gazetteer) {
  std::ifstream in = internal::OpenInput(path);
  ReadAliases(in, kb, gazetteer, path);
}

std::vector<EntitySpan> FindEntities(const std::vector<std::string> &words,
                                     const Gazetteer &gazetteer) {
  std::vector<EntitySpan> spans;
  int n = static_cast<int>(words.size());
  int i = 0;
  while (i < n) {
    std::string entity;
    int length = gazetteer.LongestMatch(words, i, &entity);
    if (length > 0) {
      spans.push_back({i, i + length, entity});
      i += length;
    } else {
      ++i;
    }
  }
  return spans;
}

Sentence Analyze(const std::string &raw, const PosLexicon &pos,
                 const Gazetteer &gazetteer) {
  std::vector<std::string> words = Tokenize(raw);
  Sentence sentence = MakeSentence(words, FindEntities(words, gazetteer), pos);
  sentence.raw = raw;
  return sentence;
}

Sentence MakeSentence(const std::vector<std::string> &words,
                      std::vector<EntitySpan> spans, const PosLexicon &pos) {
  Sentence sentence;
  sentence.raw = JoinWords(words);
  sentence.tokens = Tag(words, pos);
  sentence.entity_spans = std::move(spans);
  return sentence;
}

void Lexicon::Add(const std::string &phrase, const std::string &predicate,
                  TriggerKind kind, const KnowledgeBase &kb) {
  LexiconEntry entry;
  entry.phrase = Tokenize(phrase);
  if (entry.phrase.empty()) throw std::invalid_argument("empty phrase");
  entry.predicate = predicate;
  entry.kind = kind;

  int arity = kb.Arity(predicate);
  if (kind == TriggerKind::kBinary) {
    if (arity == 0) throw UnknownSymbol(predicate);
    if (arity != 2) {
      throw std::invalid_argument("binary trigger for unary predicate " +
                                  predicate);
    }
  } else if (arity == 1) {
    entry.form = LogicalForm::Unary(predicate);
  } else if (arity == 2) {
    throw std::invalid_argument("unary trigger for binary predicate " +
                                predicate);
  } else {
    // pred.entity: a binary predicate joined with a fixed entity.
    bool resolved = false;
    for (size_t dot = predicate.find('.'); dot != std::string::npos;
         dot = predicate.find('.', dot + 1)) {
      std::string binary = predicate.substr(0, dot);
      std::string entity = predicate.substr(dot + 1);
      if (kb.Arity(binary) == 2 && kb.HasEntity(entity)) {
        entry.form = LogicalForm::Join(binary, LogicalForm::Entity(entity));
        resolved = true;
        break;
      }
    }
    if (!resolved) throw UnknownSymbol(predicate);
  }

  by_first_word_.emplace(entry.phrase.front(), entries_.size());
  entries_.push_back(std::move(entry));
}

std::vector<const LexiconEntry *> Lexicon::MatchesAt(
    const std::vector<std::string> &words, int start) const {
  std::vector<const LexiconEntry *> matches;
  auto range = by_first_word_.equal_range(words[start]);
  for (auto it = range.first; it != range.second; ++it) {
    const LexiconEntry &entry = entries_[it->second];
    if (start + entry.phrase.size() > words.size()) continue;
    if (std::equal(entry.phrase.begin(), entry.phrase.end(),
                   words.begin() + start)) {
      matches.push_back(&entry);
    }
  }
  return matches;
}

bool Lexicon::Covers(const std::string &word) const {
  for (const LexiconEntry &entry : entries_) {
    if (std::find(entry.phrase.begin(), entry.phrase.end(), word) !=
        entry.phrase.end()) {
      return true;
    }
  }
  return false;
}

Lexicon ReadLexicon(std::istream &in, const KnowledgeBase &kb,
                    const std::string &source) {
  Lexicon lexicon;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() != 3) {
      throw ParseError(source, lineno,
                       "expected phrase<TAB>predicate<TAB>unary|binary");
    }
    TriggerKind kind;
    if (fields[2] == "unary") {
      kind = TriggerKind::kUnary;
    } else if (fields[2] == "binary") {
      kind = TriggerKind::kBinary;
    } else {
      throw ParseError(source, lineno, "bad trigger kind '" + fields[2] + "'");
    }
    try {
      lexicon.Add(fields[0], fields[1], kind, kb);
    } catch (const std::exception &e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return lexicon;
}

Lexicon LoadLexicon(const std::string &path, const KnowledgeBase &kb) {
  std::ifstream in = internal::OpenInput(path);
  return ReadLexicon(in, kb, path);
}

}  // namespace semrw
