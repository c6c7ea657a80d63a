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

#include "semrw/rewrite_template.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "io_util.h"
#include "semrw/errors.h"
#include "semrw/features.h"

namespace semrw {

Template::Template(std::vector<std::string> words) : words_(std::move(words)) {
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
    if (words_[i] != kSlot) continue;
    if (slot_ >= 0) throw std::invalid_argument("template with two slots");
    slot_ = i;
  }
  if (slot_ < 0) throw std::invalid_argument("template without slot");
  if (words_.size() < 2) throw std::invalid_argument("template of only $y");
}

Template Template::Parse(const std::string &text) {
  return Template(Tokenize(text));
}

std::vector<std::string> Template::NonSlotWords() const {
  std::vector<std::string> out;
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
    if (i != slot_) out.push_back(words_[i]);
  }
  return out;
}

std::vector<std::string> Template::Fill(
    const std::vector<std::string> &filler) const {
  std::vector<std::string> out(words_.begin(), words_.begin() + slot_);
  out.insert(out.end(), filler.begin(), filler.end());
  out.insert(out.end(), words_.begin() + slot_ + 1, words_.end());
  return out;
}

void TemplatePairDB::AddPair(const std::string &t1, const std::string &t2,
                             int count, double pmi) {
  if (t1 == t2) throw std::invalid_argument("template paired with itself");
  auto key = t1 < t2 ? std::make_pair(t1, t2) : std::make_pair(t2, t1);
  auto [it, inserted] =
      pairs_.emplace(key, Pair{key.first, key.second, count, pmi});
  if (!inserted) {
    it->second.count = count;
    it->second.pmi = pmi;
    return;
  }
  partners_.emplace(t1, t2);
  partners_.emplace(t2, t1);
}

const TemplatePairDB::Pair *TemplatePairDB::Find(const std::string &t1,
                                                 const std::string &t2) const {
  auto key = t1 < t2 ? std::make_pair(t1, t2) : std::make_pair(t2, t1);
  auto it = pairs_.find(key);
  return it == pairs_.end() ? nullptr : &it->second;
}

double TemplatePairDB::Pmi(const std::string &t1, const std::string &t2) const {
  const Pair *pair = Find(t1, t2);
  if (pair == nullptr) throw MissingPair(t1, t2);
  return pair->pmi;
}

std::vector<TemplatePairDB::Partner> TemplatePairDB::Partners(
    const std::string &t) const {
  std::vector<Partner> out;
  auto range = partners_.equal_range(t);
  for (auto it = range.first; it != range.second; ++it) {
    const Pair *pair = Find(t, it->second);
    out.push_back({it->second, pair->count, pair->pmi});
  }
  std::sort(out.begin(), out.end(), [](const Partner &a, const Partner &b) {
    if (a.pmi != b.pmi) return a.pmi > b.pmi;
    return a.target < b.target;
  });
  return out;
}

TemplatePairDB ReadTemplateDB(std::istream &in, const std::string &source) {
  TemplatePairDB db;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() != 4) {
      throw ParseError(source, lineno, "expected t1<TAB>t2<TAB>count<TAB>pmi");
    }
    try {
      Template::Parse(fields[0]);
      Template::Parse(fields[1]);
      size_t used = 0;
      int count = std::stoi(fields[2], &used);
      if (used != fields[2].size() || count < 0) {
        throw std::invalid_argument("bad count '" + fields[2] + "'");
      }
      double pmi = internal::ParseDouble(fields[3]);
      if (!std::isfinite(pmi)) throw std::invalid_argument("non-finite pmi");
      db.AddPair(fields[0], fields[1], count, pmi);
    } catch (const std::exception &e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return db;
}

TemplatePairDB LoadTemplateDB(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadTemplateDB(in, path);
}

void WriteTemplateDB(const TemplatePairDB &db, std::ostream &out) {
  for (const auto &[key, pair] : db.pairs()) {
    out << pair.first << '\t' << pair.second << '\t' << pair.count << '\t'
        << internal::FormatDouble(pair.pmi) << '\n';
  }
}

void SaveTemplateDB(const TemplatePairDB &db, const std::string &path) {
  std::ofstream out = internal::OpenOutput(path);
  WriteTemplateDB(db, out);
  if (!out) throw IoError("error writing " + path);
}

std::vector<QuestionCluster> ReadClusters(std::istream &in) {
  std::vector<QuestionCluster> clusters;
  QuestionCluster current;
  std::string line;
  while (std::getline(in, line)) {
    internal::ChompCr(&line);
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) {
      if (!current.empty()) clusters.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(line);
  }
  if (!current.empty()) clusters.push_back(std::move(current));
  return clusters;
}

std::vector<QuestionCluster> LoadClusters(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadClusters(in);
}

namespace {

bool IsNounish(const std::string &tag) {
  return IsNounTag(tag) || tag == kUnknownTag;
}

bool IsNameish(const std::string &tag) {
  return tag.rfind("NNP", 0) == 0 || tag == kUnknownTag;
}

std::vector<std::string> Surfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

// First index where `needle` occurs contiguously in `hay`, or -1.
int FindSequence(const std::vector<std::string> &hay,
                 const std::vector<std::string> &needle) {
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  return it == hay.end() ? -1 : static_cast<int>(it - hay.begin());
}

}  // namespace

std::vector<std::string> SharedNounPhrase(
    const std::vector<std::vector<Token>> &questions) {
  if (questions.empty()) return {};
  std::vector<std::vector<Token>> sorted = questions;
  std::sort(sorted.begin(), sorted.end(),
            [](const std::vector<Token> &a, const std::vector<Token> &b) {
              return Surfaces(a) < Surfaces(b);
            });
  const std::vector<Token> &first = sorted.front();
  std::vector<std::vector<std::string>> others;
  for (size_t q = 1; q < sorted.size(); ++q) others.push_back(Surfaces(sorted[q]));

  int n = static_cast<int>(first.size());
  for (int length = n; length >= 1; --length) {
    for (int start = 0; start + length <= n; ++start) {
      bool has_noun = false;
      std::vector<std::string> phrase;
      for (int i = start; i < start + length; ++i) {
        has_noun |= IsNounish(first[i].pos);
        phrase.push_back(first[i].surface);
      }
      if (!has_noun) continue;
      bool everywhere = true;
      for (const auto &other : others) {
        if (FindSequence(other, phrase) < 0) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) return phrase;
    }
  }
  return {};
}

std::optional<Template> SlotQuestion(const std::vector<Token> &question,
                                     const std::vector<std::string> &shared) {
  std::vector<std::string> words = Surfaces(question);
  int start = FindSequence(words, shared);
  if (start < 0) return std::nullopt;
  int end = start + static_cast<int>(shared.size());
  while (start > 0 && IsNameish(question[start - 1].pos)) --start;
  while (end < static_cast<int>(question.size()) && IsNameish(question[end].pos)) {
    ++end;
  }
  if (end - start == static_cast<int>(words.size())) return std::nullopt;
  std::vector<std::string> slotted(words.begin(), words.begin() + start);
  slotted.push_back(kSlot);
  slotted.insert(slotted.end(), words.begin() + end, words.end());
  return Template(std::move(slotted));
}

MiningResult MineTemplates(const std::vector<QuestionCluster> &clusters,
                           int threshold, const PosLexicon &pos) {
  MiningResult result;
  std::map<std::pair<std::string, std::string>, int> pair_counts;
  std::map<std::string, int> template_counts;
  int total = 0;

  for (size_t c = 0; c < clusters.size(); ++c) {
    std::vector<std::vector<Token>> questions;
    for (const std::string &q : clusters[c]) {
      std::vector<std::string> words = Tokenize(q);
      if (!words.empty()) questions.push_back(Tag(words, pos));
    }
    if (questions.size() < 2) {
      result.skipped.push_back(c);
      continue;
    }
    std::vector<std::string> shared = SharedNounPhrase(questions);
    if (shared.empty()) {
      result.skipped.push_back(c);
      continue;
    }
    std::set<std::string> templates;
    for (const auto &question : questions) {
      std::optional<Template> t = SlotQuestion(question, shared);
      if (t) templates.insert(t->ToString());
    }
    if (templates.empty()) {
      result.skipped.push_back(c);
      continue;
    }
    ++total;
    for (const std::string &t : templates) ++template_counts[t];
    for (auto a = templates.begin(); a != templates.end(); ++a) {
      for (auto b = std::next(a); b != templates.end(); ++b) {
        ++pair_counts[{*a, *b}];
      }
    }
  }

  for (const auto &[key, count] : pair_counts) {
    if (count <= threshold) {
      ++result.dropped_pairs;
      continue;
    }
    double pmi = std::log(static_cast<double>(count) * total /
                          (static_cast<double>(template_counts[key.first]) *
                           template_counts[key.second]));
    result.db.AddPair(key.first, key.second, count, pmi);
  }
  result.db.template_counts = std::move(template_counts);
  result.db.total = total;
  return result;
}

std::vector<SentenceTemplate> SentenceTemplates(const Sentence &sentence) {
  std::vector<SentenceTemplate> out;
  std::vector<std::string> words = sentence.words();
  for (const EntitySpan &span : sentence.entity_spans) {
    std::vector<std::string> slotted(words.begin(), words.begin() + span.start);
    slotted.push_back(kSlot);
    slotted.insert(slotted.end(), words.begin() + span.end, words.end());
    // A sentence that is nothing but the entity has no template.
    if (slotted.size() < 2) continue;
    out.push_back({Template(std::move(slotted)), span});
  }
  return out;
}

std::vector<Rewriting> TemplateRewrites(const Sentence &sentence,
                                        const TemplatePairDB &db, size_t cap,
                                        const PosLexicon &pos) {
  struct Candidate {
    double pmi;
    std::string target;
    size_t order;
    Rewriting rewriting;
  };
  std::vector<Candidate> candidates;
  std::vector<std::string> words = sentence.words();
  for (const SentenceTemplate &st : SentenceTemplates(sentence)) {
    std::string source = st.tmpl.ToString();
    std::vector<std::string> filler(words.begin() + st.span.start,
                                    words.begin() + st.span.end);
    for (const TemplatePairDB::Partner &partner : db.Partners(source)) {
      Template target = Template::Parse(partner.target);
      int slot = target.slot();
      EntitySpan span{slot, slot + static_cast<int>(filler.size()),
                      st.span.entity};

      TemplateTrace trace;
      trace.source = source;
      trace.target = partner.target;
      trace.entity = st.span.entity;
      trace.surface = JoinWords(filler);

      Rewriting rewriting;
      rewriting.original = sentence;
      rewriting.rewritten = MakeSentence(target.Fill(filler), {span}, pos);
      rewriting.features = TemplateFeatures(sentence, trace, db, nullptr);
      rewriting.trace = std::move(trace);
      candidates.push_back({partner.pmi, partner.target, candidates.size(),
                            std::move(rewriting)});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.pmi != b.pmi) return a.pmi > b.pmi;
              if (a.target != b.target) return a.target < b.target;
              return a.order < b.order;
            });
  std::vector<Rewriting> out;
  for (Candidate &c : candidates) {
    if (out.size() >= cap) break;
    out.push_back(std::move(c.rewriting));
  }
  return out;
}

}  // namespace semrw
