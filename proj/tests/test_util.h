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


// Fixture loading and independent oracles shared by the test binaries.

#ifndef SEMRW_TESTS_TEST_UTIL_H_
#define SEMRW_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "semrw/kb.h"
#include "semrw/learn.h"
#include "semrw/lex.h"
#include "semrw/logical_form.h"

namespace semrw {
namespace testing {

inline std::string DataPath(const std::string &relative) {
  return std::string(SEMRW_TEST_DATA) + "/" + relative;
}

// Loads <dir>/kb.tsv, pos.tsv, lexicon.tsv and, when present in `files`,
// dict/aliases/templates.
struct FixtureFiles {
  std::string dir;
  std::string dict;
  std::string aliases;
  std::string templates;
};

inline Resources LoadFixture(const FixtureFiles &files) {
  Resources r;
  std::string dir = DataPath(files.dir) + "/";
  r.kb = LoadKnowledgeBase(dir + "kb.tsv");
  r.pos = LoadPosLexicon(dir + "pos.tsv");
  r.gazetteer = BuildGazetteer(r.kb);
  if (!files.aliases.empty()) LoadAliases(dir + files.aliases, r.kb, &r.gazetteer);
  r.lexicon = LoadLexicon(dir + "lexicon.tsv", r.kb);
  if (!files.dict.empty()) r.dictionary = LoadDictionary(dir + files.dict);
  if (!files.templates.empty()) {
    r.templates = LoadTemplateDB(dir + files.templates);
  }
  return r;
}

inline Resources LoadGandhi(const std::string &dict = "dict.tsv") {
  return LoadFixture({"gandhi", dict, "", ""});
}

// Random KB with entities e0..e{n-1}, unary predicates u0,u1 and binary
// predicates b0..b2, each fact present with probability `density`.
inline KnowledgeBase RandomKb(std::mt19937 &rng, int n, double density) {
  KnowledgeBase kb;
  for (int i = 0; i < n; ++i) {
    kb.AddEntity("e" + std::to_string(i), "entity " + std::to_string(i));
  }
  std::bernoulli_distribution coin(density);
  for (int p = 0; p < 2; ++p) {
    std::string pred = "u" + std::to_string(p);
    // Declare even when no fact lands.
    kb.AddUnaryFact(pred, "e0");
    for (int i = 1; i < n; ++i) {
      if (coin(rng)) kb.AddUnaryFact(pred, "e" + std::to_string(i));
    }
  }
  for (int p = 0; p < 3; ++p) {
    std::string pred = "b" + std::to_string(p);
    kb.AddBinaryFact(pred, "e0", "e0");
    for (int s = 0; s < n; ++s) {
      for (int o = 0; o < n; ++o) {
        if (coin(rng)) {
          kb.AddBinaryFact(pred, "e" + std::to_string(s),
                           "e" + std::to_string(o));
        }
      }
    }
  }
  return kb;
}

// Random set-denoting form of depth at most `depth` over RandomKb symbols.
inline LogicalForm RandomSetForm(std::mt19937 &rng, int n, int depth) {
  std::uniform_int_distribution<int> pick(0, 3);
  int choice = depth <= 1 ? pick(rng) % 2 : pick(rng);
  switch (choice) {
    case 0:
      return LogicalForm::Entity(
          "e" + std::to_string(std::uniform_int_distribution<int>(0, n - 1)(rng)));
    case 1:
      return LogicalForm::Unary(
          "u" + std::to_string(std::uniform_int_distribution<int>(0, 1)(rng)));
    case 2:
      return LogicalForm::Join(
          "b" + std::to_string(std::uniform_int_distribution<int>(0, 2)(rng)),
          RandomSetForm(rng, n, depth - 1));
    default:
      return LogicalForm::Intersect(RandomSetForm(rng, n, depth - 1),
                                    RandomSetForm(rng, n, depth - 1));
  }
}

// Membership test read straight off the fact tables, one entity at a time.
inline bool OracleHolds(const LogicalForm &lf, const std::string &e,
                        const KnowledgeBase &kb) {
  switch (lf.kind()) {
    case LogicalForm::Kind::kEntity:
      return lf.symbol() == e;
    case LogicalForm::Kind::kUnary: {
      auto it = kb.unary_facts().find(lf.symbol());
      return it != kb.unary_facts().end() && it->second.count(e) > 0;
    }
    case LogicalForm::Kind::kJoin: {
      auto it = kb.binary_facts().find(lf.symbol());
      if (it == kb.binary_facts().end()) return false;
      for (const auto &[id, entity] : kb.entities()) {
        if (it->second.count({e, id}) > 0 && OracleHolds(lf.child(), id, kb)) {
          return true;
        }
      }
      return false;
    }
    case LogicalForm::Kind::kIntersect:
      return OracleHolds(lf.left(), e, kb) && OracleHolds(lf.right(), e, kb);
    case LogicalForm::Kind::kCount:
      return false;
  }
  return false;
}

// Enumerate-and-filter evaluation.
inline Denotation OracleExecute(const LogicalForm &lf, const KnowledgeBase &kb) {
  const LogicalForm &body =
      lf.kind() == LogicalForm::Kind::kCount ? lf.child() : lf;
  EntitySet out;
  for (const auto &[id, entity] : kb.entities()) {
    if (OracleHolds(body, id, kb)) out.insert(id);
  }
  if (lf.kind() == LogicalForm::Kind::kCount) {
    return Denotation::Number(out.size());
  }
  return Denotation(out);
}

// Hand-rolled F1 used to cross-check Compare().
inline double OracleF1(size_t hits, size_t predicted, size_t gold) {
  if (hits == 0) return 0.0;
  double p = static_cast<double>(hits) / static_cast<double>(predicted);
  double r = static_cast<double>(hits) / static_cast<double>(gold);
  return 2 * p * r / (p + r);
}

}  // namespace testing
}  // namespace semrw

#endif  // SEMRW_TESTS_TEST_UTIL_H_
