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

// Log-linear beam parser from sentences to lambda-DCS logical forms.
//
// Lexical anchors (entity spans and lexicon trigger matches) are combined
// bottom-up in a floating chart: two derivations may combine when they use
// disjoint tokens, regardless of adjacency, so "sonia gandhi's female child"
// yields and(join(child, ent:SG), join(gender, ent:female)) even though
// "female" sits between the entity and "child". Words that trigger nothing
// are skipped.
//
// A chart cell holds the derivations built from one token set with one
// top-level rule, pruned to the K best by score theta2 . phi. Because the
// local features of a rule application depend only on the rule, the best
// derivation of a cell extends the best derivations of its children. Roots
// are collected into a separate cell, also pruned to K.

#ifndef SEMRW_PARSER_H_
#define SEMRW_PARSER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semrw/feature_vector.h"
#include "semrw/kb.h"
#include "semrw/lex.h"
#include "semrw/logical_form.h"

namespace semrw {

enum class Rule {
  kLexicalUnary,
  kLexicalBinary,
  kEntity,
  kJoin,
  kIntersect,
  kCount,
};

const char *RuleName(Rule rule);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule = Rule::kEntity;
  // Unset only for lexical binary triggers.
  std::optional<LogicalForm> lf;
  // Binary predicate of a lexical binary trigger.
  std::string predicate;
  // Trigger phrase of lexical derivations.
  std::string phrase;
  // Tokens used, one bit per position; start/end bound them.
  uint64_t mask = 0;
  int start = 0;
  int end = 0;
  // Number of lexical anchors below this node.
  int anchors = 0;
  std::vector<DerivationPtr> children;
  // phi(x', d): indicator union over the subtree, plus root features at the
  // root.
  FeatureVector features;
  double score = 0.0;
  // Index of the chart cell whose beam this derivation survived in.
  int cell = -1;
  bool root = false;

  // LF serialization, or "bin:P" for binary triggers.
  std::string Key() const;
};

struct ParserConfig {
  int beam = 200;
  // Lexical anchors per derivation.
  int max_anchors = 4;
  int max_depth = LogicalForm::kDefaultMaxDepth;
  bool allow_intersect = true;
  bool allow_count = true;
};

struct ParseResult {
  // Root derivations, best first.
  std::vector<DerivationPtr> roots;
  // Surviving beams of every cell; cells[root_cell] == roots.
  std::vector<std::vector<DerivationPtr>> cells;
  int root_cell = -1;

  bool empty() const { return roots.empty(); }
};

// Throws std::invalid_argument for beam < 1. An empty result means NoParse.
ParseResult Parse(const Sentence &sentence, const Lexicon &lexicon,
                  const KnowledgeBase &kb, const FeatureVector &theta2,
                  const ParserConfig &config);

// True when the sentence contains "how many".
bool HasCountTrigger(const Sentence &sentence);

// phi(x', d) recomputed from the derivation tree.
FeatureVector ParseFeatures(const Sentence &sentence,
                            const Derivation &derivation);

// exp(s_i - max) / sum_j exp(s_j - max).
std::vector<double> Softmax(const std::vector<double> &scores);

// p(a) over candidate derivations under theta2.
std::vector<double> ActionDistribution(
    const std::vector<DerivationPtr> &candidates, const FeatureVector &theta2);

// Rule applications of a root derivation, bottom-up and left to right. The
// last element is the root itself.
std::vector<const Derivation *> History(const Derivation &root);

// sum over the history of phi(a_t) - E_{p(a'|s_t)}[phi(a')], with the
// candidates at each step being the beam of the cell the step's derivation
// survived in.
FeatureVector HistoryGradient(const Derivation &root, const ParseResult &chart,
                              const FeatureVector &theta2);

}  // namespace semrw

#endif  // SEMRW_PARSER_H_
