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

#include "semrw/parser.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace semrw {

const char *RuleName(Rule rule) {
  switch (rule) {
    case Rule::kLexicalUnary: return "lexical-unary";
    case Rule::kLexicalBinary: return "lexical-binary";
    case Rule::kEntity: return "entity";
    case Rule::kJoin: return "join";
    case Rule::kIntersect: return "intersect";
    case Rule::kCount: return "count";
  }
  return "?";
}

std::string Derivation::Key() const {
  return lf ? lf->ToString() : "bin:" + predicate;
}

bool HasCountTrigger(const Sentence &sentence) {
  for (int i = 0; i + 1 < sentence.size(); ++i) {
    if (sentence.tokens[i].surface == "how" &&
        sentence.tokens[i + 1].surface == "many") {
      return true;
    }
  }
  return false;
}

namespace {

constexpr int kMaxTokens = 64;

// Parse features are indicators: a feature fired anywhere in the tree is 1.
void Union(const FeatureVector &other, FeatureVector *features) {
  for (const auto &[id, value] : other) features->Set(id, 1.0);
}

// Features fired by the rule application at this node alone.
void AddLocalFeatures(const Derivation &d, FeatureVector *features) {
  features->Set(std::string("parse:rule:") + RuleName(d.rule), 1.0);
  if (d.rule == Rule::kLexicalUnary || d.rule == Rule::kLexicalBinary) {
    features->Set("parse:lex:" + d.phrase + "→" + d.predicate, 1.0);
    features->Set("parse:pred:" + d.predicate, 1.0);
  }
}

// Features added when a derivation becomes a root.
void AddRootFeatures(Rule top, bool count_trigger, FeatureVector *features) {
  if (count_trigger) {
    features->Set(top == Rule::kCount ? "parse:howmany:count"
                                      : "parse:howmany:set",
                  1.0);
  }
}

bool IsSetRule(Rule rule) {
  return rule != Rule::kLexicalBinary && rule != Rule::kCount;
}

bool Better(const DerivationPtr &a, const DerivationPtr &b) {
  if (a->score != b->score) return a->score > b->score;
  return a->Key() < b->Key();
}

struct Cell {
  uint64_t mask = 0;
  Rule rule = Rule::kEntity;
  int anchors = 0;
  std::vector<DerivationPtr> beam;
};

class Chart {
 public:
  Chart(const FeatureVector &theta2, int beam) : theta2_(theta2), beam_(beam) {}

  // Scores the derivation and files it under (mask, rule). Same-LF
  // duplicates keep the better score.
  void Insert(std::shared_ptr<Derivation> d) {
    d->score = theta2_.Dot(d->features);
    auto key = std::make_pair(d->mask, static_cast<int>(d->rule));
    auto it = index_.find(key);
    int id;
    if (it == index_.end()) {
      id = static_cast<int>(cells_.size());
      index_.emplace(key, id);
      cells_.push_back({d->mask, d->rule, d->anchors, {}});
      by_level_.resize(std::max<size_t>(by_level_.size(), d->anchors + 1));
      by_level_[d->anchors].push_back(id);
    } else {
      id = it->second;
    }
    d->cell = id;
    std::vector<DerivationPtr> &beam = cells_[id].beam;
    for (DerivationPtr &existing : beam) {
      if (existing->Key() == d->Key()) {
        if (Better(d, existing)) existing = std::move(d);
        return;
      }
    }
    beam.push_back(std::move(d));
  }

  void Prune(int level) {
    if (level >= static_cast<int>(by_level_.size())) return;
    for (int id : by_level_[level]) PruneBeam(&cells_[id].beam, beam_);
  }

  const std::vector<int> &Level(int level) const {
    static const std::vector<int> *empty = new std::vector<int>();
    return level < static_cast<int>(by_level_.size()) ? by_level_[level]
                                                      : *empty;
  }

  const Cell &cell(int id) const { return cells_[id]; }
  std::vector<Cell> &cells() { return cells_; }

  static void PruneBeam(std::vector<DerivationPtr> *beam, int k) {
    std::sort(beam->begin(), beam->end(), Better);
    if (static_cast<int>(beam->size()) > k) beam->resize(k);
  }

 private:
  const FeatureVector &theta2_;
  int beam_;
  std::vector<Cell> cells_;
  std::map<std::pair<uint64_t, int>, int> index_;
  std::vector<std::vector<int>> by_level_;
};

std::shared_ptr<Derivation> Combine(Rule rule, const DerivationPtr &a,
                                    const DerivationPtr &b) {
  auto d = std::make_shared<Derivation>();
  d->rule = rule;
  if (rule == Rule::kJoin) {
    d->lf = LogicalForm::Join(a->predicate, *b->lf);
  } else {
    d->lf = LogicalForm::Intersect(*a->lf, *b->lf);
  }
  d->mask = a->mask | b->mask;
  d->start = std::min(a->start, b->start);
  d->end = std::max(a->end, b->end);
  d->anchors = a->anchors + b->anchors;
  // Children in sentence order.
  if (a->start <= b->start) {
    d->children = {a, b};
  } else {
    d->children = {b, a};
  }
  d->features = a->features;
  Union(b->features, &d->features);
  AddLocalFeatures(*d, &d->features);
  return d;
}

uint64_t MaskOf(int start, int end) {
  uint64_t mask = 0;
  for (int i = start; i < end; ++i) mask |= uint64_t{1} << i;
  return mask;
}

}  // namespace

ParseResult Parse(const Sentence &sentence, const Lexicon &lexicon,
                  const KnowledgeBase &kb, const FeatureVector &theta2,
                  const ParserConfig &config) {
  (void)kb;
  if (config.beam < 1) throw std::invalid_argument("beam must be >= 1");
  Chart chart(theta2, config.beam);
  int n = std::min(sentence.size(), kMaxTokens);

  // Lexical anchors.
  for (const EntitySpan &span : sentence.entity_spans) {
    if (span.end > n) continue;
    auto d = std::make_shared<Derivation>();
    d->rule = Rule::kEntity;
    d->lf = LogicalForm::Entity(span.entity);
    d->mask = MaskOf(span.start, span.end);
    d->start = span.start;
    d->end = span.end;
    d->anchors = 1;
    AddLocalFeatures(*d, &d->features);
    chart.Insert(std::move(d));
  }
  std::vector<std::string> words = sentence.words();
  for (int i = 0; i < n; ++i) {
    if (sentence.SpanAt(i) != nullptr) continue;
    for (const LexiconEntry *entry : lexicon.MatchesAt(words, i)) {
      int end = i + static_cast<int>(entry->phrase.size());
      if (end > n) continue;
      bool blocked = false;
      for (int j = i; j < end; ++j) blocked |= sentence.SpanAt(j) != nullptr;
      if (blocked) continue;
      auto d = std::make_shared<Derivation>();
      d->phrase = entry->PhraseText();
      d->predicate = entry->predicate;
      if (entry->kind == TriggerKind::kBinary) {
        d->rule = Rule::kLexicalBinary;
      } else {
        d->rule = Rule::kLexicalUnary;
        d->lf = entry->form;
      }
      d->mask = MaskOf(i, end);
      d->start = i;
      d->end = end;
      d->anchors = 1;
      AddLocalFeatures(*d, &d->features);
      chart.Insert(std::move(d));
    }
  }
  chart.Prune(1);

  // Combinations, by number of anchors.
  for (int level = 2; level <= config.max_anchors; ++level) {
    for (int a = 1; a < level; ++a) {
      int b = level - a;
      // Copies: inserting may grow the level lists.
      std::vector<int> left = chart.Level(a);
      std::vector<int> right = chart.Level(b);
      for (int li : left) {
        for (int ri : right) {
          const Cell &lc = chart.cell(li);
          const Cell &rc = chart.cell(ri);
          if (lc.mask & rc.mask) continue;
          Rule rule;
          if (lc.rule == Rule::kLexicalBinary && IsSetRule(rc.rule)) {
            rule = Rule::kJoin;
          } else if (config.allow_intersect && IsSetRule(lc.rule) &&
                     IsSetRule(rc.rule) && lc.rule != Rule::kEntity &&
                     rc.rule != Rule::kEntity && li < ri) {
            rule = Rule::kIntersect;
          } else {
            continue;
          }
          std::vector<DerivationPtr> lbeam = lc.beam;
          std::vector<DerivationPtr> rbeam = rc.beam;
          for (const DerivationPtr &x : lbeam) {
            for (const DerivationPtr &y : rbeam) {
              if (rule == Rule::kIntersect && x->Key() == y->Key()) continue;
              auto d = Combine(rule, x, y);
              if (d->lf->depth() > config.max_depth) continue;
              chart.Insert(std::move(d));
            }
          }
        }
      }
    }
    chart.Prune(level);
  }

  // Roots.
  bool count_trigger = HasCountTrigger(sentence);
  std::vector<DerivationPtr> roots;
  for (Cell &cell : chart.cells()) {
    if (!IsSetRule(cell.rule) || cell.rule == Rule::kEntity) continue;
    for (const DerivationPtr &d : cell.beam) {
      auto root = std::make_shared<Derivation>(*d);
      root->root = true;
      AddRootFeatures(d->rule, count_trigger, &root->features);
      root->score = theta2.Dot(root->features);
      roots.push_back(std::move(root));

      if (config.allow_count && count_trigger &&
          d->lf->depth() + 1 <= config.max_depth) {
        auto count = std::make_shared<Derivation>();
        count->rule = Rule::kCount;
        count->lf = LogicalForm::Count(*d->lf);
        count->mask = d->mask;
        count->start = d->start;
        count->end = d->end;
        count->anchors = d->anchors;
        count->children = {d};
        count->root = true;
        count->features = d->features;
        AddLocalFeatures(*count, &count->features);
        AddRootFeatures(Rule::kCount, count_trigger, &count->features);
        count->score = theta2.Dot(count->features);
        roots.push_back(std::move(count));
      }
    }
  }
  // Same LF reached from different token sets: keep the best.
  std::sort(roots.begin(), roots.end(), Better);
  std::vector<DerivationPtr> unique;
  for (DerivationPtr &d : roots) {
    bool seen = false;
    for (const DerivationPtr &u : unique) {
      if (u->Key() == d->Key()) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(std::move(d));
    if (static_cast<int>(unique.size()) >= config.beam) break;
  }

  ParseResult result;
  for (Cell &cell : chart.cells()) result.cells.push_back(std::move(cell.beam));
  result.root_cell = static_cast<int>(result.cells.size());
  for (DerivationPtr &d : unique) {
    auto root = std::const_pointer_cast<Derivation>(d);
    root->cell = result.root_cell;
  }
  result.roots = unique;
  result.cells.push_back(std::move(unique));
  return result;
}

FeatureVector ParseFeatures(const Sentence &sentence,
                            const Derivation &derivation) {
  FeatureVector features;
  // The root copy of a set derivation shares its children and rule, so the
  // node itself contributes its local features exactly once either way.
  std::vector<const Derivation *> stack{&derivation};
  while (!stack.empty()) {
    const Derivation *d = stack.back();
    stack.pop_back();
    AddLocalFeatures(*d, &features);
    for (const DerivationPtr &child : d->children) stack.push_back(child.get());
  }
  if (derivation.root) {
    AddRootFeatures(derivation.rule, HasCountTrigger(sentence), &features);
  }
  return features;
}

std::vector<double> Softmax(const std::vector<double> &scores) {
  std::vector<double> p(scores.size());
  if (scores.empty()) return p;
  double max = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    p[i] = std::exp(scores[i] - max);
    sum += p[i];
  }
  for (double &v : p) v /= sum;
  return p;
}

std::vector<double> ActionDistribution(
    const std::vector<DerivationPtr> &candidates, const FeatureVector &theta2) {
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const DerivationPtr &d : candidates) {
    scores.push_back(theta2.Dot(d->features));
  }
  return Softmax(scores);
}

std::vector<const Derivation *> History(const Derivation &root) {
  std::vector<const Derivation *> steps;
  // Post-order, children left to right.
  struct Frame {
    const Derivation *node;
    size_t next;
  };
  std::vector<Frame> stack{{&root, 0}};
  while (!stack.empty()) {
    Frame &top = stack.back();
    if (top.next < top.node->children.size()) {
      const Derivation *child = top.node->children[top.next++].get();
      stack.push_back({child, 0});
    } else {
      steps.push_back(top.node);
      stack.pop_back();
    }
  }
  return steps;
}

FeatureVector HistoryGradient(const Derivation &root, const ParseResult &chart,
                              const FeatureVector &theta2) {
  FeatureVector gradient;
  for (const Derivation *step : History(root)) {
    if (step->cell < 0 || step->cell >= static_cast<int>(chart.cells.size())) {
      throw std::invalid_argument("derivation does not belong to this chart");
    }
    const std::vector<DerivationPtr> &candidates = chart.cells[step->cell];
    std::vector<double> p = ActionDistribution(candidates, theta2);
    gradient.AddScaled(step->features);
    for (size_t i = 0; i < candidates.size(); ++i) {
      gradient.AddScaled(candidates[i]->features, -p[i]);
    }
  }
  return gradient;
}

}  // namespace semrw
