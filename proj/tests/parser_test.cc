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


#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "semrw/parser.h"
#include "test_util.h"

namespace semrw {
namespace {

using testing::LoadFixture;
using testing::LoadGandhi;

Resources World() { return LoadFixture({"world", "dict.tsv", "aliases.tsv", ""}); }

ParseResult ParseText(const std::string &text, const Resources &r,
                      const FeatureVector &theta2, int beam = 200) {
  ParserConfig config;
  config.beam = beam;
  return Parse(Analyze(text, r.pos, r.gazetteer), r.lexicon, r.kb, theta2,
               config);
}

bool HasRoot(const ParseResult &result, const std::string &lf) {
  for (const DerivationPtr &d : result.roots) {
    if (d->Key() == lf) return true;
  }
  return false;
}

TEST_CASE("population of berlin") {
  Resources r = World();
  ParseResult result = ParseText("what is the population of berlin", r, {});
  REQUIRE_FALSE(result.empty());
  CHECK(result.roots.size() == 1);
  const Derivation &top = *result.roots[0];
  CHECK(top.Key() == "join(population, ent:Berlin)");
  CHECK(top.rule == Rule::kJoin);
  CHECK(top.root);
  REQUIRE(top.children.size() == 2);
  CHECK(top.children[0]->rule == Rule::kLexicalBinary);
  CHECK(top.children[1]->rule == Rule::kEntity);
  CHECK(top.features.Get("parse:lex:population→population") == 1.0);
  CHECK(top.features.Get("parse:pred:population") == 1.0);
  CHECK(top.features.Get("parse:rule:join") == 1.0);
  CHECK(top.features.IsIndicator());
}

TEST_CASE("female child of sonia gandhi") {
  Resources r = LoadGandhi();
  ParseResult result =
      ParseText("what is the name of sonia gandhi's female child", r, {});
  std::string expected =
      "and(join(child, ent:SoniaGandhi), join(gender, ent:female))";
  REQUIRE(HasRoot(result, expected));
  for (const DerivationPtr &d : result.roots) {
    if (d->Key() != expected) continue;
    CHECK(d->rule == Rule::kIntersect);
    CHECK(d->features.Get("parse:lex:child→child") == 1.0);
    CHECK(d->features.Get("parse:lex:female→gender.female") == 1.0);
    CHECK(d->features.Get("parse:rule:intersect") == 1.0);
    CHECK(Execute(*d->lf, r.kb).entities() == EntitySet{"PriyankaVadra"});
  }
}

TEST_CASE("no triggers means no parse") {
  Resources r = World();
  CHECK(ParseText("who wrote this", r, {}).empty());
  // An entity alone is not a root.
  CHECK(ParseText("berlin", r, {}).empty());
  CHECK(ParseText("", r, {}).empty());
}

TEST_CASE("count roots need how many") {
  Resources r = World();
  ParseResult result = ParseText("how many people live in berlin", r, {});
  CHECK(HasRoot(result, "count(join(place_lived, ent:Berlin))"));
  CHECK(HasRoot(result, "join(place_lived, ent:Berlin)"));
  for (const DerivationPtr &d : result.roots) {
    bool count = d->rule == Rule::kCount;
    CHECK(d->features.Get("parse:howmany:count") == (count ? 1.0 : 0.0));
    CHECK(d->features.Get("parse:howmany:set") == (count ? 0.0 : 1.0));
  }
  result = ParseText("where does the population of berlin live in", r, {});
  for (const DerivationPtr &d : result.roots) {
    CHECK(d->rule != Rule::kCount);
    CHECK(d->features.Get("parse:howmany:set") == 0.0);
  }
}

TEST_CASE("beam below one is rejected") {
  Resources r = World();
  CHECK_THROWS_AS(ParseText("population of berlin", r, {}, 0),
                  std::invalid_argument);
}

// All feature ids reachable for the sentence, from an unpruned chart.
std::vector<std::string> FeatureIds(const ParseResult &result) {
  std::set<std::string> ids;
  for (const auto &cell : result.cells) {
    for (const DerivationPtr &d : cell) {
      for (const auto &[id, v] : d->features) ids.insert(id);
    }
  }
  return {ids.begin(), ids.end()};
}

bool DistinctScores(const std::vector<DerivationPtr> &roots) {
  for (size_t i = 1; i < roots.size(); ++i) {
    if (roots[i]->score == roots[i - 1]->score) return false;
  }
  return true;
}

const char *kSentences[] = {
    "what is the name of sonia gandhi's female child",
    "who are the male children of rajiv gandhi",
    "who is indira gandhi's son",
    "what is the female child of the male child of indira gandhi",
};

TEST_CASE("K=1 is a prefix of K=50 and of the unpruned ranking") {
  Resources r = LoadGandhi();
  std::mt19937 rng(17);
  std::normal_distribution<double> weight(0.0, 1.0);
  int compared = 0;
  for (const char *text : kSentences) {
    std::vector<std::string> ids = FeatureIds(ParseText(text, r, {}, 1 << 20));
    for (int trial = 0; trial < 25; ++trial) {
      FeatureVector theta2;
      for (const std::string &id : ids) theta2.Set(id, weight(rng));
      ParseResult full = ParseText(text, r, theta2, 1 << 20);
      if (!DistinctScores(full.roots)) continue;
      ParseResult k1 = ParseText(text, r, theta2, 1);
      ParseResult k50 = ParseText(text, r, theta2, 50);
      REQUIRE(k1.roots.size() == 1);
      REQUIRE_FALSE(k50.roots.empty());
      CHECK(k1.roots[0]->Key() == k50.roots[0]->Key());
      CHECK(k1.roots[0]->Key() == full.roots[0]->Key());
      CHECK(k1.roots[0]->score == full.roots[0]->score);
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("beam monotonicity") {
  Resources r = LoadGandhi();
  std::mt19937 rng(3);
  std::normal_distribution<double> weight(0.0, 1.0);
  for (const char *text : kSentences) {
    std::vector<std::string> ids = FeatureIds(ParseText(text, r, {}, 1 << 20));
    for (int trial = 0; trial < 10; ++trial) {
      FeatureVector theta2;
      for (const std::string &id : ids) theta2.Set(id, weight(rng));
      if (!DistinctScores(ParseText(text, r, theta2, 1 << 20).roots)) continue;
      ParseResult previous = ParseText(text, r, theta2, 1);
      for (int k : {2, 3, 5, 10, 50}) {
        ParseResult next = ParseText(text, r, theta2, k);
        for (const DerivationPtr &d : previous.roots) {
          CHECK_MESSAGE(HasRoot(next, d->Key()), text, " K=", k);
        }
        previous = next;
      }
    }
  }
}

TEST_CASE("every root executes") {
  Resources world = World();
  Resources gandhi = LoadGandhi();
  std::vector<QAPair> qa = LoadQA(testing::DataPath("world/test.tsv"));
  for (const QAPair &pair : qa) {
    for (const DerivationPtr &d : ParseText(pair.question, world, {}).roots) {
      CHECK_NOTHROW(Execute(*d->lf, world.kb));
    }
  }
  for (const char *text : kSentences) {
    for (const DerivationPtr &d : ParseText(text, gandhi, {}).roots) {
      CHECK_NOTHROW(Execute(*d->lf, gandhi.kb));
    }
  }
}

TEST_CASE("features are recomputable and deterministic") {
  Resources r = LoadGandhi();
  for (const char *text : kSentences) {
    Sentence s = Analyze(text, r.pos, r.gazetteer);
    ParseResult a = ParseText(text, r, {});
    ParseResult b = ParseText(text, r, {});
    REQUIRE(a.roots.size() == b.roots.size());
    for (size_t i = 0; i < a.roots.size(); ++i) {
      CHECK(a.roots[i]->Key() == b.roots[i]->Key());
      CHECK(a.roots[i]->features.ToString() == b.roots[i]->features.ToString());
      CHECK(ParseFeatures(s, *a.roots[i]) == a.roots[i]->features);
      CHECK(a.roots[i]->features.IsIndicator());
    }
  }
}

TEST_CASE("ties break by LF") {
  Resources r = LoadGandhi();
  ParseResult result = ParseText("who are the male children of rajiv gandhi", r, {});
  REQUIRE(result.roots.size() > 1);
  for (size_t i = 1; i < result.roots.size(); ++i) {
    const Derivation &a = *result.roots[i - 1];
    const Derivation &b = *result.roots[i];
    CHECK((a.score > b.score || (a.score == b.score && a.Key() < b.Key())));
  }
}

TEST_CASE("action distribution") {
  std::vector<double> p = Softmax({0, 0, 0, 0});
  for (double v : p) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
  p = Softmax({1, 0});
  double e = std::exp(1.0);
  CHECK(p[0] == doctest::Approx(e / (e + 1)).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(1 / (e + 1)).epsilon(1e-12));
  CHECK(p[0] == doctest::Approx(0.7311).epsilon(1e-4));
  // Large scores do not overflow.
  p = Softmax({1000, 999});
  CHECK(p[0] == doctest::Approx(e / (e + 1)).epsilon(1e-12));

  Resources r = LoadGandhi();
  ParseResult result = ParseText(kSentences[0], r, {}, 1 << 20);
  std::vector<std::string> ids = FeatureIds(result);
  std::mt19937 rng(11);
  std::normal_distribution<double> weight(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    FeatureVector theta2;
    for (const std::string &id : ids) theta2.Set(id, weight(rng));
    for (const auto &cell : result.cells) {
      if (cell.empty()) continue;
      std::vector<double> probs = ActionDistribution(cell, theta2);
      double sum = 0.0;
      size_t best_p = 0, best_s = 0;
      for (size_t i = 0; i < cell.size(); ++i) {
        sum += probs[i];
        if (probs[i] > probs[best_p]) best_p = i;
        if (theta2.Dot(cell[i]->features) > theta2.Dot(cell[best_s]->features)) {
          best_s = i;
        }
      }
      CHECK(std::abs(sum - 1.0) <= 1e-9);
      CHECK(best_p == best_s);

      // A constant feature on every candidate changes nothing.
      std::vector<DerivationPtr> shifted;
      for (const DerivationPtr &d : cell) {
        auto copy = std::make_shared<Derivation>(*d);
        copy->features.Set("parse:const", 1.0);
        shifted.push_back(copy);
      }
      FeatureVector theta_shift = theta2;
      theta_shift.Set("parse:const", 3.5);
      std::vector<double> q = ActionDistribution(shifted, theta_shift);
      for (size_t i = 0; i < q.size(); ++i) {
        CHECK(q[i] == doctest::Approx(probs[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("history and its gradient") {
  Resources r = LoadGandhi();
  ParseResult result = ParseText(kSentences[0], r, {});
  std::string expected =
      "and(join(child, ent:SoniaGandhi), join(gender, ent:female))";
  const Derivation *root = nullptr;
  for (const DerivationPtr &d : result.roots) {
    if (d->Key() == expected) root = d.get();
  }
  REQUIRE(root != nullptr);
  std::vector<const Derivation *> history = History(*root);
  // Three anchors, one join, then the root.
  REQUIRE(history.size() == 5);
  CHECK(history.back() == root);
  std::vector<std::string> rules;
  for (const Derivation *step : history) rules.push_back(RuleName(step->rule));
  CHECK(rules == std::vector<std::string>{"entity", "lexical-binary", "join",
                                          "lexical-unary", "intersect"});
  // Children come in sentence order: "sonia gandhi's" precedes "child".
  CHECK(history[1]->predicate == "child");
  CHECK(history[3]->Key() == "join(gender, ent:female)");

  // Hand-computed sum over steps against the same beams.
  FeatureVector theta2{{"parse:rule:join", 0.3}, {"parse:pred:child", -0.2}};
  FeatureVector expected_grad;
  for (const Derivation *step : history) {
    const auto &cell = result.cells.at(step->cell);
    double z = 0.0;
    for (const DerivationPtr &c : cell) z += std::exp(theta2.Dot(c->features));
    expected_grad.AddScaled(step->features);
    for (const DerivationPtr &c : cell) {
      expected_grad.AddScaled(c->features, -std::exp(theta2.Dot(c->features)) / z);
    }
  }
  FeatureVector grad = HistoryGradient(*root, result, theta2);
  std::set<std::string> ids;
  for (const auto &[id, v] : grad) ids.insert(id);
  for (const auto &[id, v] : expected_grad) ids.insert(id);
  for (const std::string &id : ids) {
    CHECK(grad.Get(id) == doctest::Approx(expected_grad.Get(id)).epsilon(1e-12));
  }

  ParseResult other = ParseText("who is indira gandhi's son", r, {});
  if (!other.empty()) {
    Derivation stray = *other.roots[0];
    stray.cell = 1000;
    CHECK_THROWS_AS(HistoryGradient(stray, result, theta2), std::invalid_argument);
  }
}

}  // namespace
}  // namespace semrw
