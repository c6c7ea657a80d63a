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


#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "semrw/errors.h"
#include "semrw/rewrite_template.h"
#include "test_util.h"

namespace semrw {
namespace {

using testing::DataPath;
using Words = std::vector<std::string>;

std::vector<QuestionCluster> SmallClusters() {
  return LoadClusters(DataPath("mining/clusters.txt"));
}

PosLexicon SmallPos() { return LoadPosLexicon(DataPath("mining/pos.tsv")); }

std::string Serialize(const TemplatePairDB &db) {
  std::ostringstream out;
  WriteTemplateDB(db, out);
  return out.str();
}

TEST_CASE("template invariants") {
  Template t = Template::Parse("how many people live in $y");
  CHECK(t.slot() == 5);
  CHECK(t.NonSlotWords() == Words{"how", "many", "people", "live", "in"});
  CHECK(t.Fill({"st", "lucia"}) ==
        Words{"how", "many", "people", "live", "in", "st", "lucia"});
  CHECK(t.ToString() == "how many people live in $y");
  CHECK_THROWS_AS(Template::Parse("no slot here"), std::invalid_argument);
  CHECK_THROWS_AS(Template::Parse("$y and $y"), std::invalid_argument);
  CHECK_THROWS_AS(Template::Parse("$y"), std::invalid_argument);
}

TEST_CASE("cluster file") {
  std::vector<QuestionCluster> clusters = SmallClusters();
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].size() == 6);
  CHECK(clusters[1].size() == 6);
  std::istringstream empty("");
  CHECK(ReadClusters(empty).empty());
}

TEST_CASE("shared noun phrase of the population and currency clusters") {
  PosLexicon pos = SmallPos();
  std::vector<QuestionCluster> clusters = SmallClusters();
  for (size_t c = 0; c < 2; ++c) {
    std::vector<std::vector<Token>> questions;
    for (const std::string &q : clusters[c]) {
      questions.push_back(Tag(Tokenize(q), pos));
    }
    Words shared = SharedNounPhrase(questions);
    CHECK(shared == (c == 0 ? Words{"chembakolli"} : Words{"st", "lucia"}));
  }
}

TEST_CASE("slot widens over adjacent unknown words") {
  PosLexicon pos = SmallPos();
  std::optional<Template> t = SlotQuestion(
      Tag(Tokenize("What is the population of Chembakolli india?"), pos),
      {"chembakolli"});
  REQUIRE(t.has_value());
  CHECK(t->ToString() == "what is the population of $y");
  t = SlotQuestion(Tag(Tokenize("What is st lucia money?"), pos), {"st", "lucia"});
  REQUIRE(t.has_value());
  CHECK(t->ToString() == "what is $y money");
  CHECK_FALSE(SlotQuestion(Tag({"chembakolli"}, pos), {"chembakolli"}));
}

TEST_CASE("mining the population and currency clusters") {
  MiningResult result = MineTemplates(SmallClusters(), 0, SmallPos());
  const TemplatePairDB &db = result.db;
  CHECK(result.skipped.empty());

  // Cluster 1 has five distinct templates (two questions collapse onto
  // "how many people live in $y"), cluster 2 has six.
  CHECK(db.size() == 10 + 15);
  CHECK(db.total == 2);

  const TemplatePairDB::Pair *pair =
      db.Find("how many people live in $y", "what is the population of $y");
  REQUIRE(pair != nullptr);
  CHECK(pair->count == 1);
  // c(t1,t2) = c(t1) = c(t2) = 1, two clusters with templates.
  CHECK(pair->pmi == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(db.Pmi("how many people live in $y", "what is the population of $y") ==
        db.Pmi("what is the population of $y", "how many people live in $y"));
  CHECK(db.Find("what money do $y use", "which money is used in $y") != nullptr);
  CHECK(db.Find("what is $y money", "what currency is used on $y") != nullptr);
  CHECK_THROWS_AS(db.Pmi("what is $y money", "how many people live in $y"),
                  MissingPair);
}

TEST_CASE("threshold 3 empties the small database") {
  MiningResult result = MineTemplates(SmallClusters(), 3, SmallPos());
  CHECK(result.db.empty());
  CHECK(result.dropped_pairs == 25);
  CHECK(MineTemplates(SmallClusters(), TemplatePairDB::kDefaultThreshold, SmallPos())
            .db.empty());
}

TEST_CASE("PMI against a hand count") {
  // Three clusters over two cities: A-B twice, A-C once.
  std::vector<QuestionCluster> clusters = {
      {"alpha of zork", "beta zork"},
      {"alpha of quux", "beta quux"},
      {"alpha of zork", "gamma zork"},
  };
  PosLexicon pos;
  pos.Add("alpha", "DT");
  pos.Add("beta", "DT");
  pos.Add("gamma", "DT");
  pos.Add("of", "IN");
  MiningResult result = MineTemplates(clusters, 0, pos);
  const TemplatePairDB &db = result.db;
  REQUIRE(db.size() == 2);
  // c(alpha)=3, c(beta)=2, c(gamma)=1, T=3.
  CHECK(db.Pmi("alpha of $y", "beta $y") ==
        doctest::Approx(std::log(2.0 * 3 / (3 * 2))));
  CHECK(db.Pmi("alpha of $y", "gamma $y") ==
        doctest::Approx(std::log(1.0 * 3 / (3 * 1))));
  CHECK(MineTemplates(clusters, 1, pos).db.size() == 1);
}

TEST_CASE("clusters without a shared noun are skipped") {
  std::vector<QuestionCluster> clusters = {
      {"only one question here"},
      {"what is it", "what was it"},
      {"alpha of zork", "beta of zork"},
  };
  PosLexicon pos;
  for (const char *w : {"what", "is", "it", "was", "alpha", "beta", "of"}) {
    pos.Add(w, "DT");
  }
  MiningResult result = MineTemplates(clusters, 0, pos);
  CHECK(result.skipped == std::vector<size_t>{0, 1});
  CHECK(result.db.size() == 1);
  CHECK(MineTemplates({}, 0, pos).db.empty());
}

TEST_CASE("mining is order-insensitive") {
  std::vector<QuestionCluster> clusters =
      LoadClusters(DataPath("world/clusters.txt"));
  clusters.push_back(SmallClusters()[0]);
  clusters.push_back(SmallClusters()[1]);
  PosLexicon pos = LoadPosLexicon(DataPath("world/pos.tsv"));
  std::string reference = Serialize(MineTemplates(clusters, 0, pos).db);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(clusters.begin(), clusters.end(), rng);
    for (QuestionCluster &c : clusters) std::shuffle(c.begin(), c.end(), rng);
    CHECK(Serialize(MineTemplates(clusters, 0, pos).db) == reference);
  }
}

TEST_CASE("database file round-trips") {
  MiningResult result = MineTemplates(SmallClusters(), 0, SmallPos());
  std::string text = Serialize(result.db);
  std::istringstream in(text);
  TemplatePairDB again = ReadTemplateDB(in);
  CHECK(Serialize(again) == text);
  CHECK(again.size() == result.db.size());

  std::istringstream bad("a $y\tb $y\t1\n");
  CHECK_THROWS_AS(ReadTemplateDB(bad), ParseError);
  std::istringstream no_slot("a\tb $y\t1\t0.5\n");
  CHECK_THROWS_AS(ReadTemplateDB(no_slot), ParseError);
}

TEST_CASE("sentence templates") {
  Gazetteer gaz;
  gaz.Add("berlin", "Berlin");
  gaz.Add("germany", "Germany");
  gaz.Add("st lucia", "StLucia");
  PosLexicon pos;
  Sentence s = Analyze("How many people live in Berlin", pos, gaz);
  std::vector<SentenceTemplate> st = SentenceTemplates(s);
  REQUIRE(st.size() == 1);
  CHECK(st[0].tmpl.ToString() == "how many people live in $y");

  s = Analyze("is berlin in germany", pos, gaz);
  st = SentenceTemplates(s);
  REQUIRE(st.size() == 2);
  CHECK(st[0].tmpl.ToString() == "is $y in germany");
  CHECK(st[1].tmpl.ToString() == "is berlin in $y");

  s = Analyze("what currency is used on st lucia", pos, gaz);
  st = SentenceTemplates(s);
  REQUIRE(st.size() == 1);
  CHECK(st[0].tmpl.ToString() == "what currency is used on $y");

  CHECK(SentenceTemplates(Analyze("who wrote hamlet", pos, gaz)).empty());
}

TEST_CASE("template rewrites") {
  Gazetteer gaz;
  gaz.Add("berlin", "Berlin");
  gaz.Add("st lucia", "StLucia");
  PosLexicon pos;
  TemplatePairDB db;
  db.AddPair("how many people live in $y", "what is the population of $y", 5,
             1.5);
  db.AddPair("how many people live in $y", "what is the size of $y", 5, 0.5);
  db.AddPair("how many people live in $y", "population of $y", 5, 2.5);
  db.AddPair("how many people live in $y", "$y population", 5, 1.5);
  db.AddPair("how many people live in $y", "$y residents count", 5, -1.0);

  Sentence s = Analyze("How many people live in Berlin?", pos, gaz);
  std::vector<Rewriting> out = TemplateRewrites(s, db, 100, pos);
  REQUIRE(out.size() == 5);
  // PMI descending, then target text.
  CHECK(out[0].rewritten.Text() == "population of berlin");
  CHECK(out[1].rewritten.Text() == "berlin population");
  CHECK(out[2].rewritten.Text() == "what is the population of berlin");
  CHECK(out[3].rewritten.Text() == "what is the size of berlin");
  CHECK(out[4].rewritten.Text() == "berlin residents count");
  for (const Rewriting &rw : out) {
    CHECK(rw.is_template());
    const auto &trace = std::get<TemplateTrace>(rw.trace);
    CHECK(trace.source == "how many people live in $y");
    CHECK(trace.entity == "Berlin");
    REQUIRE(rw.rewritten.entity_spans.size() == 1);
    const EntitySpan &span = rw.rewritten.entity_spans[0];
    CHECK(rw.rewritten.tokens[span.start].surface == "berlin");
    Words w = rw.rewritten.words();
    CHECK(std::count(w.begin(), w.end(), "berlin") == 1);
    CHECK(Template::Parse(trace.target).slot() == span.start);
  }
  std::vector<Rewriting> top3 = TemplateRewrites(s, db, 3, pos);
  REQUIRE(top3.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(top3[i].rewritten.Text() == out[i].rewritten.Text());
  }

  // Multiword entity surfaces are carried over.
  db.AddPair("what currency is used on $y", "what is the currency of $y", 4, 0.1);
  s = Analyze("What currency is used on St Lucia?", pos, gaz);
  out = TemplateRewrites(s, db, 100, pos);
  REQUIRE(out.size() == 1);
  CHECK(out[0].rewritten.Text() == "what is the currency of st lucia");
  CHECK(out[0].rewritten.entity_spans ==
        std::vector<EntitySpan>{{5, 7, "StLucia"}});

  CHECK(TemplateRewrites(Analyze("where is berlin", pos, gaz), db, 100, pos)
            .empty());
}

}  // namespace
}  // namespace semrw
