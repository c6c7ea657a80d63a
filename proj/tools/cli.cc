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


#include "cli.h"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "semrw/errors.h"
#include "semrw/features.h"
#include "semrw/kb.h"
#include "semrw/learn.h"
#include "semrw/lex.h"
#include "semrw/parser.h"
#include "semrw/rewrite_dict.h"
#include "semrw/rewrite_template.h"

namespace semrw {
namespace {

struct Options {
  std::string kb;
  std::string lexicon;
  std::string pos;
  std::string dict;
  std::string aliases;
  std::string clusters;
  std::string template_db;
  std::string qa;
  std::string model;
  std::string rewriting = "both";
  std::string question;
  int beam = 200;
  int kd = 100;
  int kt = 100;
  int epochs = 1;
  int threshold = TemplatePairDB::kDefaultThreshold;
  double lambda = 10.0;
  double eta0 = 1.0;
  double epsilon = 1e-8;
  bool explain = false;
  bool mismatch_only = false;
};

// Raised for missing resources and bad flag combinations.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Fixed(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

void AddResourceFlags(CLI::App *cmd, Options *o) {
  cmd->add_option("--kb", o->kb, "Knowledge base (TSV)");
  cmd->add_option("--pos", o->pos, "POS lexicon (word<TAB>tag)");
  cmd->add_option("--dict", o->dict, "Dictionary (word<TAB>explanation)");
  cmd->add_option("--aliases", o->aliases, "Extra entity names (alias<TAB>id)");
  cmd->add_option("--template-db", o->template_db, "Template pair database");
  cmd->add_option("--kd", o->kd, "Dictionary rewriting cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--kt", o->kt, "Template rewriting cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rewriting", o->rewriting, "Rewriting methods")
      ->check(CLI::IsMember({"both", "dict", "template", "none"}));
}

void AddParserFlags(CLI::App *cmd, Options *o) {
  cmd->add_option("--lexicon", o->lexicon, "Trigger lexicon");
  cmd->add_option("--beam", o->beam, "Beam size K")->check(CLI::PositiveNumber);
}

RewriteOptions MakeRewriteOptions(const Options &o) {
  RewriteOptions r;
  r.use_dict = o.rewriting == "both" || o.rewriting == "dict";
  r.use_templates = o.rewriting == "both" || o.rewriting == "template";
  r.kd = static_cast<size_t>(o.kd);
  r.kt = static_cast<size_t>(o.kt);
  return r;
}

ParserConfig MakeParserConfig(const Options &o) {
  ParserConfig config;
  config.beam = o.beam;
  return config;
}

Resources LoadResources(const Options &o, bool need_lexicon) {
  if (o.kb.empty()) throw UsageError("--kb is required");
  if (need_lexicon && o.lexicon.empty()) {
    throw UsageError("--lexicon is required");
  }
  Resources r;
  r.kb = LoadKnowledgeBase(o.kb);
  if (!o.pos.empty()) r.pos = LoadPosLexicon(o.pos);
  r.gazetteer = BuildGazetteer(r.kb);
  if (!o.aliases.empty()) LoadAliases(o.aliases, r.kb, &r.gazetteer);
  if (!o.lexicon.empty()) r.lexicon = LoadLexicon(o.lexicon, r.kb);
  if (!o.dict.empty()) r.dictionary = LoadDictionary(o.dict);
  if (!o.template_db.empty()) r.templates = LoadTemplateDB(o.template_db);
  return r;
}

ModelParams LoadParams(const Options &o) {
  ModelParams params;
  if (!o.model.empty()) params = LoadModel(o.model);
  params.eta0 = o.eta0;
  params.epsilon = o.epsilon;
  return params;
}

int CmdMine(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.clusters.empty()) throw UsageError("--clusters is required");
  if (o.template_db.empty()) throw UsageError("--template-db is required");
  PosLexicon pos;
  if (!o.pos.empty()) pos = LoadPosLexicon(o.pos);
  MiningResult result = MineTemplates(LoadClusters(o.clusters), o.threshold, pos);
  SaveTemplateDB(result.db, o.template_db);
  out << "pairs: " << result.db.size() << "\n";
  out << "dropped clusters: " << result.skipped.size() << "\n";
  out << "dropped pairs: " << result.dropped_pairs << "\n";
  if (result.db.empty()) {
    err << "warning: no template pair passed threshold " << o.threshold
        << "\n";
  }
  return kExitOk;
}

int CmdRewrite(const Options &o, std::ostream &out) {
  Resources r = LoadResources(o, false);
  std::vector<Rewriting> rewritings =
      GenerateRewritings(o.question, r, MakeRewriteOptions(o));
  for (const Rewriting &rw : rewritings) {
    out << rw.KindName() << '\t' << rw.rewritten.Text() << '\t'
        << rw.TraceString() << '\t' << rw.features.ToString() << "\n";
  }
  return kExitOk;
}

int CmdTrain(const Options &o, std::ostream &out) {
  if (o.qa.empty()) throw UsageError("--qa is required");
  if (o.model.empty()) throw UsageError("--model is required");
  if (o.epochs < 1) throw UsageError("--epochs must be at least 1");
  Resources r = LoadResources(o, true);
  std::vector<QAPair> data = LoadQA(o.qa);
  if (data.empty()) throw UsageError("no questions in " + o.qa);
  TrainConfig config;
  config.epochs = o.epochs;
  config.parser = MakeParserConfig(o);
  config.rewrite = MakeRewriteOptions(o);
  config.lambda = o.lambda;
  ModelParams params;
  params.eta0 = o.eta0;
  params.epsilon = o.epsilon;
  TrainingTrace trace = Train(data, r, config, &params);
  SaveModel(params, o.model);
  out << "examples: " << data.size() << "\n";
  out << "epochs: " << o.epochs << "\n";
  out << "updates: " << trace.updates << "\n";
  out << "unparsed: " << trace.unparsed << "\n";
  out << "zero reward: " << trace.zero_reward << "\n";
  return kExitOk;
}

int CmdAnswer(const Options &o, std::ostream &out, std::ostream &err) {
  Resources r = LoadResources(o, true);
  ModelParams params = LoadParams(o);
  std::optional<AnswerResult> answer =
      Answer(o.question, params, r, MakeParserConfig(o), MakeRewriteOptions(o));
  if (!answer) {
    err << "no answer\n";
    return kExitNoAnswer;
  }
  out << "answer: " << answer->denotation.ToString() << "\n";
  out << "rewriting: " << answer->rewriting.rewritten.Text() << "\n";
  out << "lf: " << answer->derivation->Key() << "\n";
  if (o.explain) {
    out << "trace: " << answer->rewriting.KindName() << ": "
        << answer->rewriting.TraceString() << "\n";
    const LogicalForm *root =
        answer->derivation->lf ? &*answer->derivation->lf : nullptr;
    out << "rewrite features: "
        << RewritingFeatures(answer->rewriting, root).ToString() << "\n";
    out << "parse features: " << answer->derivation->features.ToString()
        << "\n";
  }
  return kExitOk;
}

void PrintAverages(const char *label, const Averages &a, std::ostream &out) {
  out << label << ": n=" << a.count << " precision=" << Fixed(a.precision)
      << " recall=" << Fixed(a.recall) << " avg_f1=" << Fixed(a.f1) << "\n";
}

int CmdEval(const Options &o, std::ostream &out) {
  if (o.qa.empty()) throw UsageError("--qa is required");
  Resources r = LoadResources(o, true);
  std::vector<QAPair> data = LoadQA(o.qa);
  if (o.mismatch_only) {
    std::vector<QAPair> subset;
    for (QAPair &qa : data) {
      if (qa.mismatch) subset.push_back(std::move(qa));
    }
    data = std::move(subset);
  }
  if (data.empty()) throw UsageError("no questions to evaluate in " + o.qa);
  ModelParams params = LoadParams(o);
  EvalReport report = Evaluate(data, params, r, MakeParserConfig(o),
                               MakeRewriteOptions(o));
  for (const QuestionResult &q : report.questions) {
    out << Fixed(q.scores.f1) << '\t' << (q.answered ? q.prediction : "-")
        << '\t' << q.question << "\n";
  }
  PrintAverages("all", report.all, out);
  if (report.mismatch.count > 0) PrintAverages("mismatch", report.mismatch, out);
  if (report.regular.count > 0) PrintAverages("regular", report.regular, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  Options o;
  CLI::App app("Sentence-rewriting semantic parser", "semrw");
  app.require_subcommand(1);

  CLI::App *mine = app.add_subcommand("mine", "Mine paraphrase template pairs");
  mine->add_option("--clusters", o.clusters, "Question clusters");
  mine->add_option("--pos", o.pos, "POS lexicon (word<TAB>tag)");
  mine->add_option("--template-db", o.template_db, "Output database");
  mine->add_option("--threshold", o.threshold, "Keep pairs seen more often")
      ->check(CLI::NonNegativeNumber);

  CLI::App *rewrite = app.add_subcommand("rewrite", "List rewritings");
  AddResourceFlags(rewrite, &o);
  rewrite->add_option("question", o.question, "Question")->required();

  CLI::App *train = app.add_subcommand("train", "Train from QA pairs");
  AddResourceFlags(train, &o);
  AddParserFlags(train, &o);
  train->add_option("--qa", o.qa, "Training QA pairs");
  train->add_option("--model", o.model, "Output model");
  train->add_option("--epochs", o.epochs, "Passes over the data T");
  train->add_option("--lambda", o.lambda, "Reward weight for target reranking");
  train->add_option("--eta0", o.eta0, "AdaGrad base rate")
      ->check(CLI::PositiveNumber);
  train->add_option("--epsilon", o.epsilon, "AdaGrad epsilon")
      ->check(CLI::PositiveNumber);

  CLI::App *answer = app.add_subcommand("answer", "Answer one question");
  AddResourceFlags(answer, &o);
  AddParserFlags(answer, &o);
  answer->add_option("--model", o.model, "Model (zero weights if absent)");
  answer->add_flag("--explain", o.explain, "Print trace and features");
  answer->add_option("question", o.question, "Question")->required();

  CLI::App *eval = app.add_subcommand("eval", "Evaluate on QA pairs");
  AddResourceFlags(eval, &o);
  AddParserFlags(eval, &o);
  eval->add_option("--qa", o.qa, "Test QA pairs");
  eval->add_option("--model", o.model, "Model (zero weights if absent)");
  eval->add_flag("--mismatch-only", o.mismatch_only,
                 "Only questions marked mismatch");

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*mine) return CmdMine(o, out, err);
    if (*rewrite) return CmdRewrite(o, out);
    if (*train) return CmdTrain(o, out);
    if (*answer) return CmdAnswer(o, out, err);
    if (*eval) return CmdEval(o, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace semrw
