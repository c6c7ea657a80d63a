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

// Joint scoring of (rewriting, derivation) pairs, answer-set rewards, and
// online learning of the rewriting weights theta1 and parser weights theta2
// from question-answer pairs.

#ifndef SEMRW_LEARN_H_
#define SEMRW_LEARN_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "semrw/feature_vector.h"
#include "semrw/kb.h"
#include "semrw/lex.h"
#include "semrw/parser.h"
#include "semrw/rewrite_dict.h"
#include "semrw/rewrite_template.h"
#include "semrw/rewriting.h"

namespace semrw {

struct ModelParams {
  FeatureVector theta1;  // rw:*
  FeatureVector theta2;  // parse:*
  // Sums of squared gradients, one accumulator set per block.
  FeatureVector accum1;
  FeatureVector accum2;
  double eta0 = 1.0;
  double epsilon = 1e-8;
};

// `theta1|theta2<TAB>feature<TAB>weight<TAB>accum` lines sorted by block and
// feature. Weights print in shortest round-trip form, so Write(Read(f)) == f.
void WriteModel(const ModelParams &params, std::ostream &out);
ModelParams ReadModel(std::istream &in, const std::string &source = "<model>");
void SaveModel(const ModelParams &params, const std::string &path);
ModelParams LoadModel(const std::string &path);

struct QAPair {
  std::string question;
  // Entity names or ids, or a single number.
  std::vector<std::string> answers;
  bool mismatch = false;
};

// `question<TAB>a1|a2|...[<TAB>mismatch]`. Throws ParseError.
std::vector<QAPair> ReadQA(std::istream &in, const std::string &source = "<qa>");
std::vector<QAPair> LoadQA(const std::string &path);

// Gold answers resolved against the KB. Names match entity names
// case-insensitively or ids exactly; names that match nothing still count
// toward the gold size. A lone all-digit answer that names no entity is a
// number.
struct Gold {
  EntitySet entities;
  size_t unresolved = 0;
  std::optional<size_t> number;

  size_t size() const { return entities.size() + unresolved; }
};

Gold ResolveGold(const std::vector<std::string> &answers,
                 const KnowledgeBase &kb);

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Set precision/recall/F1; numbers compare by equality.
Scores Compare(const Denotation &predicted, const Gold &gold);

// F1 of the derivation's execution; 0 when execution fails.
double Reward(const Derivation &derivation, const Gold &gold,
              const KnowledgeBase &kb);

// theta1 . phi(x, x'; root) + theta2 . phi(x', d).
double JointScore(const Rewriting &rewriting, const Derivation &derivation,
                  const ModelParams &params);

// Everything a question is rewritten, parsed and executed against.
struct Resources {
  KnowledgeBase kb;
  PosLexicon pos;
  Gazetteer gazetteer;
  Lexicon lexicon;
  Dictionary dictionary;
  TemplatePairDB templates;
};

struct RewriteOptions {
  bool use_dict = true;
  bool use_templates = true;
  size_t kd = 100;
  size_t kt = 100;
};

// Identity, then dictionary rewritings (capped at kd including Identity),
// then template rewritings (capped at kt).
std::vector<Rewriting> GenerateRewritings(const std::string &question,
                                          const Resources &resources,
                                          const RewriteOptions &options);

struct TrainConfig {
  int epochs = 1;
  ParserConfig parser;
  RewriteOptions rewrite;
  // Weight of the reward when reranking roots for the target history. Only
  // roots with the oracle's reward are reranked.
  double lambda = 10.0;
};

// log p(chosen) under softmax of theta1 . phi_j over the candidates.
double RewriteLogProb(const std::vector<FeatureVector> &candidates,
                      size_t chosen, const FeatureVector &theta1);

// Gradient of RewriteLogProb: phi_chosen - E_p[phi].
FeatureVector RewriteGradient(const std::vector<FeatureVector> &candidates,
                              size_t chosen, const FeatureVector &theta1);

// theta += eta0 / (epsilon + sqrt(accum)) * g per feature, after adding g^2
// to accum.
void AdaGradStep(const FeatureVector &gradient, double eta0, double epsilon,
                 FeatureVector *theta, FeatureVector *accum);

struct CandidateTrace {
  std::string rewritten;
  const char *kind = "identity";
  size_t roots = 0;
  // Reward of the oracle d* and LF of the reranked target (empty if NoParse).
  double oracle_reward = 0.0;
  std::string target_lf;
  double target_reward = 0.0;
};

struct ExampleTrace {
  int epoch = 0;
  size_t example = 0;
  std::vector<CandidateTrace> candidates;
  // Index of x'* in candidates; -1 when nothing parsed.
  int chosen = -1;
  std::string target_lf;
  double reward = 0.0;
  bool updated = false;
  // Every phi(x, x') and phi(x', d) in the update has 0/1 values.
  bool indicator_only = false;
  // Joint score of h*_target under the parameters before and after the update.
  double score_before = 0.0;
  double score_after = 0.0;
};

struct TrainingTrace {
  std::vector<ExampleTrace> examples;
  size_t updates = 0;
  size_t unparsed = 0;
  size_t zero_reward = 0;
};

// Online training, example by example in input order, starting from *params.
// Throws std::invalid_argument for epochs < 1.
TrainingTrace Train(const std::vector<QAPair> &data, const Resources &resources,
                    const TrainConfig &config, ModelParams *params);

struct AnswerResult {
  Denotation denotation;
  Rewriting rewriting;
  DerivationPtr derivation;
  double score = 0.0;
  size_t rewritings = 0;
};

// Best (x', d) by joint score, executed. nullopt when nothing parses.
std::optional<AnswerResult> Answer(const std::string &question,
                                   const ModelParams &params,
                                   const Resources &resources,
                                   const ParserConfig &parser,
                                   const RewriteOptions &options);

struct QuestionResult {
  std::string question;
  bool mismatch = false;
  bool answered = false;
  std::string prediction;
  Scores scores;
};

struct Averages {
  size_t count = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::vector<QuestionResult> questions;
  Averages all;
  Averages mismatch;
  Averages regular;
};

// Macro-averaged P/R/F1; unanswered questions score 0.
EvalReport Evaluate(const std::vector<QAPair> &data, const ModelParams &params,
                    const Resources &resources, const ParserConfig &parser,
                    const RewriteOptions &options);

}  // namespace semrw

#endif  // SEMRW_LEARN_H_
