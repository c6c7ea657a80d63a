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

#include "semrw/learn.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "io_util.h"
#include "semrw/errors.h"
#include "semrw/features.h"

namespace semrw {

void WriteModel(const ModelParams &params, std::ostream &out) {
  auto write = [&out](const char *block, const FeatureVector &theta,
                      const FeatureVector &accum) {
    std::map<std::string, std::pair<double, double>> rows;
    for (const auto &[id, w] : theta) rows[id].first = w;
    for (const auto &[id, a] : accum) rows[id].second = a;
    for (const auto &[id, row] : rows) {
      out << block << '\t' << id << '\t' << internal::FormatDouble(row.first)
          << '\t' << internal::FormatDouble(row.second) << '\n';
    }
  };
  write("theta1", params.theta1, params.accum1);
  write("theta2", params.theta2, params.accum2);
}

ModelParams ReadModel(std::istream &in, const std::string &source) {
  ModelParams params;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() != 4 || fields[1].empty()) {
      throw ParseError(source, lineno,
                       "expected block<TAB>feature<TAB>weight<TAB>accum");
    }
    double weight, accum;
    try {
      weight = internal::ParseDouble(fields[2]);
      accum = internal::ParseDouble(fields[3]);
    } catch (const std::invalid_argument &) {
      throw ParseError(source, lineno, "bad number");
    }
    if (accum < 0) throw ParseError(source, lineno, "negative accumulator");
    if (fields[0] == "theta1") {
      params.theta1.Set(fields[1], weight);
      params.accum1.Set(fields[1], accum);
    } else if (fields[0] == "theta2") {
      params.theta2.Set(fields[1], weight);
      params.accum2.Set(fields[1], accum);
    } else {
      throw ParseError(source, lineno, "unknown block " + fields[0]);
    }
  }
  return params;
}

void SaveModel(const ModelParams &params, const std::string &path) {
  std::ofstream out = internal::OpenOutput(path);
  WriteModel(params, out);
  if (!out.flush()) throw IoError("cannot write " + path);
}

ModelParams LoadModel(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadModel(in, path);
}

std::vector<QAPair> ReadQA(std::istream &in, const std::string &source) {
  std::vector<QAPair> data;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(source, lineno,
                       "expected question<TAB>answers[<TAB>mismatch]");
    }
    QAPair qa;
    qa.question = fields[0];
    if (Tokenize(qa.question).empty()) {
      throw ParseError(source, lineno, "empty question");
    }
    size_t start = 0;
    for (;;) {
      size_t bar = fields[1].find('|', start);
      std::string answer = fields[1].substr(
          start, bar == std::string::npos ? std::string::npos : bar - start);
      if (!answer.empty()) qa.answers.push_back(answer);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (qa.answers.empty()) throw ParseError(source, lineno, "no answers");
    if (fields.size() == 3) {
      if (fields[2] != "mismatch" && !fields[2].empty()) {
        throw ParseError(source, lineno, "third column must be 'mismatch'");
      }
      qa.mismatch = fields[2] == "mismatch";
    }
    data.push_back(std::move(qa));
  }
  return data;
}

std::vector<QAPair> LoadQA(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadQA(in, path);
}

Gold ResolveGold(const std::vector<std::string> &answers,
                 const KnowledgeBase &kb) {
  Gold gold;
  for (const std::string &answer : answers) {
    if (kb.HasEntity(answer)) {
      gold.entities.insert(answer);
      continue;
    }
    std::vector<std::string> ids = kb.IdsByName(answer);
    if (!ids.empty()) {
      gold.entities.insert(*std::min_element(ids.begin(), ids.end()));
      continue;
    }
    bool digits = !answer.empty() &&
                  std::all_of(answer.begin(), answer.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                  });
    if (answers.size() == 1 && digits) {
      gold.number = std::stoull(answer);
    } else {
      ++gold.unresolved;
    }
  }
  return gold;
}

Scores Compare(const Denotation &predicted, const Gold &gold) {
  Scores s;
  if (gold.number.has_value() || predicted.is_number()) {
    if (gold.number.has_value() && predicted.is_number() &&
        *gold.number == predicted.number()) {
      s.precision = s.recall = s.f1 = 1.0;
    }
    return s;
  }
  const EntitySet &p = predicted.entities();
  if (p.empty() || gold.size() == 0) return s;
  size_t hits = 0;
  for (const std::string &id : p) hits += gold.entities.count(id);
  s.precision = static_cast<double>(hits) / static_cast<double>(p.size());
  s.recall = static_cast<double>(hits) / static_cast<double>(gold.size());
  if (hits > 0) s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

double Reward(const Derivation &derivation, const Gold &gold,
              const KnowledgeBase &kb) {
  if (!derivation.lf) return 0.0;
  try {
    return Compare(Execute(*derivation.lf, kb), gold).f1;
  } catch (const std::exception &) {
    return 0.0;
  }
}

namespace {

const LogicalForm *RootForm(const Derivation &d) {
  return d.lf ? &*d.lf : nullptr;
}

double RewriteScore(const Rewriting &rewriting, const Derivation *root,
                    const FeatureVector &theta1) {
  return theta1.Dot(
      RewritingFeatures(rewriting, root ? RootForm(*root) : nullptr));
}

}  // namespace

double JointScore(const Rewriting &rewriting, const Derivation &derivation,
                  const ModelParams &params) {
  return RewriteScore(rewriting, &derivation, params.theta1) +
         params.theta2.Dot(derivation.features);
}

std::vector<Rewriting> GenerateRewritings(const std::string &question,
                                          const Resources &resources,
                                          const RewriteOptions &options) {
  Sentence sentence = Analyze(question, resources.pos, resources.gazetteer);
  std::vector<Rewriting> out;
  if (options.use_dict) {
    out = DictRewrites(sentence, resources.dictionary, options.kd,
                       resources.pos);
  }
  if (out.empty()) out.push_back(IdentityRewriting(sentence));
  if (options.use_templates) {
    for (Rewriting &r : TemplateRewrites(sentence, resources.templates,
                                         options.kt, resources.pos)) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

double RewriteLogProb(const std::vector<FeatureVector> &candidates,
                      size_t chosen, const FeatureVector &theta1) {
  std::vector<double> scores;
  for (const FeatureVector &phi : candidates) scores.push_back(theta1.Dot(phi));
  double max = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (double s : scores) sum += std::exp(s - max);
  return scores[chosen] - max - std::log(sum);
}

FeatureVector RewriteGradient(const std::vector<FeatureVector> &candidates,
                              size_t chosen, const FeatureVector &theta1) {
  std::vector<double> scores;
  for (const FeatureVector &phi : candidates) scores.push_back(theta1.Dot(phi));
  std::vector<double> p = Softmax(scores);
  FeatureVector gradient = candidates[chosen];
  for (size_t j = 0; j < candidates.size(); ++j) {
    gradient.AddScaled(candidates[j], -p[j]);
  }
  return gradient;
}

void AdaGradStep(const FeatureVector &gradient, double eta0, double epsilon,
                 FeatureVector *theta, FeatureVector *accum) {
  for (const auto &[id, g] : gradient) {
    double a = accum->Get(id) + g * g;
    accum->Set(id, a);
    theta->Add(id, eta0 / (epsilon + std::sqrt(a)) * g);
  }
}

namespace {

// One candidate rewriting with its parse.
struct Candidate {
  Rewriting rewriting;
  ParseResult chart;
  std::vector<double> joint;
  std::vector<double> rewards;
  int oracle = -1;
  int target = -1;
  // Top root by joint score.
  int best = -1;
};

int ArgBest(const std::vector<double> &primary,
            const std::vector<double> &secondary) {
  int best = -1;
  for (size_t i = 0; i < primary.size(); ++i) {
    if (best < 0 || primary[i] > primary[best] ||
        (primary[i] == primary[best] && secondary[i] > secondary[best])) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

bool AllIndicators(const FeatureVector &v) {
  for (const auto &[id, value] : v) {
    if (value != 1.0) return false;
  }
  return true;
}

}  // namespace

TrainingTrace Train(const std::vector<QAPair> &data, const Resources &resources,
                    const TrainConfig &config, ModelParams *params) {
  if (config.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  TrainingTrace trace;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (size_t i = 0; i < data.size(); ++i) {
      const QAPair &qa = data[i];
      Gold gold = ResolveGold(qa.answers, resources.kb);
      ExampleTrace ex;
      ex.epoch = epoch;
      ex.example = i;

      std::vector<Candidate> candidates;
      for (Rewriting &r :
           GenerateRewritings(qa.question, resources, config.rewrite)) {
        Candidate c;
        c.rewriting = std::move(r);
        c.chart = Parse(c.rewriting.rewritten, resources.lexicon, resources.kb,
                        params->theta2, config.parser);
        for (const DerivationPtr &d : c.chart.roots) {
          c.joint.push_back(JointScore(c.rewriting, *d, *params));
          c.rewards.push_back(Reward(*d, gold, resources.kb));
        }
        c.best = ArgBest(c.joint, c.joint);
        c.oracle = ArgBest(c.rewards, c.joint);
        // Reranked by joint + lambda * R, but only among the roots that reach
        // the oracle's reward: a large joint margin must not demote d*.
        std::vector<double> augmented;
        for (size_t k = 0; k < c.joint.size(); ++k) {
          augmented.push_back(c.rewards[k] < c.rewards[c.oracle]
                                  ? -std::numeric_limits<double>::infinity()
                                  : c.joint[k] + config.lambda * c.rewards[k]);
        }
        c.target = ArgBest(augmented, c.joint);

        CandidateTrace ct;
        ct.rewritten = c.rewriting.rewritten.Text();
        ct.kind = c.rewriting.KindName();
        ct.roots = c.chart.roots.size();
        if (c.oracle >= 0) ct.oracle_reward = c.rewards[c.oracle];
        if (c.target >= 0) {
          ct.target_lf = c.chart.roots[c.target]->Key();
          ct.target_reward = c.rewards[c.target];
        }
        ex.candidates.push_back(std::move(ct));
        candidates.push_back(std::move(c));
      }

      // h*_target: highest-reward target, then highest joint score.
      int chosen = -1;
      for (size_t j = 0; j < candidates.size(); ++j) {
        const Candidate &c = candidates[j];
        if (c.target < 0) continue;
        if (chosen < 0) {
          chosen = static_cast<int>(j);
          continue;
        }
        const Candidate &b = candidates[chosen];
        double r = c.rewards[c.target], rb = b.rewards[b.target];
        if (r > rb || (r == rb && c.joint[c.target] > b.joint[b.target])) {
          chosen = static_cast<int>(j);
        }
      }
      ex.chosen = chosen;
      if (chosen < 0) {
        ++trace.unparsed;
        trace.examples.push_back(std::move(ex));
        continue;
      }
      const Candidate &star = candidates[chosen];
      const Derivation &h = *star.chart.roots[star.target];
      ex.target_lf = h.Key();
      ex.reward = star.rewards[star.target];
      ex.score_before = JointScore(star.rewriting, h, *params);
      if (ex.reward <= 0.0) {
        ++trace.zero_reward;
        ex.score_after = ex.score_before;
        trace.examples.push_back(std::move(ex));
        continue;
      }

      // phi(x, x') per candidate, each represented by its top-scoring root;
      // x'* is represented by h*_target.
      std::vector<FeatureVector> phis;
      for (size_t j = 0; j < candidates.size(); ++j) {
        const Candidate &c = candidates[j];
        const Derivation *root = nullptr;
        if (static_cast<int>(j) == chosen) {
          root = &h;
        } else if (c.best >= 0) {
          root = c.chart.roots[c.best].get();
        }
        phis.push_back(RewritingFeatures(
            c.rewriting, root ? RootForm(*root) : nullptr));
      }
      ex.indicator_only = AllIndicators(h.features);
      for (const FeatureVector &phi : phis) {
        ex.indicator_only = ex.indicator_only && AllIndicators(phi);
      }

      FeatureVector g1 = RewriteGradient(phis, chosen, params->theta1);
      FeatureVector g2 = HistoryGradient(h, star.chart, params->theta2);
      FeatureVector step1, step2;
      step1.AddScaled(g1, ex.reward);
      step2.AddScaled(g2, ex.reward);
      AdaGradStep(step1, params->eta0, params->epsilon, &params->theta1,
                  &params->accum1);
      AdaGradStep(step2, params->eta0, params->epsilon, &params->theta2,
                  &params->accum2);
      ex.updated = true;
      ex.score_after = JointScore(star.rewriting, h, *params);
      ++trace.updates;
      trace.examples.push_back(std::move(ex));
    }
  }
  return trace;
}

std::optional<AnswerResult> Answer(const std::string &question,
                                   const ModelParams &params,
                                   const Resources &resources,
                                   const ParserConfig &parser,
                                   const RewriteOptions &options) {
  std::vector<Rewriting> rewritings =
      GenerateRewritings(question, resources, options);
  struct Scored {
    double score;
    size_t rewriting;
    size_t root;
  };
  std::vector<Scored> scored;
  std::vector<ParseResult> charts;
  for (size_t j = 0; j < rewritings.size(); ++j) {
    charts.push_back(Parse(rewritings[j].rewritten, resources.lexicon,
                           resources.kb, params.theta2, parser));
    for (size_t k = 0; k < charts[j].roots.size(); ++k) {
      scored.push_back(
          {JointScore(rewritings[j], *charts[j].roots[k], params), j, k});
    }
  }
  // Highest score; ties to the earlier rewriting, then the earlier root.
  std::stable_sort(scored.begin(), scored.end(),
                   [](const Scored &a, const Scored &b) {
                     return a.score > b.score;
                   });
  for (const Scored &s : scored) {
    const DerivationPtr &d = charts[s.rewriting].roots[s.root];
    Denotation denotation;
    try {
      denotation = Execute(*d->lf, resources.kb);
    } catch (const std::exception &) {
      continue;
    }
    AnswerResult result;
    result.denotation = std::move(denotation);
    result.rewriting = rewritings[s.rewriting];
    result.derivation = d;
    result.score = s.score;
    result.rewritings = rewritings.size();
    return result;
  }
  return std::nullopt;
}

namespace {

void Accumulate(const Scores &s, Averages *avg) {
  ++avg->count;
  avg->precision += s.precision;
  avg->recall += s.recall;
  avg->f1 += s.f1;
}

void Finish(Averages *avg) {
  if (avg->count == 0) return;
  double n = static_cast<double>(avg->count);
  avg->precision /= n;
  avg->recall /= n;
  avg->f1 /= n;
}

}  // namespace

EvalReport Evaluate(const std::vector<QAPair> &data, const ModelParams &params,
                    const Resources &resources, const ParserConfig &parser,
                    const RewriteOptions &options) {
  EvalReport report;
  for (const QAPair &qa : data) {
    QuestionResult q;
    q.question = qa.question;
    q.mismatch = qa.mismatch;
    std::optional<AnswerResult> answer =
        Answer(qa.question, params, resources, parser, options);
    if (answer) {
      q.answered = true;
      q.prediction = answer->denotation.ToString();
      q.scores = Compare(answer->denotation, ResolveGold(qa.answers, resources.kb));
    }
    Accumulate(q.scores, &report.all);
    Accumulate(q.scores, qa.mismatch ? &report.mismatch : &report.regular);
    report.questions.push_back(std::move(q));
  }
  Finish(&report.all);
  Finish(&report.mismatch);
  Finish(&report.regular);
  return report;
}

}  // namespace semrw
