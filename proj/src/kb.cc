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

#include "semrw/kb.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "io_util.h"
#include "semrw/errors.h"

namespace semrw {

namespace {

std::string Lower(std::string s) {
  for (char &c : s) c = std::tolower(static_cast<unsigned char>(c));
  return s;
}

const EntitySet &EmptySet() {
  static const EntitySet *empty = new EntitySet();
  return *empty;
}

}  // namespace

std::string Denotation::ToString() const {
  if (is_number()) return std::to_string(number());
  std::string out;
  for (const std::string &id : entities_) {
    if (!out.empty()) out += '|';
    out += id;
  }
  return out;
}

void KnowledgeBase::AddEntity(const std::string &id, const std::string &name) {
  if (id.empty()) throw std::invalid_argument("empty entity id");
  if (name.empty()) throw std::invalid_argument("empty name for entity " + id);
  if (!entities_.emplace(id, Entity{id, name}).second) {
    throw std::invalid_argument("duplicate entity id " + id);
  }
  by_name_.emplace(Lower(name), id);
}

void KnowledgeBase::Declare(const std::string &predicate, int arity) {
  if (predicate.empty()) throw std::invalid_argument("empty predicate id");
  auto [it, inserted] = arity_.emplace(predicate, arity);
  if (!inserted && it->second != arity) {
    throw std::invalid_argument("predicate " + predicate + " used with arity " +
                                std::to_string(arity) + " but declared " +
                                std::to_string(it->second));
  }
}

void KnowledgeBase::AddUnaryFact(const std::string &predicate,
                                 const std::string &entity) {
  if (!HasEntity(entity)) throw UnknownSymbol(entity);
  Declare(predicate, 1);
  unary_facts_[predicate].insert(entity);
}

void KnowledgeBase::AddBinaryFact(const std::string &predicate,
                                  const std::string &subject,
                                  const std::string &object) {
  if (!HasEntity(subject)) throw UnknownSymbol(subject);
  if (!HasEntity(object)) throw UnknownSymbol(object);
  Declare(predicate, 2);
  binary_facts_[predicate].emplace(subject, object);
  by_object_[predicate][object].insert(subject);
}

const Entity *KnowledgeBase::FindEntity(const std::string &id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

int KnowledgeBase::Arity(const std::string &predicate) const {
  auto it = arity_.find(predicate);
  return it == arity_.end() ? 0 : it->second;
}

const EntitySet &KnowledgeBase::Subjects(const std::string &predicate,
                                         const std::string &object) const {
  auto p = by_object_.find(predicate);
  if (p == by_object_.end()) return EmptySet();
  auto o = p->second.find(object);
  return o == p->second.end() ? EmptySet() : o->second;
}

std::vector<std::string> KnowledgeBase::IdsByName(
    const std::string &name) const {
  std::vector<std::string> ids;
  auto range = by_name_.equal_range(Lower(name));
  for (auto it = range.first; it != range.second; ++it) {
    ids.push_back(it->second);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

EntitySet ExecuteSet(const LogicalForm &lf, const KnowledgeBase &kb) {
  switch (lf.kind()) {
    case LogicalForm::Kind::kEntity:
      if (!kb.HasEntity(lf.symbol())) throw UnknownSymbol(lf.symbol());
      return EntitySet{lf.symbol()};

    case LogicalForm::Kind::kUnary: {
      int arity = kb.Arity(lf.symbol());
      if (arity == 0) throw UnknownSymbol(lf.symbol());
      if (arity != 1) {
        throw MalformedForm("unary node over binary predicate " + lf.symbol());
      }
      return kb.unary_facts().at(lf.symbol());
    }

    case LogicalForm::Kind::kJoin: {
      int arity = kb.Arity(lf.symbol());
      if (arity == 0) throw UnknownSymbol(lf.symbol());
      if (arity != 2) {
        throw MalformedForm("join over unary predicate " + lf.symbol());
      }
      EntitySet objects = ExecuteSet(lf.child(), kb);
      EntitySet result;
      for (const std::string &object : objects) {
        const EntitySet &subjects = kb.Subjects(lf.symbol(), object);
        result.insert(subjects.begin(), subjects.end());
      }
      return result;
    }

    case LogicalForm::Kind::kIntersect: {
      EntitySet left = ExecuteSet(lf.left(), kb);
      EntitySet right = ExecuteSet(lf.right(), kb);
      EntitySet result;
      std::set_intersection(left.begin(), left.end(), right.begin(),
                            right.end(), std::inserter(result, result.end()));
      return result;
    }

    case LogicalForm::Kind::kCount:
      throw MalformedForm("count below the root in " + lf.ToString());
  }
  throw MalformedForm("unknown node kind");
}

}  // namespace

Denotation Execute(const LogicalForm &lf, const KnowledgeBase &kb,
                   int max_depth) {
  lf.Validate(max_depth);
  if (lf.kind() == LogicalForm::Kind::kCount) {
    return Denotation::Number(ExecuteSet(lf.child(), kb).size());
  }
  return Denotation(ExecuteSet(lf, kb));
}

KnowledgeBase ReadKnowledgeBase(std::istream &in, const std::string &source) {
  struct Fact {
    int line;
    std::vector<std::string> fields;
  };
  KnowledgeBase kb;
  std::vector<Fact> facts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    internal::ChompCr(&line);
    if (internal::IsSkippable(line)) continue;
    std::vector<std::string> fields = internal::SplitTabs(line);
    const std::string &kind = fields[0];
    size_t expected = kind == "entity"   ? 3
                      : kind == "unary"  ? 3
                      : kind == "binary" ? 4
                                         : 0;
    if (expected == 0) {
      throw ParseError(source, lineno, "unknown record type '" + kind + "'");
    }
    if (fields.size() != expected) {
      throw ParseError(source, lineno,
                       kind + " record needs " + std::to_string(expected) +
                           " fields, got " + std::to_string(fields.size()));
    }
    if (kind == "entity") {
      try {
        kb.AddEntity(fields[1], fields[2]);
      } catch (const std::invalid_argument &e) {
        throw ParseError(source, lineno, e.what());
      }
    } else {
      facts.push_back({lineno, std::move(fields)});
    }
  }
  for (const Fact &fact : facts) {
    try {
      if (fact.fields[0] == "unary") {
        kb.AddUnaryFact(fact.fields[1], fact.fields[2]);
      } else {
        kb.AddBinaryFact(fact.fields[1], fact.fields[2], fact.fields[3]);
      }
    } catch (const std::exception &e) {
      throw ParseError(source, fact.line, e.what());
    }
  }
  return kb;
}

KnowledgeBase LoadKnowledgeBase(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadKnowledgeBase(in, path);
}

}  // namespace semrw
