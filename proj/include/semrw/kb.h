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

#ifndef SEMRW_KB_H_
#define SEMRW_KB_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semrw/logical_form.h"

namespace semrw {

struct Entity {
  std::string id;
  std::string name;
};

using EntitySet = std::set<std::string>;

// Result of executing a logical form: a set of entity ids, or a number for
// count-rooted forms.
class Denotation {
 public:
  Denotation() = default;
  explicit Denotation(EntitySet entities) : entities_(std::move(entities)) {}
  static Denotation Number(std::size_t value) {
    Denotation d;
    d.number_ = value;
    return d;
  }

  bool is_number() const { return number_.has_value(); }
  std::size_t number() const { return *number_; }
  const EntitySet &entities() const { return entities_; }

  // "3" for numbers, ids joined by '|' for sets.
  std::string ToString() const;

  bool operator==(const Denotation &other) const {
    return number_ == other.number_ && entities_ == other.entities_;
  }

 private:
  EntitySet entities_;
  std::optional<std::size_t> number_;
};

// Entities plus directed unary and binary facts. Populated once by a loader
// and read-only afterwards; all query methods are const and thread-safe.
class KnowledgeBase {
 public:
  // Throws std::invalid_argument on empty or duplicate ids and empty names.
  void AddEntity(const std::string &id, const std::string &name);

  // Facts may only mention declared entities; a predicate keeps the arity of
  // its first use. Violations throw UnknownSymbol / std::invalid_argument.
  void AddUnaryFact(const std::string &predicate, const std::string &entity);
  void AddBinaryFact(const std::string &predicate, const std::string &subject,
                     const std::string &object);

  bool HasEntity(const std::string &id) const {
    return entities_.count(id) > 0;
  }
  const Entity *FindEntity(const std::string &id) const;

  // 0 when the predicate is undeclared.
  int Arity(const std::string &predicate) const;

  const std::map<std::string, Entity> &entities() const { return entities_; }
  const std::map<std::string, EntitySet> &unary_facts() const {
    return unary_facts_;
  }
  const std::map<std::string, std::set<std::pair<std::string, std::string>>>
      &binary_facts() const {
    return binary_facts_;
  }

  // Subjects s with predicate(s, object).
  const EntitySet &Subjects(const std::string &predicate,
                            const std::string &object) const;

  // Entity ids whose name equals the argument, compared case-insensitively.
  std::vector<std::string> IdsByName(const std::string &name) const;

 private:
  void Declare(const std::string &predicate, int arity);

  std::map<std::string, Entity> entities_;
  std::map<std::string, int> arity_;
  std::map<std::string, EntitySet> unary_facts_;
  std::map<std::string, std::set<std::pair<std::string, std::string>>>
      binary_facts_;
  // predicate -> object -> subjects
  std::map<std::string, std::map<std::string, EntitySet>> by_object_;
  std::multimap<std::string, std::string> by_name_;
};

// Executes a logical form against the knowledge base. Pure; never mutates kb.
// Throws UnknownSymbol for unresolved ids and MalformedForm when the form
// breaks the arity, count-placement, or depth invariants.
Denotation Execute(const LogicalForm &lf, const KnowledgeBase &kb,
                   int max_depth = LogicalForm::kDefaultMaxDepth);

// Reads the tab-separated KB format:
//   entity<TAB>id<TAB>name
//   unary<TAB>pred<TAB>entity
//   binary<TAB>pred<TAB>subject<TAB>object
// '#' lines and blank lines are ignored. Facts may precede the entities they
// mention. Throws ParseError with the offending line number.
KnowledgeBase ReadKnowledgeBase(std::istream &in,
                                const std::string &source = "<kb>");
KnowledgeBase LoadKnowledgeBase(const std::string &path);

}  // namespace semrw

#endif  // SEMRW_KB_H_
