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

#ifndef SEMRW_LOGICAL_FORM_H_
#define SEMRW_LOGICAL_FORM_H_

#include <memory>
#include <string>

namespace semrw {

// Immutable lambda-DCS tree over the subset
//
//   ent:ID | un:P | join(P, LF) | and(LF, LF) | count(LF)
//
// Subtrees are shared between copies, so copying a LogicalForm is cheap and
// derivations built on top of each other never duplicate their children.
class LogicalForm {
 public:
  enum class Kind { kEntity, kUnary, kJoin, kIntersect, kCount };

  static constexpr int kDefaultMaxDepth = 6;

  static LogicalForm Entity(std::string id);
  static LogicalForm Unary(std::string predicate);
  static LogicalForm Join(std::string predicate, LogicalForm child);
  static LogicalForm Intersect(LogicalForm left, LogicalForm right);
  static LogicalForm Count(LogicalForm child);

  Kind kind() const { return node_->kind; }

  // Entity id for kEntity, predicate id for kUnary and kJoin, empty otherwise.
  const std::string &symbol() const { return node_->symbol; }

  // Only child of kJoin and kCount; left operand of kIntersect.
  const LogicalForm &child() const { return *node_->left; }
  const LogicalForm &left() const { return *node_->left; }
  const LogicalForm &right() const { return *node_->right; }

  // Number of nodes on the longest root-to-leaf path; leaves have depth 1.
  int depth() const { return node_->depth; }

  // Canonical serialization. Intersect operands are printed in lexicographic
  // order, so commuted intersections serialize identically.
  const std::string &ToString() const { return node_->text; }

  // Single Join over an entity or a single Unary.
  bool IsAtomic() const;

  // Throws MalformedForm if Count is not at the root or the tree is deeper
  // than max_depth.
  void Validate(int max_depth = kDefaultMaxDepth) const;

  bool operator==(const LogicalForm &other) const {
    return ToString() == other.ToString();
  }
  bool operator<(const LogicalForm &other) const {
    return ToString() < other.ToString();
  }

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::shared_ptr<const LogicalForm> left;
    std::shared_ptr<const LogicalForm> right;
    int depth = 1;
    std::string text;
  };

  explicit LogicalForm(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

const char *KindName(LogicalForm::Kind kind);

}  // namespace semrw

#endif  // SEMRW_LOGICAL_FORM_H_
