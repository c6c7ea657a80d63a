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

#include "semrw/logical_form.h"

#include <algorithm>
#include <utility>

#include "semrw/errors.h"

namespace semrw {

LogicalForm LogicalForm::Entity(std::string id) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kEntity;
  node->text = "ent:" + id;
  node->symbol = std::move(id);
  return LogicalForm(std::move(node));
}

LogicalForm LogicalForm::Unary(std::string predicate) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kUnary;
  node->text = "un:" + predicate;
  node->symbol = std::move(predicate);
  return LogicalForm(std::move(node));
}

LogicalForm LogicalForm::Join(std::string predicate, LogicalForm child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kJoin;
  node->text = "join(" + predicate + ", " + child.ToString() + ")";
  node->symbol = std::move(predicate);
  node->depth = child.depth() + 1;
  node->left = std::make_shared<const LogicalForm>(std::move(child));
  return LogicalForm(std::move(node));
}

LogicalForm LogicalForm::Intersect(LogicalForm left, LogicalForm right) {
  if (right.ToString() < left.ToString()) std::swap(left, right);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kIntersect;
  node->text = "and(" + left.ToString() + ", " + right.ToString() + ")";
  node->depth = std::max(left.depth(), right.depth()) + 1;
  node->left = std::make_shared<const LogicalForm>(std::move(left));
  node->right = std::make_shared<const LogicalForm>(std::move(right));
  return LogicalForm(std::move(node));
}

LogicalForm LogicalForm::Count(LogicalForm child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kCount;
  node->text = "count(" + child.ToString() + ")";
  node->depth = child.depth() + 1;
  node->left = std::make_shared<const LogicalForm>(std::move(child));
  return LogicalForm(std::move(node));
}

bool LogicalForm::IsAtomic() const {
  switch (kind()) {
    case Kind::kUnary:
      return true;
    case Kind::kJoin:
      return child().kind() == Kind::kEntity;
    default:
      return false;
  }
}

namespace {

void CheckNoCount(const LogicalForm &lf) {
  switch (lf.kind()) {
    case LogicalForm::Kind::kEntity:
    case LogicalForm::Kind::kUnary:
      return;
    case LogicalForm::Kind::kJoin:
      CheckNoCount(lf.child());
      return;
    case LogicalForm::Kind::kIntersect:
      CheckNoCount(lf.left());
      CheckNoCount(lf.right());
      return;
    case LogicalForm::Kind::kCount:
      throw MalformedForm("count below the root in " + lf.ToString());
  }
}

}  // namespace

void LogicalForm::Validate(int max_depth) const {
  if (depth() > max_depth) {
    throw MalformedForm("depth " + std::to_string(depth()) + " exceeds " +
                        std::to_string(max_depth) + " in " + ToString());
  }
  if (kind() == Kind::kCount) {
    CheckNoCount(child());
  } else {
    CheckNoCount(*this);
  }
}

const char *KindName(LogicalForm::Kind kind) {
  switch (kind) {
    case LogicalForm::Kind::kEntity: return "ent";
    case LogicalForm::Kind::kUnary: return "un";
    case LogicalForm::Kind::kJoin: return "join";
    case LogicalForm::Kind::kIntersect: return "and";
    case LogicalForm::Kind::kCount: return "count";
  }
  return "?";
}

}  // namespace semrw
