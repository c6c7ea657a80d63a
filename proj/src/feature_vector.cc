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

#include "semrw/feature_vector.h"

#include "io_util.h"

namespace semrw {

FeatureVector::FeatureVector(std::initializer_list<Map::value_type> init) {
  for (const auto &[id, value] : init) Add(id, value);
}

double FeatureVector::Get(const std::string &id) const {
  auto it = values_.find(id);
  return it == values_.end() ? 0.0 : it->second;
}

void FeatureVector::Set(const std::string &id, double value) {
  if (value == 0.0) {
    values_.erase(id);
  } else {
    values_[id] = value;
  }
}

void FeatureVector::Add(const std::string &id, double value) {
  if (value == 0.0) return;
  auto [it, inserted] = values_.emplace(id, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) values_.erase(it);
  }
}

void FeatureVector::AddScaled(const FeatureVector &other, double scale) {
  if (scale == 0.0) return;
  for (const auto &[id, value] : other.values_) Add(id, scale * value);
}

double FeatureVector::Dot(const FeatureVector &other) const {
  const Map &small = values_.size() <= other.values_.size() ? values_
                                                            : other.values_;
  const Map &large = &small == &values_ ? other.values_ : values_;
  double sum = 0.0;
  for (const auto &[id, value] : small) {
    auto it = large.find(id);
    if (it != large.end()) sum += value * it->second;
  }
  return sum;
}

bool FeatureVector::IsIndicator() const {
  for (const auto &[id, value] : values_) {
    if (value != 1.0) return false;
  }
  return true;
}

std::string FeatureVector::ToString() const {
  std::string out;
  for (const auto &[id, value] : values_) {
    if (!out.empty()) out += ';';
    out += id;
    out += '=';
    out += internal::FormatDouble(value);
  }
  return out;
}

}  // namespace semrw
