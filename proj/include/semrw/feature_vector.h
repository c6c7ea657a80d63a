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

#ifndef SEMRW_FEATURE_VECTOR_H_
#define SEMRW_FEATURE_VECTOR_H_

#include <map>
#include <string>

namespace semrw {

// Sparse real vector keyed by feature id. Iteration order is the sorted id
// order, so serializations and dot products are reproducible. Zero entries
// are never stored.
class FeatureVector {
 public:
  using Map = std::map<std::string, double>;

  FeatureVector() = default;
  FeatureVector(std::initializer_list<Map::value_type> init);

  double Get(const std::string &id) const;
  void Set(const std::string &id, double value);
  void Add(const std::string &id, double value);

  // this += scale * other
  void AddScaled(const FeatureVector &other, double scale = 1.0);

  double Dot(const FeatureVector &other) const;

  bool empty() const { return values_.empty(); }
  size_t size() const { return values_.size(); }
  const Map &values() const { return values_; }
  Map::const_iterator begin() const { return values_.begin(); }
  Map::const_iterator end() const { return values_.end(); }

  // True when every stored value is exactly 1.
  bool IsIndicator() const;

  // "id=value;id=value" in id order.
  std::string ToString() const;

  bool operator==(const FeatureVector &other) const {
    return values_ == other.values_;
  }

 private:
  Map values_;
};

}  // namespace semrw

#endif  // SEMRW_FEATURE_VECTOR_H_
