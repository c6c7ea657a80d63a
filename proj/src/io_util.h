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

// Small helpers shared by the line-oriented file readers.

#ifndef SEMRW_SRC_IO_UTIL_H_
#define SEMRW_SRC_IO_UTIL_H_

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "semrw/errors.h"

namespace semrw {
namespace internal {

inline std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Strips a trailing '\r' left by CRLF files.
inline void ChompCr(std::string *line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

inline bool IsSkippable(const std::string &line) {
  return line.empty() || line[0] == '#';
}

inline std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

inline std::ofstream OpenOutput(const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

// Shortest representation that reads back to the same double.
std::string FormatDouble(double value);

// Strict parse of a whole field; throws std::invalid_argument.
double ParseDouble(const std::string &text);

}  // namespace internal
}  // namespace semrw

#endif  // SEMRW_SRC_IO_UTIL_H_
