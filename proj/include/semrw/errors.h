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

#ifndef SEMRW_ERRORS_H_
#define SEMRW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace semrw {

// Malformed line in one of the line-oriented resource files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &source, int line, const std::string &what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Entity or predicate id that does not resolve in the knowledge base.
class UnknownSymbol : public std::runtime_error {
 public:
  explicit UnknownSymbol(const std::string &symbol)
      : std::runtime_error("unknown symbol: " + symbol), symbol_(symbol) {}

  const std::string &symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// Logical form violating the structural invariants (arity, count placement,
// depth limit).
class MalformedForm : public std::runtime_error {
 public:
  explicit MalformedForm(const std::string &what)
      : std::runtime_error("malformed logical form: " + what) {}
};

// Template pair requested from a database that does not contain it.
class MissingPair : public std::runtime_error {
 public:
  MissingPair(const std::string &t1, const std::string &t2)
      : std::runtime_error("template pair not in database: " + t1 + " | " +
                           t2) {}
};

// I/O failure opening or writing a resource file.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace semrw

#endif  // SEMRW_ERRORS_H_
