// Copyright 2026 The linkgen Authors.
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

#ifndef LINKGEN_ERRORS_H_
#define LINKGEN_ERRORS_H_

#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace linkgen {

// Base class for every error raised by the library. Loaders prefix the
// message with source context while the dynamic type is preserved.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}
  const char *what() const noexcept override { return message_.c_str(); }
  void AddContext(const std::string &context) {
    message_ = context + ": " + message_;
  }

 private:
  std::string message_;
};

class MalformedConnector : public Error {
 public:
  MalformedConnector(std::string text, const std::string &reason)
      : Error("malformed connector '" + text + "': " + reason),
        text_(std::move(text)) {}
  const std::string &text() const { return text_; }

 private:
  std::string text_;
};

class LexError : public Error {
 public:
  LexError(int line, int column, const std::string &reason)
      : Error("lex error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + reason),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string &location, const std::string &expected,
             const std::string &found)
      : Error("parse error at " + location + ": expected " + expected +
              ", found " + found) {}
};

class UnknownMacro : public Error {
 public:
  explicit UnknownMacro(std::string name)
      : Error("unknown macro <" + name + ">"), name_(std::move(name)) {}
  const std::string &name() const { return name_; }

 private:
  std::string name_;
};

class CyclicMacro : public Error {
 public:
  explicit CyclicMacro(std::vector<std::string> chain)
      : Error("cyclic macro: " + Join(chain)), chain_(std::move(chain)) {}
  const std::vector<std::string> &chain() const { return chain_; }

 private:
  static std::string Join(const std::vector<std::string> &chain) {
    std::string out;
    for (const auto &name : chain) {
      if (!out.empty()) out += " -> ";
      out += "<" + name + ">";
    }
    return out;
  }
  std::vector<std::string> chain_;
};

class MissingInclude : public Error {
 public:
  explicit MissingInclude(std::string path)
      : Error("cannot resolve include " + path), path_(std::move(path)) {}
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

class TokenWithoutRules : public Error {
 public:
  explicit TokenWithoutRules(const std::string &token)
      : Error("token has no rules: " + token) {}
};

class UnknownWord : public Error {
 public:
  explicit UnknownWord(std::vector<std::string> tokens)
      : Error(Describe(tokens)), tokens_(std::move(tokens)) {}
  const std::vector<std::string> &tokens() const { return tokens_; }

 private:
  static std::string Describe(const std::vector<std::string> &tokens) {
    std::string out = "unknown word(s):";
    for (const auto &t : tokens) out += " " + t;
    return out;
  }
  std::vector<std::string> tokens_;
};

class BagTooLarge : public Error {
 public:
  BagTooLarge(size_t size, size_t limit)
      : Error("bag of " + std::to_string(size) + " tokens exceeds limit " +
              std::to_string(limit)) {}
};

class EmptySentence : public Error {
 public:
  EmptySentence() : Error("empty sentence") {}
};

class EmptyReference : public Error {
 public:
  EmptyReference() : Error("empty reference") {}
};

}  // namespace linkgen

#endif  // LINKGEN_ERRORS_H_
