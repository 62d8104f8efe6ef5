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

// Reader for Link Grammar dictionary text.
//
// A dictionary is a sequence of ';'-terminated statements:
//
//   % comment to end of line
//   <macro-name>: expression;
//   word word.subscript /words/list-file "quoted": expression;
//
// Expressions combine connectors (S+, @A-, Ds**c-) and macro references with
// '&', 'or', {optional}, [cost] and (grouping). Lines starting with '#' are
// directives from newer dictionary versions; they are skipped with a warning.

#ifndef LINKGEN_DICT_LOADER_H_
#define LINKGEN_DICT_LOADER_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkgen/dict_model.h"

namespace linkgen {

enum class TokenKind {
  kWord,
  kMacroName,
  kConnector,
  kFilePath,
  kColon,
  kSemicolon,
  kAnd,
  kOr,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
};

struct DictToken {
  TokenKind kind;
  std::string text;  // word, macro name (without <>), connector or path
  int line = 0;
  int column = 0;

  bool operator==(const DictToken &o) const {
    return kind == o.kind && text == o.text;
  }
};

// Throws LexError. A directive line (first non-blank character '#') is
// dropped and reported through `directives` when given.
std::vector<DictToken> TokenizeDict(
    std::string_view text,
    std::vector<std::pair<int, std::string>> *directives = nullptr);

// Parses one expression from tokens[pos...] up to (not including) the
// terminating ';'. On return `pos` indexes the ';'. Throws ParseError.
ExprPtr ParseExpression(const std::vector<DictToken> &tokens, size_t &pos,
                        const std::string &file = "<input>");

// Convenience: parses "expr" or "expr;" from text.
ExprPtr ParseExpressionText(std::string_view text);

struct DictSource {
  std::string main_text;
  std::string main_name = "<dict>";
  // Maps an include path such as "/words/words.n.1" to the file's text.
  std::function<std::optional<std::string>(const std::string &)>
      include_resolver;
  std::string language_tag = "en";
};

struct LoadWarning {
  SourceLocation location;
  std::string message;
};

struct LoadReport {
  size_t rule_count = 0;
  size_t word_form_count = 0;
  size_t phrase_count = 0;
  size_t macro_count = 0;
  std::vector<LoadWarning> warnings;
};

struct LoadResult {
  Dictionary dictionary;
  LoadReport report;
};

// Builds a dictionary: macro statements populate the macro table, entry
// statements get a macro-free rule assigned to every listed form and every
// form read from listed include files. Errors carry file and line context.
LoadResult MakeDict(const DictSource &source);

// Reads a dictionary from disk. Include paths are resolved against the
// master file's directory and its parent.
LoadResult LoadDictionaryFile(const std::filesystem::path &path);

// All rules for a token: the token's base form is matched against entry base
// forms case-insensitively (exact case preferred), words before phrases. A
// subscripted token ("is.v") only matches that sense.
std::vector<const Rule *> Lookup(const Dictionary &dict,
                                 std::string_view token);

// Debug dump in dictionary syntax; reloading it yields the same disjuncts
// per form.
std::string DumpDictionary(const Dictionary &dict);

}  // namespace linkgen

#endif  // LINKGEN_DICT_LOADER_H_
