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

// Value types of a Link Grammar dictionary: connectors, connector
// expressions, disjuncts, rules and the dictionary itself.

#ifndef LINKGEN_DICT_MODEL_H_
#define LINKGEN_DICT_MODEL_H_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace linkgen {

enum class Direction { kLeft, kRight };

// One half of a typed link. "@Ds*c-" has head "D", subscript "s*c",
// direction kLeft and multi set.
struct Connector {
  std::string head;
  std::string subscript;
  Direction direction = Direction::kRight;
  bool multi = false;

  std::string ToString() const;
  auto operator<=>(const Connector &) const = default;
};

// Parses a single connector token such as "S+", "@A-" or "Ds**c-".
// Throws MalformedConnector.
Connector ParseConnector(std::string_view text);

// True iff `left_word` (a right-pointing connector on the earlier word) can
// link with `right_word` (a left-pointing connector on the later word).
// Heads must be equal; subscripts are compared position by position, '*'
// and missing positions act as wildcards.
bool MatchConnectors(const Connector &left_word, const Connector &right_word);

// Label of the link formed by two matching connectors: the head followed by
// the position-wise most specific subscript.
std::string LinkLabel(const Connector &left_word, const Connector &right_word);

class Expression;
using ExprPtr = std::shared_ptr<const Expression>;

// Immutable connector expression tree. Subtrees are shared, which keeps
// macro substitution cheap.
class Expression {
 public:
  enum class Kind {
    kLeaf,      // a single connector
    kAnd,       // all children, in order
    kOr,        // exactly one child
    kOptional,  // the child or nothing: {e}
    kCost,      // the child with `level` added cost: [e], [[e]], ...
    kEmpty,     // "()": no connectors
    kMacroRef,  // <name>, only before substitution
  };

  static ExprPtr Leaf(Connector connector);
  static ExprPtr And(std::vector<ExprPtr> children);
  static ExprPtr Or(std::vector<ExprPtr> children);
  static ExprPtr Optional(ExprPtr child);
  static ExprPtr Cost(ExprPtr child, int level);
  static ExprPtr Empty();
  static ExprPtr MacroRef(std::string name);

  Kind kind() const { return kind_; }
  const Connector &connector() const { return connector_; }
  const std::vector<ExprPtr> &children() const { return children_; }
  const ExprPtr &child() const { return children_.front(); }
  int level() const { return level_; }
  const std::string &macro() const { return macro_; }

  // Dictionary source syntax, fully parenthesized where needed.
  std::string ToString() const;
  bool ContainsMacroRefs() const;

  friend bool operator==(const Expression &a, const Expression &b);

 private:
  Expression() = default;

  Kind kind_ = Kind::kEmpty;
  Connector connector_;
  std::vector<ExprPtr> children_;
  int level_ = 0;
  std::string macro_;
};

// One legal usage of a word. Both lists keep the order in which the
// connectors appear in the source expression.
struct Disjunct {
  std::vector<Connector> left;
  std::vector<Connector> right;
  int cost = 0;

  std::string ToString() const;
  auto operator<=>(const Disjunct &) const = default;
};

// All choice resolutions of `e`, depth-first and first-child-first, with
// duplicates removed (a cheaper duplicate shadows a costlier one). `e` must
// not contain macro references.
std::vector<Disjunct> ExpandDisjuncts(const Expression &e);

using MacroTable = std::map<std::string, ExprPtr, std::less<>>;

// Replaces every macro reference with its recursively substituted
// definition. Throws UnknownMacro or CyclicMacro.
ExprPtr SubstituteMacros(const ExprPtr &e, const MacroTable &macros);

struct SourceLocation {
  std::string file;
  int line = 0;
};

struct Rule {
  ExprPtr expression;
  std::vector<Disjunct> disjuncts;  // == ExpandDisjuncts(*expression)
  std::vector<std::string> words;
  SourceLocation origin;
};

// A dictionary form and the rule assigned to it by one entry.
struct WordEntry {
  std::string form;  // as written, e.g. "is.v" or "ice_cream"
  size_t rule = 0;   // index into Dictionary::rules()
};

struct DictionaryStats {
  size_t rule_count = 0;
  size_t word_form_count = 0;
  size_t phrase_count = 0;
  size_t macro_count = 0;
};

// Splits "is.v" into base "is" and subscript "v". A form without '.' (or
// starting with one, like ".") has an empty subscript.
std::string_view BaseForm(std::string_view form);

std::string ToLowerAscii(std::string_view s);

// Immutable once built. Single-word forms and underscore-joined phrases live
// in separate maps keyed by lowercased base form.
class Dictionary {
 public:
  using FormMap = std::map<std::string, std::vector<WordEntry>, std::less<>>;

  const std::vector<Rule> &rules() const { return rules_; }
  const FormMap &words() const { return words_; }
  const FormMap &phrases() const { return phrases_; }
  const MacroTable &macros() const { return macros_; }
  DictionaryStats stats() const { return stats_; }

 private:
  friend class DictionaryBuilder;

  std::vector<Rule> rules_;
  FormMap words_;
  FormMap phrases_;
  MacroTable macros_;
  DictionaryStats stats_;
};

class DictionaryBuilder {
 public:
  // Adds a rule whose expression is macro-free; returns its index.
  size_t AddRule(ExprPtr expression, SourceLocation origin);
  // Assigns `rule` to `form`; forms containing '_' are phrases.
  void Assign(const std::string &form, size_t rule);
  void SetMacros(MacroTable macros);
  Dictionary Build() &&;

 private:
  Dictionary dict_;
};

}  // namespace linkgen

#endif  // LINKGEN_DICT_MODEL_H_
