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

#include "linkgen/dict_model.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "linkgen/errors.h"

namespace linkgen {

namespace {

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

std::string Connector::ToString() const {
  std::string out;
  out.reserve(head.size() + subscript.size() + 2);
  if (multi) out += '@';
  out += head;
  out += subscript;
  out += direction == Direction::kRight ? '+' : '-';
  return out;
}

Connector ParseConnector(std::string_view text) {
  std::string owned(text);
  Connector c;
  size_t i = 0;
  if (i < text.size() && text[i] == '@') {
    c.multi = true;
    ++i;
  }
  if (i >= text.size()) throw MalformedConnector(owned, "empty connector");
  if (!IsUpper(text[i])) {
    throw MalformedConnector(owned, "connector must start with an uppercase "
                                    "letter");
  }
  while (i < text.size() && IsUpper(text[i])) c.head += text[i++];
  while (i < text.size() && (IsLower(text[i]) || text[i] == '*')) {
    c.subscript += text[i++];
  }
  if (i == text.size()) throw MalformedConnector(owned, "missing direction");
  if (text[i] == '+') {
    c.direction = Direction::kRight;
  } else if (text[i] == '-') {
    c.direction = Direction::kLeft;
  } else {
    throw MalformedConnector(owned, std::string("illegal character '") +
                                        text[i] + "'");
  }
  if (i + 1 != text.size()) {
    throw MalformedConnector(owned, "trailing characters after direction");
  }
  return c;
}

bool MatchConnectors(const Connector &left_word, const Connector &right_word) {
  if (left_word.direction != Direction::kRight ||
      right_word.direction != Direction::kLeft) {
    return false;
  }
  if (left_word.head != right_word.head) return false;
  const std::string &a = left_word.subscript;
  const std::string &b = right_word.subscript;
  const size_t common = std::min(a.size(), b.size());
  for (size_t i = 0; i < common; ++i) {
    if (a[i] != b[i] && a[i] != '*' && b[i] != '*') return false;
  }
  return true;
}

std::string LinkLabel(const Connector &left_word, const Connector &right_word) {
  const std::string &a = left_word.subscript;
  const std::string &b = right_word.subscript;
  std::string label = left_word.head;
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const char x = i < a.size() ? a[i] : '*';
    const char y = i < b.size() ? b[i] : '*';
    label += x == '*' ? y : x;
  }
  while (label.size() > left_word.head.size() && label.back() == '*') {
    label.pop_back();
  }
  return label;
}

// ---------------------------------------------------------------------------
// Expression

ExprPtr Expression::Leaf(Connector connector) {
  auto e = std::shared_ptr<Expression>(new Expression);
  e->kind_ = Kind::kLeaf;
  e->connector_ = std::move(connector);
  return e;
}

ExprPtr Expression::And(std::vector<ExprPtr> children) {
  auto e = std::shared_ptr<Expression>(new Expression);
  e->kind_ = Kind::kAnd;
  e->children_ = std::move(children);
  return e;
}

ExprPtr Expression::Or(std::vector<ExprPtr> children) {
  auto e = std::shared_ptr<Expression>(new Expression);
  e->kind_ = Kind::kOr;
  e->children_ = std::move(children);
  return e;
}

ExprPtr Expression::Optional(ExprPtr child) {
  auto e = std::shared_ptr<Expression>(new Expression);
  e->kind_ = Kind::kOptional;
  e->children_.push_back(std::move(child));
  return e;
}

ExprPtr Expression::Cost(ExprPtr child, int level) {
  auto e = std::shared_ptr<Expression>(new Expression);
  e->kind_ = Kind::kCost;
  e->children_.push_back(std::move(child));
  e->level_ = level;
  return e;
}

ExprPtr Expression::Empty() {
  static const ExprPtr empty(new Expression);
  return empty;
}

ExprPtr Expression::MacroRef(std::string name) {
  auto e = std::shared_ptr<Expression>(new Expression);
  e->kind_ = Kind::kMacroRef;
  e->macro_ = std::move(name);
  return e;
}

std::string Expression::ToString() const {
  auto operand = [this](const ExprPtr &c) {
    const bool nested = c->kind() == Kind::kAnd || c->kind() == Kind::kOr;
    return nested ? "(" + c->ToString() + ")" : c->ToString();
  };
  std::string out;
  switch (kind_) {
    case Kind::kLeaf:
      return connector_.ToString();
    case Kind::kEmpty:
      return "()";
    case Kind::kMacroRef:
      return "<" + macro_ + ">";
    case Kind::kOptional:
      return "{" + child()->ToString() + "}";
    case Kind::kCost:
      return std::string(level_, '[') + child()->ToString() +
             std::string(level_, ']');
    case Kind::kAnd:
    case Kind::kOr:
      if (children_.empty()) return "()";
      for (size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += kind_ == Kind::kAnd ? " & " : " or ";
        out += operand(children_[i]);
      }
      return out;
  }
  return out;
}

bool Expression::ContainsMacroRefs() const {
  if (kind_ == Kind::kMacroRef) return true;
  return std::any_of(children_.begin(), children_.end(),
                     [](const ExprPtr &c) { return c->ContainsMacroRefs(); });
}

bool operator==(const Expression &a, const Expression &b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.level_ != b.level_ || a.macro_ != b.macro_ ||
      a.connector_ != b.connector_ ||
      a.children_.size() != b.children_.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children_.size(); ++i) {
    if (!(*a.children_[i] == *b.children_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Disjunct expansion

std::string Disjunct::ToString() const {
  std::string out;
  for (const auto &c : left) {
    if (!out.empty()) out += ' ';
    out += c.ToString();
  }
  for (const auto &c : right) {
    if (!out.empty()) out += ' ';
    out += c.ToString();
  }
  if (cost > 0) out += " [" + std::to_string(cost) + "]";
  return out;
}

namespace {

// Removes structural duplicates, keeping the first position and the lowest
// cost seen for it.
class DisjunctSet {
 public:
  void Add(Disjunct d) {
    std::string key = KeyOf(d);
    auto [it, inserted] = index_.try_emplace(std::move(key), items_.size());
    if (inserted) {
      items_.push_back(std::move(d));
    } else if (d.cost < items_[it->second].cost) {
      items_[it->second].cost = d.cost;
    }
  }
  std::vector<Disjunct> Take() && { return std::move(items_); }

 private:
  static std::string KeyOf(const Disjunct &d) {
    std::string key;
    for (const auto &c : d.left) key += c.ToString() + ' ';
    key += '|';
    for (const auto &c : d.right) key += ' ' + c.ToString();
    return key;
  }

  std::unordered_map<std::string, size_t> index_;
  std::vector<Disjunct> items_;
};

std::vector<Disjunct> Expand(const Expression &e) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::kLeaf: {
      Disjunct d;
      if (e.connector().direction == Direction::kLeft) {
        d.left.push_back(e.connector());
      } else {
        d.right.push_back(e.connector());
      }
      return {std::move(d)};
    }
    case Kind::kEmpty:
      return {Disjunct{}};
    case Kind::kMacroRef:
      throw UnknownMacro(e.macro());
    case Kind::kCost: {
      std::vector<Disjunct> out = Expand(*e.child());
      for (auto &d : out) d.cost += e.level();
      return out;
    }
    case Kind::kOptional: {
      DisjunctSet set;
      for (auto &d : Expand(*e.child())) set.Add(std::move(d));
      set.Add(Disjunct{});
      return std::move(set).Take();
    }
    case Kind::kOr: {
      DisjunctSet set;
      for (const auto &c : e.children()) {
        for (auto &d : Expand(*c)) set.Add(std::move(d));
      }
      return std::move(set).Take();
    }
    case Kind::kAnd: {
      std::vector<Disjunct> acc{Disjunct{}};
      for (const auto &c : e.children()) {
        const std::vector<Disjunct> next = Expand(*c);
        DisjunctSet set;
        // The earlier operand varies fastest: {C-} & (X+ or Y+) yields
        // C- X+, X+, C- Y+, Y+.
        for (const auto &b : next) {
          for (const auto &a : acc) {
            Disjunct d = a;
            d.left.insert(d.left.end(), b.left.begin(), b.left.end());
            d.right.insert(d.right.end(), b.right.begin(), b.right.end());
            d.cost += b.cost;
            set.Add(std::move(d));
          }
        }
        acc = std::move(set).Take();
      }
      return acc;
    }
  }
  return {};
}

ExprPtr Substitute(const ExprPtr &e, const MacroTable &macros,
                   std::vector<std::string> &active) {
  using Kind = Expression::Kind;
  switch (e->kind()) {
    case Kind::kLeaf:
    case Kind::kEmpty:
      return e;
    case Kind::kMacroRef: {
      const std::string &name = e->macro();
      if (std::find(active.begin(), active.end(), name) != active.end()) {
        std::vector<std::string> chain = active;
        chain.push_back(name);
        throw CyclicMacro(std::move(chain));
      }
      auto it = macros.find(name);
      if (it == macros.end()) throw UnknownMacro(name);
      active.push_back(name);
      ExprPtr out = Substitute(it->second, macros, active);
      active.pop_back();
      return out;
    }
    case Kind::kOptional:
    case Kind::kCost:
    case Kind::kAnd:
    case Kind::kOr: {
      if (!e->ContainsMacroRefs()) return e;
      std::vector<ExprPtr> children;
      children.reserve(e->children().size());
      for (const auto &c : e->children()) {
        children.push_back(Substitute(c, macros, active));
      }
      if (e->kind() == Kind::kOptional) {
        return Expression::Optional(std::move(children.front()));
      }
      if (e->kind() == Kind::kCost) {
        return Expression::Cost(std::move(children.front()), e->level());
      }
      return e->kind() == Kind::kAnd ? Expression::And(std::move(children))
                                     : Expression::Or(std::move(children));
    }
  }
  return e;
}

}  // namespace

std::vector<Disjunct> ExpandDisjuncts(const Expression &e) { return Expand(e); }

ExprPtr SubstituteMacros(const ExprPtr &e, const MacroTable &macros) {
  std::vector<std::string> active;
  return Substitute(e, macros, active);
}

// ---------------------------------------------------------------------------
// Dictionary

std::string_view BaseForm(std::string_view form) {
  const size_t dot = form.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == form.size()) {
    return form;
  }
  for (size_t i = dot + 1; i < form.size(); ++i) {
    const char c = form[i];
    if (!IsLower(c) && !(c >= '0' && c <= '9') && c != '-') return form;
  }
  return form.substr(0, dot);
}

std::string ToLowerAscii(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (IsUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

size_t DictionaryBuilder::AddRule(ExprPtr expression, SourceLocation origin) {
  Rule rule;
  rule.disjuncts = ExpandDisjuncts(*expression);
  rule.expression = std::move(expression);
  rule.origin = std::move(origin);
  dict_.rules_.push_back(std::move(rule));
  return dict_.rules_.size() - 1;
}

void DictionaryBuilder::Assign(const std::string &form, size_t rule) {
  const bool phrase = form.find('_') != std::string::npos;
  auto &map = phrase ? dict_.phrases_ : dict_.words_;
  auto &entries = map[ToLowerAscii(BaseForm(form))];
  for (const auto &e : entries) {
    if (e.form == form && e.rule == rule) return;
  }
  entries.push_back({form, rule});
  dict_.rules_[rule].words.push_back(form);
}

void DictionaryBuilder::SetMacros(MacroTable macros) {
  dict_.macros_ = std::move(macros);
}

Dictionary DictionaryBuilder::Build() && {
  auto count_forms = [](const Dictionary::FormMap &map) {
    std::set<std::string_view> forms;
    for (const auto &[key, entries] : map) {
      for (const auto &e : entries) forms.insert(e.form);
    }
    return forms.size();
  };
  dict_.stats_.rule_count = dict_.rules_.size();
  dict_.stats_.word_form_count = count_forms(dict_.words_);
  dict_.stats_.phrase_count = count_forms(dict_.phrases_);
  dict_.stats_.macro_count = dict_.macros_.size();
  return std::move(dict_);
}

}  // namespace linkgen
