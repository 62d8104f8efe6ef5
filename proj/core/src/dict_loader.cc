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

#include "linkgen/dict_loader.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "linkgen/errors.h"

namespace linkgen {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsConnectorChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '*' ||
         c == '@';
}

std::string Describe(const DictToken &t) {
  switch (t.kind) {
    case TokenKind::kWord: return "word '" + t.text + "'";
    case TokenKind::kMacroName: return "<" + t.text + ">";
    case TokenKind::kConnector: return "connector " + t.text;
    case TokenKind::kFilePath: return "path " + t.text;
    case TokenKind::kColon: return "':'";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kAnd: return "'&'";
    case TokenKind::kOr: return "'or'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
  }
  return "token";
}

class Lexer {
 public:
  Lexer(std::string_view text,
        std::vector<std::pair<int, std::string>> *directives)
      : text_(text), directives_(directives) {}

  std::vector<DictToken> Run() {
    std::vector<DictToken> out;
    bool in_expression = false;
    while (true) {
      SkipBlanksAndComments();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      const int line = line_, column = column_;
      auto emit = [&](TokenKind kind, std::string s) {
        out.push_back({kind, std::move(s), line, column});
      };
      if (!in_expression && c == '#' && AtLineStart()) {
        std::string directive = ReadToEndOfLine();
        if (directives_ != nullptr) directives_->emplace_back(line, directive);
        continue;
      }
      if (c == ';') {
        Advance();
        emit(TokenKind::kSemicolon, ";");
        in_expression = false;
        continue;
      }
      if (c == ':') {
        Advance();
        emit(TokenKind::kColon, ":");
        in_expression = true;
        continue;
      }
      if (c == '<') {
        emit(TokenKind::kMacroName, ReadMacroName());
        continue;
      }
      if (in_expression) {
        LexExpressionToken(c, line, column, out);
      } else if (c == '"') {
        emit(TokenKind::kWord, ReadQuoted());
      } else if (c == '/') {
        emit(TokenKind::kFilePath, ReadBareWord());
      } else {
        emit(TokenKind::kWord, ReadBareWord());
      }
    }
    return out;
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool AtLineStart() const {
    for (size_t i = pos_; i > 0; --i) {
      const char p = text_[i - 1];
      if (p == '\n') return true;
      if (p != ' ' && p != '\t') return false;
    }
    return true;
  }

  void SkipBlanksAndComments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (IsSpace(c)) {
        Advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string ReadToEndOfLine() {
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      s += text_[pos_];
      Advance();
    }
    return s;
  }

  std::string ReadMacroName() {
    const int line = line_, column = column_;
    Advance();  // '<'
    std::string name;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      if (IsSpace(text_[pos_])) break;
      name += text_[pos_];
      Advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '>') {
      throw LexError(line, column, "unterminated macro name");
    }
    Advance();  // '>'
    if (name.empty()) throw LexError(line, column, "empty macro name");
    return name;
  }

  std::string ReadQuoted() {
    const int line = line_, column = column_;
    Advance();  // opening quote
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
      s += text_[pos_];
      Advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '"') {
      throw LexError(line, column, "unterminated quoted word");
    }
    Advance();
    return s;
  }

  std::string ReadBareWord() {
    std::string s;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (IsSpace(c) || c == ':' || c == ';' || c == '%') break;
      s += c;
      Advance();
    }
    return s;
  }

  void LexExpressionToken(char c, int line, int column,
                          std::vector<DictToken> &out) {
    auto single = [&](TokenKind kind) {
      Advance();
      out.push_back({kind, std::string(1, c), line, column});
    };
    switch (c) {
      case '&': return single(TokenKind::kAnd);
      case '(': return single(TokenKind::kLParen);
      case ')': return single(TokenKind::kRParen);
      case '{': return single(TokenKind::kLBrace);
      case '}': return single(TokenKind::kRBrace);
      case '[': return single(TokenKind::kLBracket);
      case ']': return single(TokenKind::kRBracket);
      default: break;
    }
    if (!IsConnectorChar(c)) {
      throw LexError(line, column,
                     std::string("illegal character '") + c + "'");
    }
    std::string s;
    while (pos_ < text_.size() && IsConnectorChar(text_[pos_])) {
      s += text_[pos_];
      Advance();
    }
    if (s == "or") {
      out.push_back({TokenKind::kOr, s, line, column});
      return;
    }
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      s += text_[pos_];
      Advance();
    }
    try {
      ParseConnector(s);
    } catch (const MalformedConnector &e) {
      throw LexError(line, column, e.what());
    }
    out.push_back({TokenKind::kConnector, s, line, column});
  }

  std::string_view text_;
  std::vector<std::pair<int, std::string>> *directives_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class ExpressionParser {
 public:
  ExpressionParser(const std::vector<DictToken> &tokens, size_t &pos,
                   const std::string &file)
      : tokens_(tokens), pos_(pos), file_(file) {}

  ExprPtr ParseTop() {
    ExprPtr e = ParseOr();
    if (AtEnd() || Peek().kind != TokenKind::kSemicolon) {
      Fail("';'");
    }
    return e;
  }

 private:
  bool AtEnd() const { return pos_ >= tokens_.size(); }
  const DictToken &Peek() const { return tokens_[pos_]; }

  std::string Location() const {
    if (AtEnd()) {
      const int line = tokens_.empty() ? 0 : tokens_.back().line;
      return file_ + ":" + std::to_string(line);
    }
    return file_ + ":" + std::to_string(Peek().line) + ":" +
           std::to_string(Peek().column);
  }

  [[noreturn]] void Fail(const std::string &expected) const {
    throw ParseError(Location(), expected,
                     AtEnd() ? "end of input" : Describe(Peek()));
  }

  void Expect(TokenKind kind, const std::string &what) {
    if (AtEnd() || Peek().kind != kind) Fail(what);
    ++pos_;
  }

  ExprPtr ParseOr() {
    std::vector<ExprPtr> terms{ParseAnd()};
    while (!AtEnd() && Peek().kind == TokenKind::kOr) {
      ++pos_;
      terms.push_back(ParseAnd());
    }
    return terms.size() == 1 ? terms.front() : Expression::Or(std::move(terms));
  }

  ExprPtr ParseAnd() {
    std::vector<ExprPtr> terms{ParseUnary()};
    while (!AtEnd() && Peek().kind == TokenKind::kAnd) {
      ++pos_;
      terms.push_back(ParseUnary());
    }
    return terms.size() == 1 ? terms.front()
                             : Expression::And(std::move(terms));
  }

  ExprPtr ParseUnary() {
    if (AtEnd()) Fail("connector or '('");
    const DictToken &t = Peek();
    switch (t.kind) {
      case TokenKind::kConnector:
        ++pos_;
        return Expression::Leaf(ParseConnector(t.text));
      case TokenKind::kMacroName:
        ++pos_;
        return Expression::MacroRef(t.text);
      case TokenKind::kLParen: {
        ++pos_;
        if (!AtEnd() && Peek().kind == TokenKind::kRParen) {
          ++pos_;
          return Expression::Empty();
        }
        ExprPtr inner = ParseOr();
        Expect(TokenKind::kRParen, "')'");
        return inner;
      }
      case TokenKind::kLBrace: {
        ++pos_;
        if (!AtEnd() && Peek().kind == TokenKind::kRBrace) {
          ++pos_;
          return Expression::Optional(Expression::Empty());
        }
        ExprPtr inner = ParseOr();
        Expect(TokenKind::kRBrace, "'}'");
        return Expression::Optional(std::move(inner));
      }
      case TokenKind::kLBracket: {
        ++pos_;
        ExprPtr inner = Expression::Empty();
        if (AtEnd() || Peek().kind != TokenKind::kRBracket) inner = ParseOr();
        Expect(TokenKind::kRBracket, "']'");
        // [[e]] is one cost node of level 2.
        if (inner->kind() == Expression::Kind::kCost) {
          return Expression::Cost(inner->child(), inner->level() + 1);
        }
        return Expression::Cost(std::move(inner), 1);
      }
      default:
        Fail("connector, macro or '(' '{' '['");
    }
  }

  const std::vector<DictToken> &tokens_;
  size_t &pos_;
  const std::string &file_;
};

std::vector<std::string> SplitWordList(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  bool comment = false;
  for (char c : text) {
    if (comment) {
      if (c == '\n') comment = false;
      continue;
    }
    if (c == '%') {
      comment = true;
    } else if (!IsSpace(c)) {
      current += c;
      continue;
    }
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

// Macro substitution with a per-load cache; definitions are kept raw so a
// redefinition only invalidates the cache.
class MacroResolver {
 public:
  void Define(const std::string &name, ExprPtr raw) {
    raw_[name] = std::move(raw);
    resolved_.clear();
  }
  bool Defined(const std::string &name) const { return raw_.count(name) > 0; }

  ExprPtr Resolve(const ExprPtr &e) {
    std::vector<std::string> active;
    return Substitute(e, active);
  }

  MacroTable ResolvedTable() {
    MacroTable table;
    for (const auto &[name, raw] : raw_) {
      std::vector<std::string> active{name};
      table.emplace(name, Substitute(raw, active));
    }
    return table;
  }

 private:
  ExprPtr Substitute(const ExprPtr &e, std::vector<std::string> &active) {
    using Kind = Expression::Kind;
    if (!e->ContainsMacroRefs()) return e;
    if (e->kind() == Kind::kMacroRef) {
      const std::string &name = e->macro();
      if (std::find(active.begin(), active.end(), name) != active.end()) {
        std::vector<std::string> chain = active;
        chain.push_back(name);
        throw CyclicMacro(std::move(chain));
      }
      if (auto it = resolved_.find(name); it != resolved_.end()) {
        return it->second;
      }
      auto it = raw_.find(name);
      if (it == raw_.end()) throw UnknownMacro(name);
      active.push_back(name);
      ExprPtr out = Substitute(it->second, active);
      active.pop_back();
      resolved_[name] = out;
      return out;
    }
    std::vector<ExprPtr> children;
    for (const auto &c : e->children()) {
      children.push_back(Substitute(c, active));
    }
    switch (e->kind()) {
      case Kind::kOptional:
        return Expression::Optional(children.front());
      case Kind::kCost:
        return Expression::Cost(children.front(), e->level());
      case Kind::kAnd:
        return Expression::And(std::move(children));
      default:
        return Expression::Or(std::move(children));
    }
  }

  std::unordered_map<std::string, ExprPtr> raw_;
  std::unordered_map<std::string, ExprPtr> resolved_;
};

std::optional<std::string> ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<DictToken> TokenizeDict(
    std::string_view text,
    std::vector<std::pair<int, std::string>> *directives) {
  return Lexer(text, directives).Run();
}

ExprPtr ParseExpression(const std::vector<DictToken> &tokens, size_t &pos,
                        const std::string &file) {
  return ExpressionParser(tokens, pos, file).ParseTop();
}

ExprPtr ParseExpressionText(std::string_view text) {
  std::string owned(text);
  while (!owned.empty() && IsSpace(owned.back())) owned.pop_back();
  if (owned.empty() || owned.back() != ';') owned += ';';
  // Tokenize as the right-hand side of a statement.
  std::vector<DictToken> tokens = TokenizeDict(": " + owned);
  size_t pos = 1;
  return ParseExpression(tokens, pos);
}

LoadResult MakeDict(const DictSource &source) {
  const std::string &file = source.main_name;
  std::vector<std::pair<int, std::string>> directives;
  std::vector<DictToken> tokens;
  try {
    tokens = TokenizeDict(source.main_text, &directives);
  } catch (Error &e) {
    e.AddContext(file);
    throw;
  }

  LoadReport report;
  for (const auto &[line, text] : directives) {
    report.warnings.push_back(
        {{file, line}, "skipped unsupported directive: " + text});
  }

  DictionaryBuilder builder;
  MacroResolver macros;
  std::unordered_map<std::string, std::vector<std::string>> include_cache;

  size_t pos = 0;
  while (pos < tokens.size()) {
    const int line = tokens[pos].line;
    const SourceLocation where{file, line};
    try {
      // Left-hand side: one macro name, or a list of words and paths.
      std::vector<const DictToken *> lhs;
      while (pos < tokens.size() && tokens[pos].kind != TokenKind::kColon) {
        const DictToken &t = tokens[pos];
        if (t.kind != TokenKind::kWord && t.kind != TokenKind::kFilePath &&
            t.kind != TokenKind::kMacroName) {
          throw ParseError(file + ":" + std::to_string(t.line), "word or ':'",
                           Describe(t));
        }
        lhs.push_back(&t);
        ++pos;
      }
      if (pos >= tokens.size()) {
        throw ParseError(file + ":" + std::to_string(line), "':'",
                         "end of input");
      }
      ++pos;  // ':'
      ExprPtr raw = ParseExpression(tokens, pos, file);
      ++pos;  // ';'
      if (lhs.empty()) {
        throw ParseError(file + ":" + std::to_string(line), "word or macro",
                         "':'");
      }

      if (lhs.size() == 1 && lhs.front()->kind == TokenKind::kMacroName) {
        const std::string &name = lhs.front()->text;
        if (macros.Defined(name)) {
          report.warnings.push_back({where, "macro <" + name + "> redefined"});
        }
        // Self-reference is a cycle even though the name is not yet defined.
        std::function<bool(const Expression &)> refers =
            [&](const Expression &e) {
              if (e.kind() == Expression::Kind::kMacroRef) {
                return e.macro() == name;
              }
              return std::any_of(
                  e.children().begin(), e.children().end(),
                  [&](const ExprPtr &c) { return refers(*c); });
            };
        if (refers(*raw)) throw CyclicMacro({name, name});
        macros.Define(name, raw);
        continue;
      }

      const size_t rule = builder.AddRule(macros.Resolve(raw), where);
      for (const DictToken *t : lhs) {
        if (t->kind == TokenKind::kMacroName) {
          throw ParseError(file + ":" + std::to_string(t->line), "word",
                           Describe(*t));
        }
        if (t->kind == TokenKind::kWord) {
          builder.Assign(t->text, rule);
          continue;
        }
        auto cached = include_cache.find(t->text);
        if (cached == include_cache.end()) {
          std::optional<std::string> text;
          if (source.include_resolver) text = source.include_resolver(t->text);
          if (!text) throw MissingInclude(t->text);
          cached = include_cache.emplace(t->text, SplitWordList(*text)).first;
          if (cached->second.empty()) {
            report.warnings.push_back(
                {where, "include " + t->text + " lists no words"});
          }
        }
        for (const auto &w : cached->second) builder.Assign(w, rule);
      }
    } catch (Error &e) {
      e.AddContext(file + ":" + std::to_string(line));
      throw;
    }
  }

  MacroTable table;
  try {
    table = macros.ResolvedTable();
  } catch (Error &e) {
    e.AddContext(file);
    throw;
  }
  builder.SetMacros(std::move(table));
  Dictionary dict = std::move(builder).Build();
  const DictionaryStats stats = dict.stats();
  report.rule_count = stats.rule_count;
  report.word_form_count = stats.word_form_count;
  report.phrase_count = stats.phrase_count;
  report.macro_count = stats.macro_count;
  return {std::move(dict), std::move(report)};
}

LoadResult LoadDictionaryFile(const std::filesystem::path &path) {
  std::optional<std::string> text = ReadFile(path);
  if (!text) throw Error("cannot read dictionary " + path.string());
  const std::filesystem::path dir = path.parent_path();
  DictSource source;
  source.main_text = std::move(*text);
  source.main_name = path.filename().string();
  source.include_resolver =
      [dir](const std::string &include) -> std::optional<std::string> {
    std::string rel = include;
    while (!rel.empty() && rel.front() == '/') rel.erase(rel.begin());
    for (const auto &base : {dir, dir.parent_path()}) {
      if (auto t = ReadFile(base / rel)) return t;
    }
    // "/en/words/x" relative to a checkout's "en" directory.
    if (auto slash = rel.find('/'); slash != std::string::npos) {
      if (auto t = ReadFile(dir / rel.substr(slash + 1))) return t;
    }
    return std::nullopt;
  };
  return MakeDict(source);
}

std::vector<const Rule *> Lookup(const Dictionary &dict,
                                 std::string_view token) {
  const std::string_view base = BaseForm(token);
  const bool subscripted = base.size() != token.size();
  const std::string key = ToLowerAscii(base);
  const std::string lowered_token = ToLowerAscii(token);

  std::vector<const WordEntry *> hits;
  for (const auto *map : {&dict.words(), &dict.phrases()}) {
    auto it = map->find(key);
    if (it == map->end()) continue;
    for (const auto &entry : it->second) {
      if (subscripted && ToLowerAscii(entry.form) != lowered_token) continue;
      hits.push_back(&entry);
    }
  }
  const bool any_exact =
      std::any_of(hits.begin(), hits.end(), [&](const WordEntry *e) {
        return BaseForm(e->form) == base;
      });

  std::vector<const Rule *> rules;
  for (const WordEntry *e : hits) {
    if (any_exact && BaseForm(e->form) != base) continue;
    const Rule *r = &dict.rules()[e->rule];
    if (std::find(rules.begin(), rules.end(), r) == rules.end()) {
      rules.push_back(r);
    }
  }
  return rules;
}

std::string DumpDictionary(const Dictionary &dict) {
  std::string out;
  for (const auto &[name, expr] : dict.macros()) {
    out += "% <" + name + ">: " + expr->ToString() + ";\n";
  }
  for (const Rule &rule : dict.rules()) {
    if (rule.words.empty()) continue;
    for (size_t i = 0; i < rule.words.size(); ++i) {
      out += i == 0 ? "" : " ";
      out += "\"" + rule.words[i] + "\"";
    }
    out += ":\n  " + rule.expression->ToString() + ";\n";
  }
  return out;
}

}  // namespace linkgen
