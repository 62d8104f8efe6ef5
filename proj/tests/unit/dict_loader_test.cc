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

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "linkgen/dict_loader.h"
#include "linkgen/errors.h"
#include "support/fixtures.h"

namespace linkgen {
namespace {

using testing::DictFromText;

std::vector<std::pair<TokenKind, std::string>> Kinds(std::string_view text) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto &t : TokenizeDict(text)) out.emplace_back(t.kind, t.text);
  return out;
}

TEST(TokenizeDict, CommentAndBasicEntry) {
  using K = TokenKind;
  EXPECT_EQ(Kinds("% comment\nfoo.n: S+;"),
            (std::vector<std::pair<K, std::string>>{{K::kWord, "foo.n"},
                                                    {K::kColon, ":"},
                                                    {K::kConnector, "S+"},
                                                    {K::kSemicolon, ";"}}));
}

TEST(TokenizeDict, MacroDefinition) {
  using K = TokenKind;
  EXPECT_EQ(Kinds("<verb-x>: S- & O+;"),
            (std::vector<std::pair<K, std::string>>{{K::kMacroName, "verb-x"},
                                                    {K::kColon, ":"},
                                                    {K::kConnector, "S-"},
                                                    {K::kAnd, "&"},
                                                    {K::kConnector, "O+"},
                                                    {K::kSemicolon, ";"}}));
}

TEST(TokenizeDict, EmptyInput) { EXPECT_TRUE(TokenizeDict("").empty()); }

TEST(TokenizeDict, FilePathsAndPunctuation) {
  auto toks = TokenizeDict("/words/words.n.1 \"%\": {A-} or [B+] & (C-);");
  ASSERT_GE(toks.size(), 3u);
  EXPECT_EQ(toks[0].kind, TokenKind::kFilePath);
  EXPECT_EQ(toks[0].text, "/words/words.n.1");
  EXPECT_EQ(toks[1].kind, TokenKind::kWord);
  EXPECT_EQ(toks[1].text, "%");
}

TEST(TokenizeDict, Errors) {
  EXPECT_THROW(TokenizeDict("<open: S+;"), LexError);
  EXPECT_THROW(TokenizeDict("w: S$+;"), LexError);
  try {
    TokenizeDict("a: S+;\nb: $;");
    FAIL();
  } catch (const LexError &e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(TokenizeDict, SkipsDirectives) {
  std::vector<std::pair<int, std::string>> directives;
  auto toks = TokenizeDict("#define x y;\na: S+;", &directives);
  EXPECT_EQ(toks.size(), 4u);
  ASSERT_EQ(directives.size(), 1u);
  EXPECT_EQ(directives[0].first, 1);
}

TEST(ParseExpression, Examples) {
  ExprPtr e = ParseExpressionText("{C-} & (X+ or Y+)");
  auto expected = Expression::And(
      {Expression::Optional(Expression::Leaf(ParseConnector("C-"))),
       Expression::Or({Expression::Leaf(ParseConnector("X+")),
                       Expression::Leaf(ParseConnector("Y+"))})});
  EXPECT_EQ(*e, *expected);
  EXPECT_EQ(*ParseExpressionText("S+"), *Expression::Leaf(ParseConnector("S+")));
  EXPECT_THROW(ParseExpressionText("(S+ or"), ParseError);
}

TEST(ParseExpression, Precedence) {
  // '&' binds tighter than 'or'.
  ExprPtr e = ParseExpressionText("A+ & B+ or C+");
  ASSERT_EQ(e->kind(), Expression::Kind::kOr);
  EXPECT_EQ(e->children().size(), 2u);
  EXPECT_EQ(e->children()[0]->kind(), Expression::Kind::kAnd);
}

TEST(ParseExpression, NestedCostLevel) {
  ExprPtr e = ParseExpressionText("[[A+]]");
  ASSERT_EQ(e->kind(), Expression::Kind::kCost);
  EXPECT_EQ(e->level(), 2);
}

TEST(ParseExpression, MisplacedOperators) {
  EXPECT_THROW(ParseExpressionText("& A+"), ParseError);
  EXPECT_THROW(ParseExpressionText("A+ or"), ParseError);
  EXPECT_THROW(ParseExpressionText("{A+"), ParseError);
  EXPECT_THROW(ParseExpressionText("A+ ]"), ParseError);
}

TEST(MakeDict, DeterminerAndNoun) {
  Dictionary d = DictFromText("a: D+;\nhuman.n: D- ;");
  auto a = Lookup(d, "a");
  auto human = Lookup(d, "human");
  ASSERT_EQ(a.size(), 1u);
  ASSERT_EQ(human.size(), 1u);
  EXPECT_TRUE(MatchConnectors(a[0]->disjuncts[0].right[0],
                              human[0]->disjuncts[0].left[0]));
}

TEST(MakeDict, MacrosAndStats) {
  DictSource source;
  source.main_text =
      "<n>: {D-} & (S+ or O-);\n"
      "cat dog: <n>;\n"
      "ice_cream: <n> or [A+];\n"
      "runs: S-;\n";
  LoadResult r = MakeDict(source);
  EXPECT_EQ(r.report.rule_count, 3u);
  EXPECT_EQ(r.report.word_form_count, 3u);
  EXPECT_EQ(r.report.phrase_count, 1u);
  EXPECT_EQ(r.report.macro_count, 1u);
  for (const Rule &rule : r.dictionary.rules()) {
    EXPECT_FALSE(rule.expression->ContainsMacroRefs());
    EXPECT_EQ(rule.disjuncts, ExpandDisjuncts(*rule.expression));
  }
  auto phrase = Lookup(r.dictionary, "ice_cream");
  ASSERT_EQ(phrase.size(), 1u);
  EXPECT_EQ(phrase[0]->words, (std::vector<std::string>{"ice_cream"}));
}

TEST(MakeDict, FormInSeveralEntriesAccumulatesRules) {
  Dictionary d = DictFromText("saw.v: S- & O+;\nsaw.n: D-;\nsaw: A+;");
  EXPECT_EQ(Lookup(d, "saw").size(), 3u);
  EXPECT_EQ(Lookup(d, "saw.v").size(), 1u);
  EXPECT_EQ(Lookup(d, "SAW").size(), 3u);
  EXPECT_TRUE(Lookup(d, "zzz").empty());
}

TEST(MakeDict, ExactCasePreferred) {
  Dictionary d = DictFromText("May: S+;\nmay: I+;");
  auto upper = Lookup(d, "May");
  ASSERT_FALSE(upper.empty());
  EXPECT_EQ(upper[0]->disjuncts[0].ToString(), "S+");
  auto lower = Lookup(d, "may");
  ASSERT_FALSE(lower.empty());
  EXPECT_EQ(lower[0]->disjuncts[0].ToString(), "I+");
}

TEST(MakeDict, Includes) {
  DictSource source;
  source.main_text = "/words/nouns: D- & S+;\nthe: D+;";
  source.include_resolver = [](const std::string &path)
      -> std::optional<std::string> {
    if (path == "/words/nouns") return "cat dog\nmouse.n\n";
    return std::nullopt;
  };
  LoadResult r = MakeDict(source);
  EXPECT_EQ(r.report.word_form_count, 4u);
  EXPECT_EQ(Lookup(r.dictionary, "mouse").size(), 1u);

  source.main_text = "/words/verbs: S-;";
  EXPECT_THROW(MakeDict(source), MissingInclude);
}

TEST(MakeDict, ErrorsCarryLocation) {
  DictSource source;
  source.main_name = "t.dict";
  source.main_text = "a: S+;\nb: <nope>;";
  try {
    MakeDict(source);
    FAIL();
  } catch (const UnknownMacro &e) {
    EXPECT_NE(std::string(e.what()).find("t.dict:2"), std::string::npos)
        << e.what();
  }
  source.main_text = "<a>: <b>;\n<b>: <a>;\nw: <a>;";
  EXPECT_THROW(MakeDict(source), CyclicMacro);
  source.main_text = "w: (S+ or;";
  EXPECT_THROW(MakeDict(source), ParseError);
}

TEST(MakeDict, DirectivesBecomeWarnings) {
  DictSource source;
  source.main_text = "#define dictionary-version 5;\na: S+;";
  LoadResult r = MakeDict(source);
  EXPECT_EQ(r.report.rule_count, 1u);
  EXPECT_EQ(r.report.warnings.size(), 1u);
}

TEST(MakeDict, DeterministicAndLookupListsForm) {
  auto load = [] { return testing::DictFromFile(testing::ToyDict()); };
  Dictionary a = load(), b = load();
  ASSERT_EQ(a.rules().size(), b.rules().size());
  for (size_t i = 0; i < a.rules().size(); ++i) {
    EXPECT_EQ(a.rules()[i].disjuncts, b.rules()[i].disjuncts);
    EXPECT_EQ(a.rules()[i].words, b.rules()[i].words);
  }
  for (const auto &[form, entries] : a.words()) {
    for (const Rule *r : Lookup(a, form)) {
      bool listed = false;
      for (const auto &w : r->words) listed |= ToLowerAscii(BaseForm(w)) == form;
      EXPECT_TRUE(listed) << form;
    }
  }
}

std::map<std::string, std::set<Disjunct>> DisjunctsByForm(const Dictionary &d) {
  std::map<std::string, std::set<Disjunct>> out;
  for (const Rule &r : d.rules()) {
    for (const auto &w : r.words) {
      out[w].insert(r.disjuncts.begin(), r.disjuncts.end());
    }
  }
  return out;
}

TEST(DumpDictionary, ReloadGivesSameDisjuncts) {
  for (const auto &path : {testing::ToyDict(), testing::SmallWorldDict()}) {
    Dictionary d = testing::DictFromFile(path);
    Dictionary back = DictFromText(DumpDictionary(d));
    EXPECT_EQ(DisjunctsByForm(d), DisjunctsByForm(back)) << path;
  }
}

TEST(LoadDictionaryFile, SmallWorldCounts) {
  LoadResult r = LoadDictionaryFile(testing::SmallWorldDict());
  EXPECT_EQ(r.report.rule_count, 5u);
  EXPECT_EQ(r.report.word_form_count, 42u);
  EXPECT_TRUE(r.report.warnings.empty());
}

TEST(LoadDictionaryFile, MissingFile) {
  try {
    LoadDictionaryFile("/nonexistent/x.dict");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("cannot read dictionary"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace linkgen
