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

#include <sstream>

#include "cli_commands.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace linkgen::cli {
namespace {

struct Output {
  int code;
  std::string out, err;
};

Output Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string SmallWorld() { return testing::SmallWorldDict().string(); }

TEST(Cli, DictInfo) {
  Output o = Call({"dict-info", "--dict", SmallWorld()});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("rules: 5, word forms: 42"), std::string::npos) << o.out;
  Output j = Call({"dict-info", "--dict", SmallWorld(), "--format", "json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_EQ(j.out.front(), '{');
}

TEST(Cli, MissingDictionary) {
  Output o = Call({"dict-info", "--dict", "/nonexistent/x.dict"});
  EXPECT_EQ(o.code, kLoadError);
  EXPECT_NE(o.err.find("cannot read dictionary"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Call({"generate", "--dict", SmallWorld()}).code, kUsage);
  EXPECT_EQ(Call({"dict-info", "--dict", SmallWorld(), "--format", "xml"}).code,
            kUsage);
  EXPECT_EQ(Call({"--help"}).code, kOk);
}

TEST(Cli, Generate) {
  Output o = Call({"generate", "--dict", SmallWorld(), "mom", "is", "a",
                   "human"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "mom is a human\noutcome: SINGLE\n");
}

TEST(Cli, GenerateFailures) {
  Output unknown = Call({"generate", "--dict", SmallWorld(), "the", "zzz"});
  EXPECT_EQ(unknown.code, kLoadError);
  EXPECT_NE(unknown.err.find("zzz"), std::string::npos);
  EXPECT_EQ(Call({"generate", "--dict", SmallWorld(), "a", "the"}).code,
            kNothingGenerated);
  EXPECT_EQ(Call({"generate", "--dict", SmallWorld(), "--max-bag", "2", "mom",
                  "is", "a"})
                .code,
            kUsage);
}

TEST(Cli, EvaluateJsonDeterministic) {
  std::vector<std::string> args = {
      "evaluate", "--dict",   SmallWorld(), "--corpus",
      testing::SmallWorldCorpus().string(), "--format", "json", "--quiet"};
  Output a = Call(args), b = Call(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.err.empty());
  Output missing = Call({"evaluate", "--dict", SmallWorld(), "--corpus",
                         "/nonexistent/c.txt", "--quiet"});
  EXPECT_EQ(missing.code, kLoadError);
}

}  // namespace
}  // namespace linkgen::cli
