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

#ifndef LINKGEN_TESTS_SUPPORT_FIXTURES_H_
#define LINKGEN_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "linkgen/dict_loader.h"
#include "support/generators.h"

namespace linkgen::testing {

inline std::filesystem::path DataDir() { return LINKGEN_DATA_DIR; }

inline std::filesystem::path SmallWorldDict() {
  return DataDir() / "small_world" / "poc-english_5C.dict";
}
inline std::filesystem::path SmallWorldCorpus() {
  return DataDir() / "small_world" / "poc_english.txt";
}
inline std::filesystem::path ToyDict() { return DataDir() / "toy" / "toy.dict"; }
inline std::filesystem::path EnglishDict() {
  return DataDir() / "en" / "4.0.dict";
}

// "The cat caught a mouse."
inline constexpr std::string_view kCatMouseDict = R"(
the: D+;
a: Ds+;
cat mouse: Ds- & (Ss+ or Os-);
caught: S- & O+;
)";

// "is a human": the verb and the determiner both link to the noun.
inline constexpr std::string_view kIsAHumanDict = R"(
is.v: Osm+;
a: Ds**c+;
human.n: Ds- & Os-;
)";

// Six clusters: names, a common noun, a determiner, a control verb, the
// infinitive marker and an infinitive verb.
inline constexpr std::string_view kFamilyDict = R"(
mom dad: Ss+ or Op-;
company: D- & Oc-;
the: D+;
wants: S- & Op+ & TO+;
to: TO- & I+;
join: I- & Oc+;
)";

inline std::vector<std::string> ToyWords() {
  return {"the",  "a",   "cat",   "dog", "mouse",  "john",
          "mary", "big", "black", "saw", "chased", "quickly"};
}

// A grammatical toy sentence, "det adj* noun verb [object] [quickly]" with
// some variation; callers shuffle it to get a bag that has a solution.
inline std::vector<std::string> ToySentence(Gen &gen, size_t max_len) {
  auto noun_phrase = [&gen](std::vector<std::string> &out) {
    if (gen.Coin()) {
      out.push_back(gen.Coin() ? "john" : "mary");
      return;
    }
    out.push_back(gen.Coin() ? "the" : "a");
    if (gen.Int(0, 2) == 0) out.push_back(gen.Coin() ? "big" : "black");
    out.push_back(gen.Pick(std::vector<std::string>{"cat", "dog", "mouse"}));
  };
  std::vector<std::string> s;
  noun_phrase(s);
  s.push_back(gen.Coin() ? "saw" : "chased");
  if (gen.Coin()) noun_phrase(s);
  if (gen.Int(0, 3) == 0) s.push_back("quickly");
  if (s.size() > max_len) s.resize(max_len);
  return s;
}

inline Dictionary DictFromText(std::string_view text) {
  DictSource source;
  source.main_text = std::string(text);
  return MakeDict(source).dictionary;
}

inline Dictionary DictFromFile(const std::filesystem::path &path) {
  return LoadDictionaryFile(path).dictionary;
}

}  // namespace linkgen::testing

#endif  // LINKGEN_TESTS_SUPPORT_FIXTURES_H_
