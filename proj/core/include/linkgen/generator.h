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

// Surface realization: every ordering of a bag of words that has a linkage.

#ifndef LINKGEN_GENERATOR_H_
#define LINKGEN_GENERATOR_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkgen/dict_model.h"

namespace linkgen {

using Sentence = std::vector<std::string>;

struct WordBag {
  std::vector<std::string> tokens;  // multiset; order is irrelevant
  std::optional<std::string> source;
};

enum class GenerationOutcome { kNone, kSingle, kMultiple, kTooMany };

struct GenerationResult {
  std::vector<Sentence> candidates;  // lexicographic, distinct
  bool truncated = false;
  GenerationOutcome outcome = GenerationOutcome::kNone;
  size_t orderings_checked = 0;  // completed orderings handed to the solver
};

inline constexpr size_t kUnlimited = std::numeric_limits<size_t>::max();

struct GenerateOptions {
  size_t cap = 25;      // kUnlimited disables truncation
  size_t max_bag = 10;
  // Pins the dictionary's LEFT-WALL token in front of every ordering.
  bool left_wall = false;
};

inline constexpr std::string_view kLeftWall = "LEFT-WALL";

// Throws EmptySentence, BagTooLarge, or UnknownWord listing every distinct
// token without rules.
GenerationResult Generate(const Dictionary &dict, const WordBag &bag,
                          const GenerateOptions &options = {});

enum class ReferenceOutcome {
  kSingleCorrect,
  kMultipleOneCorrect,
  kMultipleNoneCorrect,
  kNoSentences,
  kTooMany,
};

// TOO_MANY wins over every other class. A lone candidate that differs from
// the reference counts as MULTIPLE_NONE_CORRECT.
ReferenceOutcome ClassifyAgainstReference(const GenerationResult &result,
                                          const Sentence &reference);

std::string_view OutcomeName(GenerationOutcome outcome);
std::string_view OutcomeName(ReferenceOutcome outcome);
std::optional<ReferenceOutcome> ParseReferenceOutcome(std::string_view name);

}  // namespace linkgen

#endif  // LINKGEN_GENERATOR_H_
