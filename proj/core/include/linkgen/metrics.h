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

// Sentence-level similarity scores over token lists.

#ifndef LINKGEN_METRICS_H_
#define LINKGEN_METRICS_H_

#include <cstddef>
#include <span>
#include <string>

namespace linkgen {

using Tokens = std::span<const std::string>;

// Token-level Levenshtein distance with unit costs.
size_t EditDistance(Tokens a, Tokens b);

// BLEU with unigrams and bigrams: geometric mean of clipped precisions times
// the brevity penalty min(1, exp(1 - r/c)). When neither side has a bigram
// the bigram precision is taken as 1. Throws EmptySentence.
double Bleu2(Tokens candidate, Tokens reference);

// EditDistance / |reference|. Throws EmptyReference.
double Wer(Tokens candidate, Tokens reference);

// Number of block shifts plus remaining edits, over |reference|. Shifts are
// chosen greedily: the shift with the largest edit-distance reduction is
// applied while one reduces it. All block lengths are tried up to
// kMaxShiftBlock. Throws EmptyReference.
inline constexpr size_t kMaxShiftBlock = 12;
size_t TerEdits(Tokens candidate, Tokens reference);
double Ter(Tokens candidate, Tokens reference);

}  // namespace linkgen

#endif  // LINKGEN_METRICS_H_
