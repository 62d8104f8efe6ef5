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

// Corpus evaluation: shuffle each reference sentence, regenerate it from the
// bag, and score the candidates against the reference.

#ifndef LINKGEN_EVALUATION_H_
#define LINKGEN_EVALUATION_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "linkgen/dict_model.h"
#include "linkgen/generator.h"

namespace linkgen {

struct Normalization {
  bool lowercase = true;
  bool strip_punctuation = true;  // trailing . ! ? on the last token

  bool operator==(const Normalization &) const = default;
};

struct Corpus {
  std::string name;
  std::vector<Sentence> sentences;
  Normalization normalization;
  size_t dropped_lines = 0;  // non-blank lines empty after normalization
};

// One sentence per line; blank lines are ignored.
Corpus ParseCorpus(std::string_view text, std::string name,
                   const Normalization &normalization = {});
// Throws Error("cannot read corpus ...") if the file is unreadable.
Corpus LoadCorpus(const std::filesystem::path &path,
                  const Normalization &normalization = {});

// Fisher-Yates with unbiased bounded draws from a 64-bit Mersenne Twister,
// so results do not depend on the standard library's distributions.
void SeededShuffle(std::vector<std::string> &tokens, std::mt19937_64 &rng);

struct EvalOptions {
  uint64_t seed = 1;
  size_t cap = 25;
  size_t max_bag = 10;
  bool left_wall = false;
  unsigned jobs = 1;
  // Called once per finished sentence with (done, total); may be called from
  // worker threads, but never concurrently.
  std::function<void(size_t, size_t)> progress;
};

struct SentenceResult {
  Sentence reference;
  Sentence shuffled;
  ReferenceOutcome outcome = ReferenceOutcome::kNoSentences;
  std::vector<Sentence> candidates;
  double bleu2 = 0.0;
  double wer = 1.0;
  double ter = 1.0;
  std::optional<std::string> error;

  bool operator==(const SentenceResult &) const = default;
};

struct EvalTallies {
  size_t single_correct = 0;
  size_t multiple_one_correct = 0;
  size_t multiple_none_correct = 0;
  size_t no_sentences = 0;
  size_t too_many = 0;

  bool operator==(const EvalTallies &) const = default;
};

struct EvalReport {
  std::string corpus_name;
  size_t sentence_count = 0;
  EvalTallies tallies;
  double accuracy = 0.0;
  double avg_bleu2 = 0.0;
  double avg_wer = 0.0;
  double avg_ter = 0.0;
  std::optional<double> external_similarity;
  // Sentences with words the dictionary lacks; counted as NO_SENTENCES.
  size_t unknown_word_sentences = 0;
  size_t error_sentences = 0;  // any other per-sentence failure
  std::vector<std::string> warnings;
  // Configuration echo.
  uint64_t seed = 0;
  size_t cap = 0;
  size_t max_bag = 0;
  bool left_wall = false;
  Normalization normalization;
  std::vector<SentenceResult> sentences;

  bool operator==(const EvalReport &) const = default;
};

EvalReport EvaluateCorpus(const Dictionary &dict, const Corpus &corpus,
                          const EvalOptions &options = {});

// Row labels of the report tables.
inline constexpr std::string_view kRowSingleCorrect =
    "Single correct generated sentence";
inline constexpr std::string_view kRowMultipleOneCorrect =
    "Multiple sentences with one correct";
inline constexpr std::string_view kRowMultipleNoneCorrect =
    "Multiple sentences with none correct";
inline constexpr std::string_view kRowNoSentences = "No generated sentences";
inline constexpr std::string_view kRowTooMany = "Too many results";
inline constexpr std::string_view kRowAccuracy = "Accuracy";
inline constexpr std::string_view kRowBleu = "Average BLEU (Bigram)";
inline constexpr std::string_view kRowWer = "Average WER";
inline constexpr std::string_view kRowTer = "Average TER";
inline constexpr std::string_view kRowExternal = "Average External Similarity";

std::string ReportToText(const EvalReport &report);
// Stable key order; ReportFromJson(ReportToJson(r)) == r.
std::string ReportToJson(const EvalReport &report);
// Throws Error on malformed input.
EvalReport ReportFromJson(std::string_view json);

}  // namespace linkgen

#endif  // LINKGEN_EVALUATION_H_
