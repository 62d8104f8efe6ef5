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

#include <filesystem>

#include "benchmark/benchmark.h"
#include "linkgen/dict_loader.h"
#include "linkgen/evaluation.h"
#include "linkgen/generator.h"

namespace linkgen {
namespace {

const std::filesystem::path kData = LINKGEN_DATA_DIR;

const Dictionary &SmallWorld() {
  static const Dictionary d =
      LoadDictionaryFile(kData / "small_world" / "poc-english_5C.dict")
          .dictionary;
  return d;
}

void BM_GenerateFamilyBag(benchmark::State &state) {
  WordBag bag{{"mom", "dad", "company", "wants", "join", "the", "to"}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(Generate(SmallWorld(), bag));
}
BENCHMARK(BM_GenerateFamilyBag);

// Bag size sweep over a toy bag; uncapped so the full space is searched.
void BM_GenerateToyBySize(benchmark::State &state) {
  static const Dictionary toy =
      LoadDictionaryFile(kData / "toy" / "toy.dict").dictionary;
  const Sentence words = {"the", "big",   "cat", "chased", "a",
                          "black", "dog", "quickly", "john", "saw"};
  WordBag bag{Sentence(words.begin(), words.begin() + state.range(0)), {}};
  GenerateOptions o;
  o.cap = kUnlimited;
  for (auto _ : state) benchmark::DoNotOptimize(Generate(toy, bag, o));
}
BENCHMARK(BM_GenerateToyBySize)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_EvaluateSmallWorld(benchmark::State &state) {
  Corpus c = LoadCorpus(kData / "small_world" / "poc_english.txt");
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateCorpus(SmallWorld(), c));
}
BENCHMARK(BM_EvaluateSmallWorld)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace linkgen
