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
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "linkgen/dict_loader.h"
#include "linkgen/linkage.h"

namespace linkgen {
namespace {

const std::filesystem::path kData = LINKGEN_DATA_DIR;

void BM_LoadSmallWorld(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        LoadDictionaryFile(kData / "small_world" / "poc-english_5C.dict"));
  }
}
BENCHMARK(BM_LoadSmallWorld);

void BM_LoadEnglish(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(LoadDictionaryFile(kData / "en" / "4.0.dict"));
  }
}
BENCHMARK(BM_LoadEnglish)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_LinkageToy(benchmark::State &state) {
  Dictionary d = LoadDictionaryFile(kData / "toy" / "toy.dict").dictionary;
  std::vector<std::string> s = {"the", "big", "black", "cat", "saw",
                                "a",   "dog", "quickly"};
  for (auto _ : state) benchmark::DoNotOptimize(LinkageExists(d, s));
}
BENCHMARK(BM_LinkageToy);

// Reuses one solver across orderings, as the generator does.
void BM_SolverOrdering(benchmark::State &state) {
  Dictionary d = LoadDictionaryFile(kData / "toy" / "toy.dict").dictionary;
  LinkageSolver solver(d, {"the", "big", "cat", "saw", "a", "dog", "quickly"});
  std::vector<size_t> order = {0, 1, 2, 3, 4, 5, 6};
  for (auto _ : state) benchmark::DoNotOptimize(solver.HasLinkage(order));
}
BENCHMARK(BM_SolverOrdering);

}  // namespace
}  // namespace linkgen
