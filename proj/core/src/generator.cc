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

#include "linkgen/generator.h"

#include <algorithm>
#include <array>

#include "linkgen/dict_loader.h"
#include "linkgen/errors.h"
#include "linkgen/linkage.h"

namespace linkgen {
namespace {

class Search {
 public:
  Search(const LinkageSolver &solver, std::vector<size_t> counts,
         size_t first_word, size_t cap, GenerationResult &out)
      : solver_(solver),
        counts_(std::move(counts)),
        first_word_(first_word),
        cap_(cap),
        out_(out) {
    for (size_t c : counts_) total_ += c;
  }

  void Run(std::vector<size_t> prefix) {
    order_ = std::move(prefix);
    Extend();
  }

  size_t accepted() const { return accepted_; }

 private:
  size_t Placed() const { return order_.size() - first_word_; }

  // Some placed token must link to some unplaced one, or the sentence falls
  // apart at this cut.
  bool CutCanBeBridged() const {
    for (size_t i = 0; i < order_.size(); ++i) {
      for (size_t t = 0; t < counts_.size(); ++t) {
        if (counts_[t] > 0 && solver_.Connects(order_[i], t)) return true;
      }
    }
    return false;
  }

  void Extend() {
    if (accepted_ > cap_) return;
    const size_t placed = Placed();
    if (placed == total_) {
      ++out_.orderings_checked;
      if (solver_.HasLinkage(order_)) {
        ++accepted_;
        if (accepted_ <= cap_) {
          Sentence s;
          for (size_t i = first_word_; i < order_.size(); ++i) {
            s.push_back(solver_.tokens()[order_[i]]);
          }
          out_.candidates.push_back(std::move(s));
        }
      }
      return;
    }
    if (!order_.empty() && !CutCanBeBridged()) return;
    const bool first = order_.empty();
    const bool last = placed + 1 == total_;
    for (size_t t = 0; t < counts_.size(); ++t) {
      if (counts_[t] == 0) continue;
      if (first && !solver_.CanStartSentence(t)) continue;
      if (last && !solver_.CanEndSentence(t)) continue;
      --counts_[t];
      order_.push_back(t);
      Extend();
      order_.pop_back();
      ++counts_[t];
      if (accepted_ > cap_) return;
    }
  }

  const LinkageSolver &solver_;
  std::vector<size_t> counts_;
  size_t first_word_;
  size_t cap_;
  GenerationResult &out_;
  size_t total_ = 0;
  size_t accepted_ = 0;
  std::vector<size_t> order_;
};

}  // namespace

GenerationResult Generate(const Dictionary &dict, const WordBag &bag,
                          const GenerateOptions &options) {
  if (bag.tokens.empty()) throw EmptySentence();
  if (bag.tokens.size() > options.max_bag) {
    throw BagTooLarge(bag.tokens.size(), options.max_bag);
  }
  std::vector<std::string> distinct = bag.tokens;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  std::vector<std::string> unknown;
  for (const std::string &t : bag.tokens) {
    if (Lookup(dict, t).empty() &&
        std::find(unknown.begin(), unknown.end(), t) == unknown.end()) {
      unknown.push_back(t);
    }
  }
  if (!unknown.empty()) throw UnknownWord(std::move(unknown));

  std::vector<size_t> counts(distinct.size());
  for (const std::string &t : bag.tokens) {
    counts[std::lower_bound(distinct.begin(), distinct.end(), t) -
           distinct.begin()]++;
  }

  std::vector<size_t> prefix;
  std::vector<std::string> solver_tokens = distinct;
  if (options.left_wall) {
    solver_tokens.emplace_back(kLeftWall);
    prefix.push_back(solver_tokens.size() - 1);
    counts.push_back(0);
  }
  LinkageSolver solver(dict, std::move(solver_tokens));

  GenerationResult result;
  Search search(solver, std::move(counts), prefix.size(), options.cap, result);
  search.Run(std::move(prefix));

  result.truncated = search.accepted() > options.cap;
  if (result.truncated) {
    result.outcome = GenerationOutcome::kTooMany;
  } else if (result.candidates.empty()) {
    result.outcome = GenerationOutcome::kNone;
  } else if (result.candidates.size() == 1) {
    result.outcome = GenerationOutcome::kSingle;
  } else {
    result.outcome = GenerationOutcome::kMultiple;
  }
  return result;
}

ReferenceOutcome ClassifyAgainstReference(const GenerationResult &result,
                                          const Sentence &reference) {
  if (result.truncated) return ReferenceOutcome::kTooMany;
  if (result.candidates.empty()) return ReferenceOutcome::kNoSentences;
  const bool found = std::find(result.candidates.begin(),
                               result.candidates.end(),
                               reference) != result.candidates.end();
  if (result.candidates.size() == 1 && found) {
    return ReferenceOutcome::kSingleCorrect;
  }
  return found ? ReferenceOutcome::kMultipleOneCorrect
               : ReferenceOutcome::kMultipleNoneCorrect;
}

std::string_view OutcomeName(GenerationOutcome outcome) {
  switch (outcome) {
    case GenerationOutcome::kNone: return "NONE";
    case GenerationOutcome::kSingle: return "SINGLE";
    case GenerationOutcome::kMultiple: return "MULTIPLE";
    case GenerationOutcome::kTooMany: return "TOO_MANY";
  }
  return "?";
}

namespace {
constexpr std::array<std::pair<ReferenceOutcome, std::string_view>, 5>
    kReferenceNames = {{
        {ReferenceOutcome::kSingleCorrect, "SINGLE_CORRECT"},
        {ReferenceOutcome::kMultipleOneCorrect, "MULTIPLE_ONE_CORRECT"},
        {ReferenceOutcome::kMultipleNoneCorrect, "MULTIPLE_NONE_CORRECT"},
        {ReferenceOutcome::kNoSentences, "NO_SENTENCES"},
        {ReferenceOutcome::kTooMany, "TOO_MANY"},
    }};
}  // namespace

std::string_view OutcomeName(ReferenceOutcome outcome) {
  for (const auto &[value, name] : kReferenceNames) {
    if (value == outcome) return name;
  }
  return "?";
}

std::optional<ReferenceOutcome> ParseReferenceOutcome(std::string_view name) {
  for (const auto &[value, text] : kReferenceNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

}  // namespace linkgen
