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

#include "linkgen/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "linkgen/errors.h"

namespace linkgen {

size_t EditDistance(Tokens a, Tokens b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

template <typename Gram>
std::pair<size_t, size_t> ClippedMatches(const std::vector<Gram> &cand,
                                         const std::vector<Gram> &ref) {
  std::map<Gram, size_t> ref_counts, cand_counts;
  for (const Gram &g : ref) ++ref_counts[g];
  for (const Gram &g : cand) ++cand_counts[g];
  size_t matched = 0;
  for (const auto &[g, n] : cand_counts) {
    auto it = ref_counts.find(g);
    if (it != ref_counts.end()) matched += std::min(n, it->second);
  }
  return {matched, cand.size()};
}

std::vector<std::pair<std::string, std::string>> Bigrams(Tokens t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i + 1 < t.size(); ++i) out.emplace_back(t[i], t[i + 1]);
  return out;
}

}  // namespace

double Bleu2(Tokens candidate, Tokens reference) {
  if (candidate.empty() || reference.empty()) throw EmptySentence();
  const std::vector<std::string> cu(candidate.begin(), candidate.end());
  const std::vector<std::string> ru(reference.begin(), reference.end());
  const auto [m1, n1] = ClippedMatches(cu, ru);
  const double p1 = static_cast<double>(m1) / static_cast<double>(n1);
  double p2;
  if (candidate.size() < 2 && reference.size() < 2) {
    p2 = 1.0;
  } else {
    const auto [m2, n2] = ClippedMatches(Bigrams(candidate), Bigrams(reference));
    if (m2 == 0) return 0.0;
    p2 = static_cast<double>(m2) / static_cast<double>(n2);
  }
  if (p1 == 0.0) return 0.0;
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::sqrt(p1 * p2);
}

double Wer(Tokens candidate, Tokens reference) {
  if (reference.empty()) throw EmptyReference();
  return static_cast<double>(EditDistance(candidate, reference)) /
         static_cast<double>(reference.size());
}

size_t TerEdits(Tokens candidate, Tokens reference) {
  if (reference.empty()) throw EmptyReference();
  std::vector<std::string> hyp(candidate.begin(), candidate.end());
  size_t shifts = 0;
  size_t current = EditDistance(hyp, reference);
  std::vector<std::string> trial(hyp.size());
  while (current > 0) {
    size_t best = current;
    std::vector<std::string> best_hyp;
    const size_t n = hyp.size();
    for (size_t start = 0; start < n; ++start) {
      for (size_t len = 1; len <= kMaxShiftBlock && start + len <= n; ++len) {
        // Reinsert the block [start, start+len) at every other gap of the
        // remaining n - len words.
        for (size_t dest = 0; dest <= n - len; ++dest) {
          if (dest == start) continue;
          trial.clear();
          for (size_t i = 0; i < n; ++i) {
            if (i >= start && i < start + len) continue;
            if (trial.size() == dest) {
              trial.insert(trial.end(), hyp.begin() + start,
                           hyp.begin() + start + len);
            }
            trial.push_back(hyp[i]);
          }
          if (trial.size() == dest) {
            trial.insert(trial.end(), hyp.begin() + start,
                         hyp.begin() + start + len);
          }
          const size_t d = EditDistance(trial, reference);
          if (d < best) {
            best = d;
            best_hyp = trial;
          }
        }
      }
    }
    if (best_hyp.empty()) break;
    hyp = std::move(best_hyp);
    current = best;
    ++shifts;
  }
  return shifts + current;
}

double Ter(Tokens candidate, Tokens reference) {
  return static_cast<double>(TerEdits(candidate, reference)) /
         static_cast<double>(reference.size());
}

}  // namespace linkgen
