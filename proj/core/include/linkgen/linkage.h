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

// Linkage search over an ordered token sequence.
//
// A linkage picks one disjunct per token and a set of links such that links
// do not cross, the tokens form one connected graph, and every connector of
// every chosen disjunct is used. Within a disjunct, connectors listed first
// link to the nearest words on their side (the dictionary convention: for
// "{@A-} & Ds-", the adjective sits between the determiner and the noun).
// A multi connector '@' takes one or more links.
//
// The search is the interval dynamic program over regions (L, R) whose
// state is the unconsumed connectors L still points right with and R still
// points left with. Every word strictly inside a region must hang off L or
// R, which makes connectivity structural.

#ifndef LINKGEN_LINKAGE_H_
#define LINKGEN_LINKAGE_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkgen/dict_model.h"

namespace linkgen {

struct Link {
  int left_index = 0;
  int right_index = 0;
  std::string label;

  auto operator<=>(const Link &) const = default;
};

struct Linkage {
  std::vector<Link> links;                // sorted
  std::vector<Disjunct> disjunct_choice;  // one per token
  int total_cost = 0;
};

// True iff no two links (a,b), (c,d) satisfy a < c < b < d.
bool CheckPlanarity(std::span<const Link> links);

// True iff the undirected graph on n >= 1 vertices is connected.
bool CheckConnectivity(std::span<const Link> links, size_t n);

// The pairwise filter: some right connector of some disjunct of `left`
// matches some left connector of some disjunct of `right`. Unknown words
// yield false.
bool Connects(const Dictionary &dict, std::string_view left,
              std::string_view right);

// Precompiled disjuncts for a fixed set of distinct tokens, so that many
// orderings of the same words can be checked without touching strings.
// Immutable after construction; queries are thread-safe.
class LinkageSolver {
 public:
  // Throws TokenWithoutRules if a token has no rules in `dict`.
  LinkageSolver(const Dictionary &dict, std::vector<std::string> tokens);
  ~LinkageSolver();
  LinkageSolver(LinkageSolver &&) noexcept;
  LinkageSolver &operator=(LinkageSolver &&) noexcept;

  const std::vector<std::string> &tokens() const;

  // Token-level facts used for pruning orderings.
  bool Connects(size_t left, size_t right) const;
  bool CanStartSentence(size_t token) const;  // has a disjunct with no left
  bool CanEndSentence(size_t token) const;    // has a disjunct with no right

  // Whether the ordering (indexes into tokens()) has a valid linkage.
  bool HasLinkage(std::span<const size_t> order) const;

  // A valid linkage of minimal total cost, then fewest links, then
  // lexicographically smallest link list; absent if none exists.
  std::optional<Linkage> Solve(std::span<const size_t> order) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience wrapper: solves `tokens` in the given order. Throws
// TokenWithoutRules for tokens unknown to `dict`.
std::optional<Linkage> LinkageExists(const Dictionary &dict,
                                     const std::vector<std::string> &tokens);

// Debug rendering: one line per link, "left -label- right".
std::string FormatLinkage(const Linkage &linkage,
                          const std::vector<std::string> &tokens);

}  // namespace linkgen

#endif  // LINKGEN_LINKAGE_H_
