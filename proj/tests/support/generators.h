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

// Small random value generators for property tests.

#ifndef LINKGEN_TESTS_SUPPORT_GENERATORS_H_
#define LINKGEN_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linkgen/dict_model.h"

namespace linkgen::testing {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi].
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Coin() { return Int(0, 1) == 1; }

  template <typename T>
  const T &Pick(const std::vector<T> &v) {
    return v[Int(0, static_cast<int>(v.size()) - 1)];
  }

  // Tokens over a small alphabet so that overlaps are common.
  std::vector<std::string> Tokens(int min_len, int max_len) {
    static const std::vector<std::string> kAlphabet = {"a", "b", "c", "d",
                                                       "e"};
    std::vector<std::string> out(Int(min_len, max_len));
    for (auto &t : out) t = Pick(kAlphabet);
    return out;
  }

  Connector RandomConnector() {
    static const std::vector<std::string> kHeads = {"S", "O", "D", "SX"};
    static const std::vector<char> kSub = {'s', 'p', '*', 'c'};
    Connector c;
    c.head = Pick(kHeads);
    const int len = Int(0, 3);
    for (int i = 0; i < len; ++i) c.subscript += kSub[Int(0, 3)];
    c.direction = Coin() ? Direction::kLeft : Direction::kRight;
    c.multi = Int(0, 3) == 0;
    return c;
  }

  // Random macro-free expression of bounded depth.
  ExprPtr RandomExpression(int depth) {
    const int kind = depth == 0 ? 0 : Int(0, 5);
    switch (kind) {
      case 1:
      case 2: {
        std::vector<ExprPtr> kids(Int(1, 3));
        for (auto &k : kids) k = RandomExpression(depth - 1);
        return kind == 1 ? Expression::And(std::move(kids))
                         : Expression::Or(std::move(kids));
      }
      case 3:
        return Expression::Optional(RandomExpression(depth - 1));
      case 4:
        return Expression::Cost(RandomExpression(depth - 1), Int(1, 2));
      default:
        return Expression::Leaf(RandomConnector());
    }
  }

  std::mt19937_64 &rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace linkgen::testing

#endif  // LINKGEN_TESTS_SUPPORT_GENERATORS_H_
