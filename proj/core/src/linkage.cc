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

#include "linkgen/linkage.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "linkgen/dict_loader.h"
#include "linkgen/errors.h"

namespace linkgen {

bool CheckPlanarity(std::span<const Link> links) {
  for (size_t i = 0; i < links.size(); ++i) {
    for (size_t j = 0; j < links.size(); ++j) {
      const Link &x = links[i];
      const Link &y = links[j];
      if (x.left_index < y.left_index && y.left_index < x.right_index &&
          x.right_index < y.right_index) {
        return false;
      }
    }
  }
  return true;
}

bool CheckConnectivity(std::span<const Link> links, size_t n) {
  if (n == 0) return false;
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  size_t components = n;
  for (const Link &l : links) {
    if (l.left_index < 0 || l.right_index < 0 ||
        static_cast<size_t>(l.left_index) >= n ||
        static_cast<size_t>(l.right_index) >= n) {
      return false;
    }
    const size_t a = find(l.left_index), b = find(l.right_index);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool Connects(const Dictionary &dict, std::string_view left,
              std::string_view right) {
  std::set<Connector> outgoing, incoming;
  for (const Rule *r : Lookup(dict, left)) {
    for (const Disjunct &d : r->disjuncts) {
      outgoing.insert(d.right.begin(), d.right.end());
    }
  }
  if (outgoing.empty()) return false;
  for (const Rule *r : Lookup(dict, right)) {
    for (const Disjunct &d : r->disjuncts) {
      incoming.insert(d.left.begin(), d.left.end());
    }
  }
  for (const Connector &a : outgoing) {
    for (const Connector &b : incoming) {
      if (MatchConnectors(a, b)) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// LinkageSolver

namespace {

struct CConn {
  int type = 0;  // interned (direction, head, subscript)
  bool multi = false;
};

// Connector lists are nearest-first: the last element is the farthest link.
struct CDisjunct {
  std::vector<CConn> left;
  std::vector<CConn> right;
  int cost = 0;
  const Disjunct *source = nullptr;
};

struct LinkRec {
  int left = 0;
  int right = 0;
  std::string label;
  auto operator<=>(const LinkRec &) const = default;
};

struct Best {
  int cost = 0;
  std::vector<LinkRec> links;                  // sorted
  std::vector<std::pair<int, int>> choices;    // (position, disjunct)
};

bool Better(const Best &a, const Best &b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.links.size() != b.links.size()) return a.links.size() < b.links.size();
  return a.links < b.links;
}

Best Combine(const Best &a, const Best &b) {
  Best out;
  out.cost = a.cost + b.cost;
  out.links.reserve(a.links.size() + b.links.size());
  std::merge(a.links.begin(), a.links.end(), b.links.begin(), b.links.end(),
             std::back_inserter(out.links));
  out.choices = a.choices;
  out.choices.insert(out.choices.end(), b.choices.begin(), b.choices.end());
  return out;
}

}  // namespace

struct LinkageSolver::Impl {
  std::vector<std::string> tokens;
  std::vector<Connector> types;                  // by type id
  std::vector<std::vector<int>> matches_left;    // right type -> left types
  std::vector<std::vector<int>> matches_right;   // left type -> right types
  std::vector<char> match;                       // [right * T + left]
  std::vector<std::vector<CDisjunct>> disjuncts; // by token
  std::vector<char> can_start, can_end;
  std::vector<char> connects;                    // [left * N + right]

  size_t T() const { return types.size(); }
  bool Match(int right_type, int left_type) const {
    return match[static_cast<size_t>(right_type) * T() + left_type] != 0;
  }

  // One ordering being solved. Lives for a single query.
  class Run;
};

class LinkageSolver::Impl::Run {
 public:
  Run(const Impl &impl, std::span<const size_t> order)
      : impl_(impl), n_(static_cast<int>(order.size())) {
    token_.assign(order.begin(), order.end());
    Prune();
    BuildIndexes();
    memo_bool_.resize(static_cast<size_t>(n_ + 1) * (n_ + 1));
    memo_best_.resize(static_cast<size_t>(n_ + 1) * (n_ + 1));
  }

  bool Feasible() {
    if (n_ == 0) return false;
    for (int d : alive_[0]) {
      const CDisjunct &dj = D(0, d);
      if (!dj.left.empty()) continue;
      if (FeasibleRegion(0, d, static_cast<int>(dj.right.size()), n_, -1, 0)) {
        return true;
      }
    }
    return false;
  }

  std::optional<Best> Optimal() {
    if (n_ == 0) return std::nullopt;
    std::optional<Best> best;
    for (int d : alive_[0]) {
      const CDisjunct &dj = D(0, d);
      if (!dj.left.empty()) continue;
      const Best *inner =
          OptimalRegion(0, d, static_cast<int>(dj.right.size()), n_, -1, 0);
      if (inner == nullptr) continue;
      Best candidate = *inner;
      candidate.cost += dj.cost;
      candidate.choices.emplace_back(0, d);
      if (!best || Better(candidate, *best)) best = std::move(candidate);
    }
    return best;
  }

  size_t TokenAt(int pos) const { return token_[pos]; }

 private:
  const CDisjunct &D(int pos, int d) const {
    return impl_.disjuncts[token_[pos]][d];
  }

  // Drops disjuncts that cannot be used at their position: too many
  // connectors for the words available on a side, or a connector no word on
  // that side could ever match. Repeats to a fixed point.
  void Prune() {
    alive_.assign(n_, {});
    for (int pos = 0; pos < n_; ++pos) {
      const auto &all = impl_.disjuncts[token_[pos]];
      for (int d = 0; d < static_cast<int>(all.size()); ++d) {
        const CDisjunct &dj = all[d];
        if (static_cast<int>(dj.left.size()) > pos) continue;
        if (static_cast<int>(dj.right.size()) > n_ - 1 - pos) continue;
        alive_[pos].push_back(d);
      }
    }
    const size_t T = impl_.T();
    std::vector<char> satisfiable(T);
    bool changed = true;
    while (changed) {
      changed = false;
      std::fill(satisfiable.begin(), satisfiable.end(), 0);
      for (int pos = 0; pos < n_; ++pos) {
        changed |= Filter(pos, satisfiable, /*left_side=*/true);
        for (int d : alive_[pos]) {
          for (const CConn &c : D(pos, d).right) {
            for (int t : impl_.matches_left[c.type]) satisfiable[t] = 1;
          }
        }
      }
      std::fill(satisfiable.begin(), satisfiable.end(), 0);
      for (int pos = n_ - 1; pos >= 0; --pos) {
        changed |= Filter(pos, satisfiable, /*left_side=*/false);
        for (int d : alive_[pos]) {
          for (const CConn &c : D(pos, d).left) {
            for (int t : impl_.matches_right[c.type]) satisfiable[t] = 1;
          }
        }
      }
    }
  }

  bool Filter(int pos, const std::vector<char> &satisfiable, bool left_side) {
    auto &list = alive_[pos];
    const size_t before = list.size();
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](int d) {
                                const CDisjunct &dj = D(pos, d);
                                const auto &conns =
                                    left_side ? dj.left : dj.right;
                                for (const CConn &c : conns) {
                                  if (!satisfiable[c.type]) return true;
                                }
                                return false;
                              }),
               list.end());
    return list.size() != before;
  }

  void BuildIndexes() {
    far_left_.assign(n_, {});
    far_right_.assign(n_, {});
    for (int pos = 0; pos < n_; ++pos) {
      for (int d : alive_[pos]) {
        const CDisjunct &dj = D(pos, d);
        if (!dj.left.empty()) far_left_[pos][dj.left.back().type].push_back(d);
        if (!dj.right.empty()) {
          far_right_[pos][dj.right.back().type].push_back(d);
        }
      }
    }
  }

  static uint64_t Key(int dl, int lk, int dr, int rk) {
    return (static_cast<uint64_t>(dl) << 40) |
           (static_cast<uint64_t>(lk) << 32) |
           (static_cast<uint64_t>(dr + 1) << 8) | static_cast<uint64_t>(rk);
  }

  size_t Slot(int l, int r) const {
    return static_cast<size_t>(l) * (n_ + 1) + r;
  }

  // Alternatives for a link from a connector `a` (with `ak` remaining) to a
  // connector `b` (with `bk` remaining): multi connectors may stay.
  template <typename F>
  static bool ForEachConsumption(const CConn &a, int ak, const CConn &b, int bk,
                                 F &&f) {
    if (f(ak - 1, bk - 1)) return true;
    if (a.multi && f(ak, bk - 1)) return true;
    if (b.multi && f(ak - 1, bk)) return true;
    if (a.multi && b.multi && f(ak, bk)) return true;
    return false;
  }

  bool FeasibleRegion(int L, int dl, int lk, int R, int dr, int rk) {
    if (R == L + 1) return lk == 0 && rk == 0;
    if (lk == 0 && rk == 0) return false;
    auto &memo = memo_bool_[Slot(L, R)];
    const uint64_t key = Key(dl, lk, dr, rk);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const CConn *lc = lk > 0 ? &D(L, dl).right[lk - 1] : nullptr;
    const CConn *rc = rk > 0 ? &D(R, dr).left[rk - 1] : nullptr;
    bool ok = false;
    for (int W = L + 1; W < R && !ok; ++W) {
      if (lc != nullptr) {
        for (int t : impl_.matches_left[lc->type]) {
          auto bucket = far_left_[W].find(t);
          if (bucket == far_left_[W].end()) continue;
          for (int d : bucket->second) {
            const CDisjunct &dw = D(W, d);
            const int a = static_cast<int>(dw.left.size());
            const int b = static_cast<int>(dw.right.size());
            const bool left_ok = ForEachConsumption(
                *lc, lk, dw.left.back(), a, [&](int l2, int w2) {
                  return FeasibleRegion(L, dl, l2, W, d, w2);
                });
            if (!left_ok) continue;
            if (rc != nullptr && b > 0 &&
                impl_.Match(dw.right.back().type, rc->type) &&
                ForEachConsumption(dw.right.back(), b, *rc, rk,
                                   [&](int w2, int r2) {
                                     return FeasibleRegion(W, d, w2, R, dr, r2);
                                   })) {
              ok = true;
              break;
            }
            if (FeasibleRegion(W, d, b, R, dr, rk)) {
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
      } else {
        for (int t : impl_.matches_right[rc->type]) {
          auto bucket = far_right_[W].find(t);
          if (bucket == far_right_[W].end()) continue;
          for (int d : bucket->second) {
            const CDisjunct &dw = D(W, d);
            const int a = static_cast<int>(dw.left.size());
            const int b = static_cast<int>(dw.right.size());
            const bool right_ok = ForEachConsumption(
                dw.right.back(), b, *rc, rk, [&](int w2, int r2) {
                  return FeasibleRegion(W, d, w2, R, dr, r2);
                });
            if (right_ok && FeasibleRegion(L, dl, 0, W, d, a)) {
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
      }
    }
    memo.emplace(key, ok);
    return ok;
  }

  LinkRec MakeLink(int left_pos, const CConn &a, int right_pos,
                   const CConn &b) const {
    return {left_pos, right_pos,
            LinkLabel(impl_.types[a.type], impl_.types[b.type])};
  }

  const Best *OptimalRegion(int L, int dl, int lk, int R, int dr, int rk) {
    static const Best kEmpty;
    if (R == L + 1) return lk == 0 && rk == 0 ? &kEmpty : nullptr;
    if (lk == 0 && rk == 0) return nullptr;
    auto &memo = memo_best_[Slot(L, R)];
    const uint64_t key = Key(dl, lk, dr, rk);
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second ? &*it->second : nullptr;
    }

    const CConn *lc = lk > 0 ? &D(L, dl).right[lk - 1] : nullptr;
    const CConn *rc = rk > 0 ? &D(R, dr).left[rk - 1] : nullptr;
    std::optional<Best> best;
    auto offer = [&](Best candidate) {
      if (!best || Better(candidate, *best)) best = std::move(candidate);
    };
    // Cheapest way to realize a link plus the region it closes.
    auto best_side = [&](const CConn &a, int ak, const CConn &b, int bk,
                         auto &&region) -> std::optional<Best> {
      std::optional<Best> side;
      ForEachConsumption(a, ak, b, bk, [&](int x, int y) {
        const Best *inner = region(x, y);
        if (inner != nullptr && (!side || Better(*inner, *side))) side = *inner;
        return false;
      });
      return side;
    };

    for (int W = L + 1; W < R; ++W) {
      if (lc != nullptr) {
        for (int t : impl_.matches_left[lc->type]) {
          auto bucket = far_left_[W].find(t);
          if (bucket == far_left_[W].end()) continue;
          for (int d : bucket->second) {
            const CDisjunct &dw = D(W, d);
            const int a = static_cast<int>(dw.left.size());
            const int b = static_cast<int>(dw.right.size());
            std::optional<Best> left = best_side(
                *lc, lk, dw.left.back(), a,
                [&](int x, int y) { return OptimalRegion(L, dl, x, W, d, y); });
            if (!left) continue;
            Best here;
            here.cost = dw.cost;
            here.links.push_back(MakeLink(L, *lc, W, dw.left.back()));
            here.choices.emplace_back(W, d);
            Best with_left = Combine(*left, here);
            if (rc != nullptr && b > 0 &&
                impl_.Match(dw.right.back().type, rc->type)) {
              std::optional<Best> right = best_side(
                  dw.right.back(), b, *rc, rk, [&](int x, int y) {
                    return OptimalRegion(W, d, x, R, dr, y);
                  });
              if (right) {
                Best link;
                link.links.push_back(MakeLink(W, dw.right.back(), R, *rc));
                offer(Combine(Combine(with_left, *right), link));
              }
            }
            if (const Best *rest = OptimalRegion(W, d, b, R, dr, rk)) {
              offer(Combine(with_left, *rest));
            }
          }
        }
      } else {
        for (int t : impl_.matches_right[rc->type]) {
          auto bucket = far_right_[W].find(t);
          if (bucket == far_right_[W].end()) continue;
          for (int d : bucket->second) {
            const CDisjunct &dw = D(W, d);
            const int a = static_cast<int>(dw.left.size());
            const int b = static_cast<int>(dw.right.size());
            std::optional<Best> right = best_side(
                dw.right.back(), b, *rc, rk,
                [&](int x, int y) { return OptimalRegion(W, d, x, R, dr, y); });
            if (!right) continue;
            const Best *rest = OptimalRegion(L, dl, 0, W, d, a);
            if (rest == nullptr) continue;
            Best here;
            here.cost = dw.cost;
            here.links.push_back(MakeLink(W, dw.right.back(), R, *rc));
            here.choices.emplace_back(W, d);
            offer(Combine(Combine(*rest, *right), here));
          }
        }
      }
    }
    auto [it, inserted] = memo.emplace(key, std::move(best));
    return it->second ? &*it->second : nullptr;
  }

  const Impl &impl_;
  int n_;
  std::vector<size_t> token_;
  std::vector<std::vector<int>> alive_;
  std::vector<std::unordered_map<int, std::vector<int>>> far_left_, far_right_;
  std::vector<std::unordered_map<uint64_t, bool>> memo_bool_;
  std::vector<std::unordered_map<uint64_t, std::optional<Best>>> memo_best_;
};

LinkageSolver::LinkageSolver(const Dictionary &dict,
                             std::vector<std::string> tokens)
    : impl_(std::make_unique<Impl>()) {
  Impl &m = *impl_;
  m.tokens = std::move(tokens);
  std::map<std::tuple<Direction, std::string, std::string>, int> ids;
  auto intern = [&](const Connector &c) {
    auto key = std::make_tuple(c.direction, c.head, c.subscript);
    auto [it, inserted] = ids.try_emplace(key, static_cast<int>(m.types.size()));
    if (inserted) {
      Connector plain = c;
      plain.multi = false;
      m.types.push_back(std::move(plain));
    }
    return CConn{it->second, c.multi};
  };

  for (const std::string &token : m.tokens) {
    std::vector<const Rule *> rules = Lookup(dict, token);
    if (rules.empty()) throw TokenWithoutRules(token);
    std::vector<CDisjunct> compiled;
    for (const Rule *r : rules) {
      for (const Disjunct &d : r->disjuncts) {
        CDisjunct cd;
        cd.cost = d.cost;
        cd.source = &d;
        for (const Connector &c : d.left) cd.left.push_back(intern(c));
        for (const Connector &c : d.right) cd.right.push_back(intern(c));
        compiled.push_back(std::move(cd));
      }
    }
    m.disjuncts.push_back(std::move(compiled));
  }

  const size_t T = m.types.size();
  m.match.assign(T * T, 0);
  m.matches_left.assign(T, {});
  m.matches_right.assign(T, {});
  for (size_t r = 0; r < T; ++r) {
    if (m.types[r].direction != Direction::kRight) continue;
    for (size_t l = 0; l < T; ++l) {
      if (MatchConnectors(m.types[r], m.types[l])) {
        m.match[r * T + l] = 1;
        m.matches_left[r].push_back(static_cast<int>(l));
        m.matches_right[l].push_back(static_cast<int>(r));
      }
    }
  }

  const size_t N = m.tokens.size();
  m.can_start.assign(N, 0);
  m.can_end.assign(N, 0);
  m.connects.assign(N * N, 0);
  std::vector<std::set<int>> outgoing(N), incoming(N);
  for (size_t i = 0; i < N; ++i) {
    for (const CDisjunct &d : m.disjuncts[i]) {
      if (d.left.empty()) m.can_start[i] = 1;
      if (d.right.empty()) m.can_end[i] = 1;
      for (const CConn &c : d.right) outgoing[i].insert(c.type);
      for (const CConn &c : d.left) incoming[i].insert(c.type);
    }
  }
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < N; ++j) {
      bool any = false;
      for (int r : outgoing[i]) {
        for (int l : incoming[j]) {
          if (m.Match(r, l)) {
            any = true;
            break;
          }
        }
        if (any) break;
      }
      m.connects[i * N + j] = any;
    }
  }
}

LinkageSolver::~LinkageSolver() = default;
LinkageSolver::LinkageSolver(LinkageSolver &&) noexcept = default;
LinkageSolver &LinkageSolver::operator=(LinkageSolver &&) noexcept = default;

const std::vector<std::string> &LinkageSolver::tokens() const {
  return impl_->tokens;
}

bool LinkageSolver::Connects(size_t left, size_t right) const {
  return impl_->connects[left * impl_->tokens.size() + right] != 0;
}

bool LinkageSolver::CanStartSentence(size_t token) const {
  return impl_->can_start[token] != 0;
}

bool LinkageSolver::CanEndSentence(size_t token) const {
  return impl_->can_end[token] != 0;
}

bool LinkageSolver::HasLinkage(std::span<const size_t> order) const {
  Impl::Run run(*impl_, order);
  return run.Feasible();
}

std::optional<Linkage> LinkageSolver::Solve(
    std::span<const size_t> order) const {
  Impl::Run run(*impl_, order);
  std::optional<Best> best = run.Optimal();
  if (!best) return std::nullopt;
  Linkage linkage;
  linkage.total_cost = best->cost;
  for (auto &rec : best->links) {
    linkage.links.push_back({rec.left, rec.right, std::move(rec.label)});
  }
  linkage.disjunct_choice.resize(order.size());
  for (const auto &[pos, d] : best->choices) {
    linkage.disjunct_choice[pos] =
        *impl_->disjuncts[run.TokenAt(pos)][d].source;
  }
  return linkage;
}

std::optional<Linkage> LinkageExists(const Dictionary &dict,
                                     const std::vector<std::string> &tokens) {
  // Distinct tokens share compiled disjuncts.
  std::vector<std::string> distinct;
  std::vector<size_t> order;
  for (const std::string &t : tokens) {
    auto it = std::find(distinct.begin(), distinct.end(), t);
    order.push_back(static_cast<size_t>(it - distinct.begin()));
    if (it == distinct.end()) distinct.push_back(t);
  }
  LinkageSolver solver(dict, std::move(distinct));
  return solver.Solve(order);
}

std::string FormatLinkage(const Linkage &linkage,
                          const std::vector<std::string> &tokens) {
  std::string out;
  for (const Link &l : linkage.links) {
    out += tokens.at(l.left_index) + " -" + l.label + "- " +
           tokens.at(l.right_index) + "\n";
  }
  return out;
}

}  // namespace linkgen
