// Copyright 2026 The Authors.
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

#include "embed.hpp"

#include <algorithm>

namespace trimat::detail {

PatternIndependence::PatternIndependence(const Matroid& p) : p_(p) {
  if (p.size() <= 20) {
    const std::uint32_t total = std::uint32_t{1} << p.size();
    table_.resize(total);
    for (std::uint32_t a = 0; a < total; ++a) table_[a] = static_cast<std::uint8_t>(p.rank_unchecked(ElementSet(a, 0)));
  }
}

bool PatternIndependence::independent(const ElementSet& s) const {
  if (!table_.empty()) return table_[s.word(0)] == s.count();
  return p_.rank_unchecked(s) == s.count();
}

namespace {

struct Search {
  const EmbedProblem& prob;
  std::uint64_t& nodes;
  std::uint64_t budget;
  bool out_of_budget = false;
  int rank = 0;
  std::vector<int> phi;      // by pattern element
  std::vector<int> placed;   // pattern elements in order
  ElementSet used;

  // Independence agreement for every S + p with S an independent subset of
  // the placed prefix (see embed()).
  bool agree(int p, int h, std::size_t start, ElementSet sp, ElementSet sh, int size) {
    for (std::size_t j = start; j < placed.size(); ++j) {
      const int q = placed[j];
      const ElementSet sp2 = sp.with(q);
      // The prefix already agrees, so dependence here holds on both sides.
      if (!prob.pattern->independent(sp2)) continue;
      const ElementSet sh2 = sh.with(phi[static_cast<std::size_t>(q)]);
      const bool a = prob.pattern->independent(sp2.with(p));
      const bool b = prob.host->rank_unchecked(sh2.with(h)) == size + 2;
      if (a != b) return false;
      if (a && size + 2 < rank && !agree(p, h, j + 1, sp2, sh2, size + 1)) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == prob.order.size()) return true;
    const int p = prob.order[depth];
    const bool p_loop = !prob.pattern->independent(ElementSet::single(p));
    for (int h : prob.candidates[depth] - used) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      if (prob.pattern_colour && (*prob.pattern_colour)[p] != (*prob.host_colour)[h]) continue;
      const bool h_loop = prob.host->rank_unchecked(ElementSet::single(h)) == 0;
      if (p_loop != h_loop) continue;
      if (!p_loop && !agree(p, h, 0, ElementSet(), ElementSet(), 0)) continue;
      phi[static_cast<std::size_t>(p)] = h;
      placed.push_back(p);
      used.set(h);
      if (run(depth + 1)) return true;
      used.reset(h);
      placed.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> embed(const EmbedProblem& prob, std::uint64_t& nodes, std::uint64_t budget,
                                      bool& exhausted) {
  Search s{prob, nodes, budget, false, 0, {}, {}, {}};
  s.rank = prob.pattern->matroid().rank();
  s.phi.assign(static_cast<std::size_t>(prob.pattern->matroid().size()), -1);
  const bool ok = s.run(0);
  exhausted = !s.out_of_budget;
  if (!ok) return std::nullopt;
  return s.phi;
}

std::vector<int> constrained_order(const Matroid& p, const std::vector<int>& first) {
  std::vector<int> order = first;
  ElementSet placed = ElementSet::from(first);
  int r = p.rank_unchecked(placed);
  while (static_cast<int>(order.size()) < p.size()) {
    int best = -1, best_gain = 2;
    for (int e : p.ground() - placed) {
      const int gain = p.rank_unchecked(placed.with(e)) - r;
      if (gain < best_gain) {
        best = e;
        best_gain = gain;
      }
      if (gain == 0) break;
    }
    order.push_back(best);
    placed.set(best);
    r += best_gain;
  }
  return order;
}

}  // namespace trimat::detail
