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

#include "trimat/structure.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nodes.hpp"
#include "trimat/error.hpp"

namespace trimat {

int lambda(const Matroid& m, const ElementSet& a) {
  if (!a.subset_of(m.ground())) throw DomainError("lambda: set is not contained in the ground set");
  return m.rank_unchecked(a) + m.rank_unchecked(m.ground() - a) - m.rank();
}

namespace {

Separation make_sep(const Matroid& m, const ElementSet& a) {
  return {a, m.ground() - a, lambda(m, a) + 1};
}

void require_bound(const Matroid& m, const ConnectivityOptions& opt, const char* what) {
  if (m.size() > opt.exhaustive_bound)
    throw BudgetError(std::string(what) + ": " + std::to_string(m.size()) + " elements exceed the exhaustive bound " +
                      std::to_string(opt.exhaustive_bound));
}

// Calls f(A) for every A containing element 0 with lo <= |A| <= hi, smallest
// sides first. Stops when f returns true.
template <class F>
bool search_sides(const Matroid& m, int lo, int hi, F&& f) {
  const int n = m.size();
  if (n == 0) return false;
  const ElementSet rest = m.ground().without(0);
  for (int s = std::max(lo, 1); s <= std::min(hi, n); ++s) {
    bool hit = false;
    for_each_subset_of_size(rest, s - 1, [&](const ElementSet& x) {
      hit = f(x.with(0));
      return !hit;
    });
    if (hit) return true;
  }
  return false;
}

// Loops, coloops, parallel and series pairs.
std::optional<Separation> quick_obstruction(const Matroid& m) {
  const int n = m.size();
  const Matroid d = dual(m);
  for (int e = 0; e < n; ++e) {
    if (is_loop(m, e) || is_coloop(m, e)) return make_sep(m, ElementSet::single(e));
  }
  if (n < 4) return std::nullopt;
  for (int e = 0; e < n; ++e)
    for (int f = e + 1; f < n; ++f) {
      const ElementSet p{e, f};
      if (m.rank_unchecked(p) == 1 || d.rank_unchecked(p) == 1) return make_sep(m, p);
    }
  return std::nullopt;
}

// True when the series/parallel/loop/coloop structure of m leaves no obvious
// obstruction (used to steer the removal chain).
bool quick_clean(const Matroid& m) { return !quick_obstruction(m); }

std::optional<Graph> loopless_graph_without_isolated(const Matroid& m) {
  auto g = graph_representation(m);
  if (!g) return std::nullopt;
  std::vector<int> deg(static_cast<std::size_t>(g->vertices), 0);
  for (auto [u, v] : g->edges) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<int> idx(static_cast<std::size_t>(g->vertices), -1);
  Graph h;
  for (int v = 0; v < g->vertices; ++v)
    if (deg[v] > 0) idx[v] = h.vertices++;
  for (auto [u, v] : g->edges) h.edges.emplace_back(idx[u], idx[v]);
  return h;
}

// Certifies 3-connectivity through single removals that provably preserve
// it in reverse: M is 3-connected when M\e is and e is not a loop, coloop or
// parallel element (dually for M/e). Elements are tried in the given order.
bool chain_attempt(const Matroid& m, const std::vector<int>& order, const ConnectivityOptions& opt) {
  ElementSet contracted, deleted;
  Matroid cur = m;
  // Small targets keep the final exhaustive check cheap on deep derivations.
  const int target = std::min(opt.exhaustive_bound, 16);
  while (cur.size() > target) {
    std::vector<int> orig, pos(static_cast<std::size_t>(m.size()), -1);
    for (int i = 0; i < m.size(); ++i)
      if (!contracted.test(i) && !deleted.test(i)) {
        pos[static_cast<std::size_t>(i)] = static_cast<int>(orig.size());
        orig.push_back(i);
      }
    const Matroid cd = dual(cur);
    bool moved = false;
    for (int pass = 0; pass < 2 && !moved; ++pass) {
      for (int o : order) {
        const int e = pos[static_cast<std::size_t>(o)];
        if (e < 0 || is_loop(cur, e) || is_coloop(cur, e)) continue;
        const Matroid& side = pass == 0 ? cur : cd;
        bool paired = false;
        for (int f = 0; f < cur.size() && !paired; ++f)
          if (f != e && side.rank_unchecked(ElementSet{e, f}) == 1) paired = true;
        if (paired) continue;
        const ElementSet one = ElementSet::single(e);
        if (!quick_clean(pass == 0 ? deletion(cur, one) : contraction(cur, one))) continue;
        // Re-express against the original matroid to keep derivations shallow.
        (pass == 0 ? deleted : contracted).set(o);
        cur = minor(m, contracted, deleted);
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return !find_separation(cur, 2, opt) && !quick_obstruction(cur);
}

// Descending and ascending orders first, then a few fixed shuffles.
bool chain_certificate(const Matroid& m, const ConnectivityOptions& opt) {
  std::vector<int> order(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) order[static_cast<std::size_t>(i)] = m.size() - 1 - i;
  if (chain_attempt(m, order, opt)) return true;
  std::reverse(order.begin(), order.end());
  if (chain_attempt(m, order, opt)) return true;
  std::mt19937 rng(12345);
  for (int k = 0; k < 4; ++k) {
    std::shuffle(order.begin(), order.end(), rng);
    if (chain_attempt(m, order, opt)) return true;
  }
  return false;
}

}  // namespace

std::optional<Separation> find_separation(const Matroid& m, int k, const ConnectivityOptions& opt) {
  if (k < 1) throw DomainError("find_separation: k must be positive");
  require_bound(m, opt, "find_separation");
  const int n = m.size();
  if (n < 2 * k) return std::nullopt;
  const ElementSet all = m.ground();
  const int r = m.rank();
  std::optional<Separation> out;
  search_sides(m, k, n - k, [&](const ElementSet& a) {
    if (m.rank_unchecked(a) + m.rank_unchecked(all - a) - r <= k - 1) {
      out = make_sep(m, a);
      return true;
    }
    return false;
  });
  return out;
}

ConnectivityResult check_3connected(const Matroid& m, const ConnectivityOptions& opt) {
  const int n = m.size();
  if (n <= 3) {
    auto s = find_separation(m, 1, opt);
    return {!s, s, "exhaustive"};
  }
  // lambda is the same for M and M*, so a dual is decided by its child.
  if (auto* d = dynamic_cast<const detail::DualNode*>(&m.node())) return check_3connected(d->children()[0], opt);
  if (auto s = quick_obstruction(m)) return {false, s, "quick"};
  // With at least four edges, M(G) is 3-connected exactly when G is simple
  // and 3-connected (isolated vertices ignored).
  if (auto g = loopless_graph_without_isolated(m)) {
    if (is_connected_ignoring_isolated(*g) && g->vertices <= 64)
      return {g->is_simple() && is_3_vertex_connected(*g), std::nullopt, "graph"};
  }
  if (n <= opt.exhaustive_bound) {
    auto s = find_separation(m, 2, opt);
    return {!s, s, "exhaustive"};
  }
  const ElementSet all = m.ground();
  const int r = m.rank();
  for (int s = 3; s <= opt.small_side && s <= n / 2; ++s) {
    if (binomial(n, s) > 5'000'000) break;
    std::optional<Separation> out;
    for_each_subset_of_size(all, s, [&](const ElementSet& a) {
      if (m.rank_unchecked(a) + m.rank_unchecked(all - a) - r <= 1) {
        out = make_sep(m, a);
        return false;
      }
      return true;
    });
    if (out) return {false, out, "small"};
  }
  if (chain_certificate(m, opt)) return {true, std::nullopt, "chain"};
  throw BudgetError("is_3connected: " + std::to_string(n) +
                    " elements; no obstruction found and no removal chain certified the answer");
}

bool is_3connected(const Matroid& m, const ConnectivityOptions& opt) { return check_3connected(m, opt).connected; }

std::optional<Separation> find_vertical_separation(const Matroid& m, int k, const ConnectivityOptions& opt) {
  if (k < 1) throw DomainError("find_vertical_separation: k must be positive");
  require_bound(m, opt, "find_vertical_separation");
  const int n = m.size();
  const ElementSet all = m.ground();
  const int r = m.rank();
  std::optional<Separation> out;
  search_sides(m, 1, n - 1, [&](const ElementSet& a) {
    const int ra = m.rank_unchecked(a);
    const int rb = m.rank_unchecked(all - a);
    if (ra + rb - r <= k - 1 && std::min(ra, rb) >= k) {
      out = make_sep(m, a);
      return true;
    }
    return false;
  });
  return out;
}

bool is_vertically_3connected(const Matroid& m, const ConnectivityOptions& opt) {
  // For a connected graph on at least four vertices, M(G) is vertically
  // 3-connected exactly when G is 3-connected; loops and parallel edges do
  // not matter.
  if (auto g = graph_representation(m)) {
    Graph h;
    std::vector<int> idx(static_cast<std::size_t>(g->vertices), -1);
    for (auto [u, v] : g->edges)
      if (u != v) idx[u] = idx[v] = 0;
    for (int& i : idx)
      if (i == 0) i = h.vertices++;
    for (auto [u, v] : g->edges)
      if (u != v) h.edges.emplace_back(idx[u], idx[v]);
    if (h.vertices >= 4 && h.vertices <= 64 && is_connected_ignoring_isolated(h)) return is_3_vertex_connected(h);
  }
  // Vertical separations survive simplification, and in a simple matroid
  // every separation is vertical; si(M*) is co(M)* up to labels.
  if (auto* d = dynamic_cast<const detail::DualNode*>(&m.node())) return is_3connected(co(d->children()[0]), opt);
  if (m.size() > 16) return is_3connected(si(m), opt);
  return !find_vertical_separation(m, 1, opt) && !find_vertical_separation(m, 2, opt);
}

std::string to_string(Fate f) {
  switch (f) {
    case Fate::Kept: return "kept";
    case Fate::Loop: return "loop";
    case Fate::Parallel: return "parallel";
    case Fate::Coloop: return "coloop";
    case Fate::Series: return "series";
  }
  return "?";
}

std::vector<ElementSet> parallel_classes(const Matroid& m) {
  const int n = m.size();
  std::vector<ElementSet> out;
  ElementSet done;
  for (int e = 0; e < n; ++e) {
    if (done.test(e) || is_loop(m, e)) continue;
    ElementSet cls = ElementSet::single(e);
    for (int f = e + 1; f < n; ++f)
      if (!done.test(f) && !is_loop(m, f) && m.rank_unchecked(ElementSet{e, f}) == 1) cls.set(f);
    done |= cls;
    out.push_back(cls);
  }
  return out;
}

std::vector<ElementSet> series_classes(const Matroid& m) { return parallel_classes(dual(m)); }

namespace {

SimplificationMap simplify_impl(const Matroid& m, const Matroid& view, bool co) {
  const int n = m.size();
  SimplificationMap out{m, m.ground(), std::vector<Fate>(static_cast<std::size_t>(n), Fate::Kept), {}};
  out.representative.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    out.representative[e] = e;
    if (is_loop(view, e)) {
      out.fate[e] = co ? Fate::Coloop : Fate::Loop;
      out.representative[e] = -1;
      out.kept.reset(e);
    }
  }
  for (const ElementSet& cls : parallel_classes(view)) {
    int best = cls.first();
    for (int e : cls)
      if (m.label(e) < m.label(best)) best = e;
    for (int e : cls) {
      if (e == best) continue;
      out.fate[e] = co ? Fate::Series : Fate::Parallel;
      out.representative[e] = best;
      out.kept.reset(e);
    }
  }
  const ElementSet removed = m.ground() - out.kept;
  out.quotient = co ? contraction(m, removed) : deletion(m, removed);
  return out;
}

}  // namespace

SimplificationMap simplify(const Matroid& m) { return simplify_impl(m, m, false); }
SimplificationMap cosimplify(const Matroid& m) { return simplify_impl(m, dual(m), true); }
Matroid si(const Matroid& m) { return simplify(m).quotient; }
Matroid co(const Matroid& m) { return cosimplify(m).quotient; }

namespace {

std::vector<ElementSet> of_size(const std::vector<Circuit>& cs, int k) {
  std::vector<ElementSet> out;
  for (const auto& c : cs)
    if (c.elements.count() == k) out.push_back(c.elements);
  return out;
}

}  // namespace

std::vector<ElementSet> triangles(const Matroid& m) { return of_size(circuits_up_to(m, 3), 3); }
std::vector<ElementSet> triads(const Matroid& m) { return of_size(cocircuits_up_to(m, 3), 3); }

std::vector<ElementSet> segments(const Matroid& m, int k) {
  if (k < 2) throw DomainError("segments: k must be at least 2");
  const int n = m.size();
  std::vector<ElementSet> lines;
  for (int e = 0; e < n; ++e)
    for (int f = e + 1; f < n; ++f) {
      const ElementSet p{e, f};
      if (m.rank_unchecked(p) != 2) continue;
      bool seen = false;
      for (const auto& l : lines)
        if (p.subset_of(l)) {
          seen = true;
          break;
        }
      if (!seen) lines.push_back(closure(m, p));
    }
  std::set<ElementSet> out;
  for (const ElementSet& l : lines) {
    ElementSet pts;
    for (int e : l)
      if (!is_loop(m, e)) pts.set(e);
    if (pts.count() < k) continue;
    for_each_subset_of_size(pts, k, [&](const ElementSet& s) {
      for (int a : s)
        for (int b : s)
          if (a < b && m.rank_unchecked(ElementSet{a, b}) != 2) return true;
      out.insert(s);
      return true;
    });
  }
  return {out.begin(), out.end()};
}

bool is_cocircuit(const Matroid& m, const ElementSet& a) { return is_circuit(dual(m), a); }

}  // namespace trimat
