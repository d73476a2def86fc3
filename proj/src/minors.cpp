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

#include "trimat/minors.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "embed.hpp"
#include "trimat/error.hpp"
#include "trimat/structure.hpp"

namespace trimat {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Budget: return "budget";
  }
  return "?";
}

namespace {

bool is_simple_matroid(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e)
    if (is_loop(m, e)) return false;
  for (int e = 0; e < m.size(); ++e)
    for (int f = e + 1; f < m.size(); ++f)
      if (m.rank_unchecked(ElementSet{e, f}) < 2) return false;
  return true;
}

// Graph with isolated vertices removed; edge indices unchanged.
Graph strip_isolated(const Graph& g) {
  std::vector<int> idx(static_cast<std::size_t>(g.vertices), -1);
  for (auto [u, v] : g.edges) idx[u] = idx[v] = 0;
  Graph h;
  for (int v = 0; v < g.vertices; ++v)
    if (idx[v] == 0) idx[v] = h.vertices++;
  for (auto [u, v] : g.edges) h.edges.emplace_back(idx[u], idx[v]);
  return h;
}

// Forest contraction followed by a spanning embedding. Complete for
// 3-connected simple patterns by Whitney's 2-isomorphism theorem.
std::optional<MinorResult> graph_search(const Matroid& m, const Matroid& n, const ElementSet* t,
                                        const MinorOptions& opt) {
  auto gm = graph_representation(m);
  auto gn = graph_representation(n);
  if (!gm || !gn) return std::nullopt;
  const Graph g = strip_isolated(*gm);
  const Graph h = strip_isolated(*gn);
  if (h.vertices > 64 || g.vertices > 64 || !h.is_simple() || !is_3_vertex_connected(h)) return std::nullopt;
  if (!is_connected_ignoring_isolated(g)) return std::nullopt;
  const std::string note = "exhaustive (forest contraction, graph route)";
  const int k = g.vertices - h.vertices;
  if (k < 0 || g.num_edges() < h.num_edges()) return MinorResult{SearchStatus::Absent, std::nullopt, note};
  const ElementSet tset = t ? *t : ElementSet();

  std::uint64_t nodes = 0;
  std::optional<MinorWitness> found;
  bool budget = false;
  std::vector<int> parent(static_cast<std::size_t>(g.vertices));
  for (int v = 0; v < g.vertices; ++v) parent[v] = v;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };

  auto try_forest = [&](const ElementSet& forest) {
    std::vector<int> vm;
    const Graph c = graph_minor(g, forest, {}, &vm);
    std::map<std::pair<int, int>, int> cls;  // endpoints -> representative edge of g
    for (int e = 0; e < g.num_edges(); ++e) {
      if (forest.test(e)) continue;
      int a = vm[g.edges[e].first], b = vm[g.edges[e].second];
      if (a == b) {
        if (tset.test(e)) return false;
        continue;
      }
      if (a > b) std::swap(a, b);
      auto [it, fresh] = cls.emplace(std::make_pair(a, b), e);
      if (!fresh && tset.test(e)) it->second = e;
    }
    if (static_cast<int>(cls.size()) < h.num_edges()) return false;
    Graph s;
    s.vertices = c.vertices;
    std::vector<int> orig;
    std::vector<int> required;
    for (const auto& [ends, e] : cls) {
      if (tset.test(e)) required.push_back(static_cast<int>(s.edges.size()));
      s.edges.push_back(ends);
      orig.push_back(e);
    }
    auto phi = spanning_embedding(h, s, required);
    if (!phi) return false;
    std::map<std::pair<int, int>, int> at;
    for (std::size_t i = 0; i < s.edges.size(); ++i) at[s.edges[i]] = orig[i];
    MinorWitness w;
    w.contracted = forest;
    ElementSet image;
    for (auto [u, v] : h.edges) {
      int a = (*phi)[u], b = (*phi)[v];
      if (a > b) std::swap(a, b);
      const int e = at.at({a, b});
      w.iso.push_back(e);
      image.set(e);
    }
    w.deleted = m.ground() - forest - image;
    found = w;
    return true;
  };

  std::function<bool(int, int, ElementSet)> rec = [&](int start, int left, ElementSet forest) {
    if (++nodes > opt.node_budget) {
      budget = true;
      return true;
    }
    if (left == 0) return try_forest(forest);
    for (int e = start; e < g.num_edges(); ++e) {
      if (tset.test(e)) continue;
      const int a = root(g.edges[e].first), b = root(g.edges[e].second);
      if (a == b) continue;
      parent[a] = b;
      const bool stop = rec(e + 1, left - 1, forest.with(e));
      parent[a] = a;
      if (stop) return true;
    }
    return false;
  };
  try {
    rec(0, k, ElementSet());
  } catch (const BudgetError& e) {
    return MinorResult{SearchStatus::Budget, std::nullopt, std::string("graph route: ") + e.what()};
  }
  if (found) return MinorResult{SearchStatus::Found, found, note};
  if (budget) return MinorResult{SearchStatus::Budget, std::nullopt, "graph route: node budget exhausted"};
  return MinorResult{SearchStatus::Absent, std::nullopt, note};
}

// Sizes (descending) of the rank-2 flats with at least three points, using
// only elements of `within`. Distinct lines of a restriction sit in distinct
// lines of the host that are at least as long.
std::vector<int> long_lines(const Matroid& m, const ElementSet& within) {
  std::vector<ElementSet> lines;
  std::vector<int> v = within.to_vector();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const ElementSet p{v[i], v[j]};
      if (m.rank_unchecked(p) != 2) continue;
      bool seen = false;
      for (const auto& l : lines) seen = seen || p.subset_of(l);
      if (seen) continue;
      ElementSet l = p;
      for (int g : v)
        if (!l.test(g) && m.rank_unchecked(p.with(g)) == 2) l.set(g);
      lines.push_back(l);
    }
  std::vector<int> out;
  for (const auto& l : lines)
    if (l.count() >= 3) out.push_back(l.count());
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool lines_fit(const std::vector<int>& pattern, const std::vector<int>& host) {
  if (host.size() < pattern.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (host[i] < pattern[i]) return false;
  return true;
}

MinorResult generic_search(const Matroid& m, const Matroid& n, const ElementSet* t, const MinorOptions& opt) {
  const ElementSet tset = t ? *t : ElementSet();
  const int k_primal = m.rank() - n.rank();
  const int k_dual = m.corank() - n.corank();
  const int free_elems = m.size() - tset.count();
  const bool use_dual = binomial(free_elems, k_dual) < binomial(free_elems, k_primal);
  const Matroid host = use_dual ? dual(m) : m;
  const Matroid pat = use_dual ? dual(n) : n;
  const int k = use_dual ? k_dual : k_primal;
  const std::string note = std::string("exhaustive (") + (use_dual ? "dual" : "primal") + " normal form, |I|=" +
                           std::to_string(k) + ")";

  const detail::PatternIndependence pind(pat);
  const bool simple = is_simple_matroid(pat);
  const std::vector<int> pat_lines = simple ? long_lines(pat, pat.ground()) : std::vector<int>{};
  std::vector<std::vector<int>> orders;
  if (t) {
    for (const ElementSet& tri : triangles(n)) orders.push_back(detail::constrained_order(pat, tri.to_vector()));
    if (orders.empty()) return {SearchStatus::Absent, std::nullopt, note + "; pattern has no triangle"};
  } else {
    orders.push_back(detail::constrained_order(pat, {}));
  }

  std::uint64_t nodes = 0;
  bool budget = false;
  std::optional<MinorWitness> found;

  auto try_contraction = [&](const ElementSet& i) {
    const Matroid hc = contraction(host, i);
    std::vector<int> lift;
    for (int e = 0; e < host.size(); ++e)
      if (!i.test(e)) lift.push_back(e);
    ElementSet t_here;
    for (std::size_t j = 0; j < lift.size(); ++j)
      if (tset.test(lift[j])) t_here.set(static_cast<int>(j));
    if (t && !use_dual) {
      if (hc.rank_unchecked(t_here) != 2) return false;
      for (int a : t_here)
        for (int b : t_here)
          if (a < b && hc.rank_unchecked(ElementSet{a, b}) != 2) return false;
    }
    ElementSet cands;
    if (simple) {
      ElementSet done;
      for (int e = 0; e < hc.size(); ++e) {
        if (done.test(e) || hc.rank_unchecked(ElementSet::single(e)) == 0) continue;
        ElementSet cls = ElementSet::single(e);
        for (int f = e + 1; f < hc.size(); ++f)
          if (!done.test(f) && hc.rank_unchecked(ElementSet{e, f}) == 1) cls.set(f);
        done |= cls;
        const ElementSet tin = cls & t_here;
        if (tin.count() > 1) continue;  // two T elements parallel: never both used
        cands.set(tin.empty() ? e : tin.first());
      }
      if (cands.count() < pat.size()) return false;
      if (!lines_fit(pat_lines, long_lines(hc, cands))) return false;
    } else {
      cands = hc.ground();
    }
    if (t && !t_here.subset_of(cands)) return false;
    if (simple && !t && cands.count() == pat.size()) {
      // Nothing left to delete: an isomorphism test, pruned by fingerprints.
      std::optional<std::vector<int>> phi;
      try {
        phi = isomorphism(pat, restriction(hc, cands), opt);
      } catch (const BudgetError&) {
        budget = true;
        return true;
      }
      if (!phi) return false;
      const std::vector<int> at = cands.to_vector();
      MinorWitness w;
      ElementSet image;
      for (int e = 0; e < pat.size(); ++e) {
        const int h = lift[static_cast<std::size_t>(at[static_cast<std::size_t>((*phi)[e])])];
        w.iso.push_back(h);
        image.set(h);
      }
      const ElementSet rest = m.ground() - i - image;
      w.contracted = use_dual ? rest : i;
      w.deleted = use_dual ? i : rest;
      found = w;
      return true;
    }
    for (const auto& order : orders) {
      detail::EmbedProblem prob;
      prob.host = &hc;
      prob.pattern = &pind;
      prob.order = order;
      for (std::size_t pos = 0; pos < order.size(); ++pos)
        prob.candidates.push_back(t && pos < 3 ? t_here : (t ? cands - t_here : cands));
      bool exhausted = true;
      auto phi = detail::embed(prob, nodes, opt.node_budget, exhausted);
      if (!exhausted) {
        budget = true;
        return true;
      }
      if (!phi) continue;
      MinorWitness w;
      ElementSet image;
      for (int e = 0; e < pat.size(); ++e) {
        const int h = lift[static_cast<std::size_t>((*phi)[e])];
        w.iso.push_back(h);
        image.set(h);
      }
      const ElementSet rest = m.ground() - i - image;
      w.contracted = use_dual ? rest : i;
      w.deleted = use_dual ? i : rest;
      found = w;
      return true;
    }
    return false;
  };

  const ElementSet pool = host.ground() - tset;
  std::function<bool(int, int, ElementSet)> rec = [&](int start, int left, ElementSet i) {
    if (++nodes > opt.node_budget) {
      budget = true;
      return true;
    }
    if (left == 0) return try_contraction(i);
    const int r = i.count();
    for (int e = start; e < host.size(); ++e) {
      if (!pool.test(e)) continue;
      if (host.rank_unchecked(i.with(e)) != r + 1) continue;
      if (rec(e + 1, left - 1, i.with(e))) return true;
    }
    return false;
  };
  rec(0, k, ElementSet());
  if (found) return {SearchStatus::Found, found, note};
  if (budget) return {SearchStatus::Budget, std::nullopt, note + "; node budget " + std::to_string(opt.node_budget) + " exhausted"};
  return {SearchStatus::Absent, std::nullopt, note};
}

MinorResult search(const Matroid& m, const Matroid& n, const ElementSet* t, const MinorOptions& opt) {
  if (t) {
    if (!t->subset_of(m.ground())) throw DomainError("find_minor_using_triangle: T is not contained in E(M)");
    if (t->count() != 3 || !is_circuit(m, *t)) throw ValidationError("find_minor_using_triangle: T is not a triangle of M");
  }
  if (n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank())
    return {SearchStatus::Absent, std::nullopt, "exhaustive (size/rank/corank bounds)"};
  if (opt.graph_route)
    if (auto r = graph_search(m, n, t, opt)) return *r;
  return generic_search(m, n, t, opt);
}

std::optional<MinorWitness> throwing(MinorResult r) {
  if (r.status == SearchStatus::Budget) throw BudgetError("minor search: " + r.note);
  return r.witness;
}

}  // namespace

MinorResult find_minor(const Matroid& m, const Matroid& n, const MinorOptions& opt) {
  return search(m, n, nullptr, opt);
}

MinorResult find_minor_using_triangle(const Matroid& m, const Matroid& n, const ElementSet& t,
                                      const MinorOptions& opt) {
  return search(m, n, &t, opt);
}

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n, const MinorOptions& opt) {
  return throwing(find_minor(m, n, opt));
}

std::optional<MinorWitness> has_minor_using_triangle(const Matroid& m, const Matroid& n, const ElementSet& t,
                                                     const MinorOptions& opt) {
  return throwing(find_minor_using_triangle(m, n, t, opt));
}

std::pair<ElementSet, ElementSet> normalize_witness(const Matroid& m, const ElementSet& c, const ElementSet& d) {
  if (!c.subset_of(m.ground()) || !d.subset_of(m.ground()) || c.intersects(d))
    throw DomainError("normalize_witness: C and D must be disjoint subsets of E(M)");
  // Contract a basis of C; the rest of C is loops after that and is deleted.
  ElementSet i;
  for (int e : c)
    if (m.rank_unchecked(i.with(e)) == i.count() + 1) i.set(e);
  ElementSet del = d | (c - i);
  // In M / I, delete a cobasis-compatible part of del; elements whose
  // deletion would drop the rank are coloops there and are contracted.
  const Matroid mi = contraction(m, i);
  std::vector<int> to_mi(static_cast<std::size_t>(m.size()), -1);
  for (int e = 0, j = 0; e < m.size(); ++e)
    if (!i.test(e)) to_mi[e] = j++;
  ElementSet kept_mi = mi.ground();
  for (int e : del) kept_mi.reset(to_mi[e]);
  // Keep = E(M/I) - del; grow contraction set with elements of del that are
  // needed for spanning, in index order.
  ElementSet extra;
  const int target = mi.rank();
  ElementSet span = kept_mi;
  int r = mi.rank_unchecked(span);
  for (int e : del) {
    if (r == target) break;
    if (mi.rank_unchecked(span.with(to_mi[e])) == r + 1) {
      span.set(to_mi[e]);
      ++r;
      extra.set(e);
    }
  }
  return {i | extra, del - extra};
}

bool verify_witness(const Matroid& m, const Matroid& n, const MinorWitness& w) {
  const ElementSet c = w.contracted, d = w.deleted;
  if (!c.subset_of(m.ground()) || !d.subset_of(m.ground()) || c.intersects(d)) return false;
  if (!is_independent(m, c) || !is_coindependent(m, d)) return false;
  if (static_cast<int>(w.iso.size()) != n.size()) return false;
  ElementSet image;
  for (int h : w.iso) {
    if (h < 0 || h >= m.size() || image.test(h)) return false;
    image.set(h);
  }
  if (image != m.ground() - c - d) return false;
  const int rc = m.rank_unchecked(c);
  auto agree = [&](const ElementSet& a) {
    ElementSet b = c;
    for (int e : a) b.set(w.iso[static_cast<std::size_t>(e)]);
    return m.rank_unchecked(b) - rc == n.rank_unchecked(a);
  };
  if (n.size() <= 16) return for_each_subset(n.ground(), agree);
  for (int s = 0; s <= 3; ++s)
    if (!for_each_subset_of_size(n.ground(), s, agree)) return false;
  if (!agree(n.ground())) return false;
  // Deterministic pseudo-random sample.
  std::uint64_t x = 0x9E3779B97F4A7C15ULL;
  for (int trial = 0; trial < 20000; ++trial) {
    ElementSet a;
    for (int e = 0; e < n.size(); ++e) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      if (x & 1U) a.set(e);
    }
    if (!agree(a)) return false;
  }
  return true;
}

}  // namespace trimat
