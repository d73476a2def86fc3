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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "embed.hpp"
#include "trimat/error.hpp"
#include "trimat/minors.hpp"
#include "trimat/structure.hpp"

namespace trimat {

namespace {

// Per-element invariants used to prune isomorphism search.
std::vector<std::uint64_t> fingerprints(const Matroid& m) {
  const int n = m.size();
  std::vector<std::uint64_t> fp(static_cast<std::size_t>(n), 0);
  std::vector<int> tri(static_cast<std::size_t>(n), 0), triad(static_cast<std::size_t>(n), 0),
      par(static_cast<std::size_t>(n), 0);
  for (const ElementSet& t : triangles(m))
    for (int e : t) ++tri[e];
  for (const ElementSet& t : triads(m))
    for (int e : t) ++triad[e];
  for (const ElementSet& c : parallel_classes(m))
    for (int e : c) par[e] = c.count();
  for (int e = 0; e < n; ++e) {
    const std::uint64_t loop = is_loop(m, e) ? 1 : 0;
    const std::uint64_t coloop = is_coloop(m, e) ? 1 : 0;
    fp[e] = loop | coloop << 1 | static_cast<std::uint64_t>(par[e]) << 2 |
            static_cast<std::uint64_t>(tri[e]) << 12 | static_cast<std::uint64_t>(triad[e]) << 36;
  }
  return fp;
}

std::optional<std::vector<int>> graph_iso(const Matroid& m, const Matroid& n) {
  auto gm = graph_representation(m);
  auto gn = graph_representation(n);
  if (!gm || !gn) return std::nullopt;
  auto strip = [](const Graph& g) {
    std::vector<int> idx(static_cast<std::size_t>(g.vertices), -1);
    for (auto [u, v] : g.edges) idx[u] = idx[v] = 0;
    Graph h;
    for (int v = 0; v < g.vertices; ++v)
      if (idx[v] == 0) idx[v] = h.vertices++;
    for (auto [u, v] : g.edges) h.edges.emplace_back(idx[u], idx[v]);
    return h;
  };
  const Graph a = strip(*gm), b = strip(*gn);
  if (a.vertices > 64 || b.vertices > 64 || !a.is_simple() || !b.is_simple() || !is_3_vertex_connected(a) ||
      !is_3_vertex_connected(b))
    return std::nullopt;
  return std::vector<int>{};  // marker: handled by the caller
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Matroid& m, const Matroid& n, const MinorOptions& opt) {
  if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
  if (opt.graph_route && graph_iso(m, n)) {
    // 3-connected simple graphs: matroid isomorphisms come from vertex maps.
    auto a = *graph_representation(m);
    auto b = *graph_representation(n);
    auto compact = [](Graph g) {
      std::vector<int> idx(static_cast<std::size_t>(g.vertices), -1);
      for (auto [u, v] : g.edges) idx[u] = idx[v] = 0;
      int k = 0;
      for (int v = 0; v < g.vertices; ++v)
        if (idx[v] == 0) idx[v] = k++;
      g.vertices = k;
      for (auto& [u, v] : g.edges) {
        u = idx[u];
        v = idx[v];
      }
      return g;
    };
    a = compact(a);
    b = compact(b);
    auto phi = graph_isomorphism(a, b);
    if (!phi) return std::nullopt;
    std::map<std::pair<int, int>, int> at;
    for (int e = 0; e < b.num_edges(); ++e) {
      auto [u, v] = b.edges[e];
      at[{std::min(u, v), std::max(u, v)}] = e;
    }
    std::vector<int> out;
    for (auto [u, v] : a.edges) {
      const int x = (*phi)[u], y = (*phi)[v];
      out.push_back(at.at({std::min(x, y), std::max(x, y)}));
    }
    return out;
  }
  auto fm = fingerprints(m);
  auto fn = fingerprints(n);
  {
    auto sm = fm, sn = fn;
    std::sort(sm.begin(), sm.end());
    std::sort(sn.begin(), sn.end());
    if (sm != sn) return std::nullopt;
  }
  const detail::PatternIndependence pind(m);
  detail::EmbedProblem prob;
  prob.host = &n;
  prob.pattern = &pind;
  prob.order = detail::constrained_order(m, {});
  prob.candidates.assign(prob.order.size(), n.ground());
  prob.pattern_colour = &fm;
  prob.host_colour = &fn;
  std::uint64_t nodes = 0;
  bool exhausted = true;
  auto phi = detail::embed(prob, nodes, opt.node_budget, exhausted);
  if (!exhausted) throw BudgetError("isomorphism: node budget exhausted");
  return phi;
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

struct Hypergraph {
  int n = 0;
  std::vector<Mask> edges;
  std::vector<std::vector<int>> through;  // edge ids per element
};

std::vector<int> refine(const Hypergraph& h, std::vector<int> colour) {
  while (true) {
    using Sig = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<Sig> sig(static_cast<std::size_t>(h.n));
    for (int e = 0; e < h.n; ++e) {
      sig[e].first = colour[e];
      for (int id : h.through[e]) {
        std::vector<int> cs;
        for (int f = 0; f < h.n; ++f)
          if (f != e && (h.edges[id] >> f & 1U)) cs.push_back(colour[f]);
        std::sort(cs.begin(), cs.end());
        sig[e].second.push_back(std::move(cs));
      }
      std::sort(sig[e].second.begin(), sig[e].second.end());
    }
    std::vector<Sig> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<std::size_t>(h.n));
    for (int e = 0; e < h.n; ++e)
      next[e] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[e]) - uniq.begin());
    const int before = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    const int after = static_cast<int>(uniq.size());
    colour = next;
    if (after == before) return colour;
  }
}

bool transposition_is_automorphism(const Hypergraph& h, int a, int b, const std::vector<Mask>& sorted_edges) {
  for (Mask e : h.edges) {
    const Mask ba = e >> a & 1U, bb = e >> b & 1U;
    if (ba == bb) continue;
    const Mask swapped = e ^ (Mask{1} << a) ^ (Mask{1} << b);
    if (!std::binary_search(sorted_edges.begin(), sorted_edges.end(), swapped)) return false;
  }
  return true;
}

struct Canon {
  const Hypergraph& h;
  std::vector<Mask> sorted_edges;
  std::vector<Mask> best;
  bool have = false;
  std::uint64_t leaves = 0;

  void leaf(const std::vector<int>& colour) {
    if (++leaves > 2'000'000) throw BudgetError("canonical_key: too many refinement leaves");
    std::vector<Mask> cert;
    for (Mask e : h.edges) {
      Mask r = 0;
      for (int f = 0; f < h.n; ++f)
        if (e >> f & 1U) r |= Mask{1} << colour[f];
      cert.push_back(r);
    }
    std::sort(cert.begin(), cert.end());
    if (!have || cert < best) {
      best = cert;
      have = true;
    }
  }

  void search(const std::vector<int>& colour) {
    std::map<int, std::vector<int>> cells;
    for (int e = 0; e < h.n; ++e) cells[colour[e]].push_back(e);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      leaf(colour);
      return;
    }
    std::vector<int> tried;
    for (int v : *target) {
      bool twin = false;
      for (int u : tried)
        if (transposition_is_automorphism(h, u, v, sorted_edges)) {
          twin = true;
          break;
        }
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> c = colour;
      for (int& x : c) x *= 2;
      c[v] -= 1;
      search(refine(h, c));
    }
  }
};

}  // namespace

std::string canonical_key(const Matroid& m) {
  const int n = m.size();
  if (n > 16) throw BudgetError("canonical_key: supports at most 16 elements");
  const Mask total = Mask{1} << n;
  std::vector<std::uint8_t> rk(total);
  for (Mask a = 0; a < total; ++a) rk[a] = static_cast<std::uint8_t>(m.rank_unchecked(ElementSet(a, 0)));
  Hypergraph h;
  h.n = n;
  h.through.resize(static_cast<std::size_t>(n));
  for (Mask a = 1; a < total; ++a) {
    const int k = std::popcount(a);
    if (rk[a] != k - 1) continue;
    bool minimal = true;
    for (Mask rest = a; rest && minimal; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      minimal = rk[a ^ bit] == k - 1;
    }
    if (!minimal) continue;
    const int id = static_cast<int>(h.edges.size());
    h.edges.push_back(a);
    for (int e = 0; e < n; ++e)
      if (a >> e & 1U) h.through[e].push_back(id);
  }
  Canon c{h, h.edges, {}, false, 0};
  std::sort(c.sorted_edges.begin(), c.sorted_edges.end());
  c.search(refine(h, std::vector<int>(static_cast<std::size_t>(n), 0)));
  std::string key = std::to_string(n) + ":" + std::to_string(m.rank()) + ":";
  static const char* hex = "0123456789abcdef";
  for (Mask e : c.best) {
    for (int s = 12; s >= 0; s -= 4) key.push_back(hex[(e >> s) & 0xF]);
    key.push_back('.');
  }
  return key;
}

}  // namespace trimat
