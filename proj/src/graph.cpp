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

#include "trimat/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trimat/error.hpp"

namespace trimat {

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) return false;
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertices), 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::uint64_t> Graph::adjacency() const {
  if (vertices > 64) throw DomainError("graph adjacency masks need <= 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(vertices), 0);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

Graph complete_graph(int n) {
  Graph g;
  g.vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

namespace {

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

// Connectivity of the graph restricted to vertices in `alive` (bitmask),
// considering only vertices of positive degree when ignore_isolated.
bool connected_on(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
  if (!alive) return true;
  const int start = std::countr_zero(alive);
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

}  // namespace

bool is_connected_ignoring_isolated(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(g.vertices), 0);
  for (auto [u, v] : g.edges) {
    used[u] = used[v] = 1;
    parent[find_root(parent, u)] = find_root(parent, v);
  }
  int root = -1;
  for (int v = 0; v < g.vertices; ++v) {
    if (!used[v]) continue;
    const int r = find_root(parent, v);
    if (root == -1) root = r;
    else if (r != root) return false;
  }
  return true;
}

bool is_3_vertex_connected(const Graph& g) {
  if (g.vertices < 4) return false;
  const auto adj = g.adjacency();
  const std::uint64_t all = g.vertices == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertices) - 1;
  if (!connected_on(adj, all)) return false;
  for (int a = 0; a < g.vertices; ++a) {
    const std::uint64_t without_a = all & ~(std::uint64_t{1} << a);
    if (!connected_on(adj, without_a)) return false;
    for (int b = a + 1; b < g.vertices; ++b)
      if (!connected_on(adj, without_a & ~(std::uint64_t{1} << b))) return false;
  }
  return true;
}

Graph graph_minor(const Graph& g, const ElementSet& contract, const ElementSet& del, std::vector<int>* vertex_map) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e : contract) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    parent[find_root(parent, u)] = find_root(parent, v);
  }
  std::vector<int> id(static_cast<std::size_t>(g.vertices), -1);
  int next = 0;
  for (int v = 0; v < g.vertices; ++v) {
    const int r = find_root(parent, v);
    if (id[r] == -1) id[r] = next++;
  }
  Graph out;
  out.vertices = next;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (contract.test(e) || del.test(e)) continue;
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    out.edges.emplace_back(id[find_root(parent, u)], id[find_root(parent, v)]);
  }
  if (vertex_map) {
    vertex_map->resize(static_cast<std::size_t>(g.vertices));
    for (int v = 0; v < g.vertices; ++v) (*vertex_map)[v] = id[find_root(parent, v)];
  }
  return out;
}

Graph simple_underlying(const Graph& g, std::vector<int>* kept) {
  std::map<std::pair<int, int>, int> first;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (u == v) continue;
    first.emplace(std::make_pair(std::min(u, v), std::max(u, v)), e);
  }
  std::vector<int> idx;
  for (const auto& [uv, e] : first) idx.push_back(e);
  std::sort(idx.begin(), idx.end());
  Graph out;
  out.vertices = g.vertices;
  for (int e : idx) out.edges.push_back(g.edges[static_cast<std::size_t>(e)]);
  if (kept) *kept = idx;
  return out;
}

namespace {

using AdjList = std::vector<std::vector<int>>;

AdjList adjacency_lists(const Graph& g, int offset, AdjList into) {
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    into[u + offset].push_back(v + offset);
    into[v + offset].push_back(u + offset);
  }
  return into;
}

// Equitable refinement: colour = rank of (colour, sorted neighbour colours).
void refine(const AdjList& adj, std::vector<int>& color) {
  const std::size_t n = adj.size();
  std::size_t classes = 0;
  {
    std::vector<int> c = color;
    std::sort(c.begin(), c.end());
    classes = static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (uniq.size() == classes) return;
    classes = uniq.size();
  }
}

// Smallest colour class of size > 1 restricted to vertices [lo, hi); -1 if discrete.
int target_cell(const std::vector<int>& color, int lo, int hi) {
  std::map<int, int> count;
  for (int v = lo; v < hi; ++v) ++count[color[v]];
  int best = -1;
  int best_size = 0;
  for (auto [c, k] : count)
    if (k > 1 && (best == -1 || k < best_size)) {
      best = c;
      best_size = k;
    }
  return best;
}

bool twins(const AdjList& adj, int v, int w) {
  std::vector<int> a, b;
  for (int x : adj[v])
    if (x != w) a.push_back(x);
  for (int x : adj[w])
    if (x != v) b.push_back(x);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Representatives of the cell modulo the twin relation.
std::vector<int> cell_representatives(const AdjList& adj, const std::vector<int>& color, int cell, int lo, int hi) {
  std::vector<int> reps;
  for (int v = lo; v < hi; ++v) {
    if (color[v] != cell) continue;
    bool dup = false;
    for (int r : reps)
      if (twins(adj, r, v)) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(v);
  }
  return reps;
}

bool balanced(const std::vector<int>& color, int n) {
  std::map<int, int> diff;
  for (int v = 0; v < n; ++v) ++diff[color[v]];
  for (int v = n; v < 2 * n; ++v) --diff[color[v]];
  for (auto [c, d] : diff)
    if (d != 0) return false;
  return true;
}

bool iso_search(const AdjList& adj, std::vector<int> color, int n, const std::vector<std::uint64_t>& adj_a,
                const std::vector<std::uint64_t>& adj_b, std::vector<int>& out) {
  refine(adj, color);
  if (!balanced(color, n)) return false;
  const int cell = target_cell(color, 0, n);
  if (cell == -1) {
    std::vector<int> by_color(static_cast<std::size_t>(2 * n), -1);
    for (int v = n; v < 2 * n; ++v) by_color[color[v]] = v - n;
    std::vector<int> phi(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) phi[v] = by_color[color[v]];
    for (int v = 0; v < n; ++v)
      for (std::uint64_t m = adj_a[v]; m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (!((adj_b[phi[v]] >> phi[w]) & 1U)) return false;
      }
    out = phi;
    return true;
  }
  int v = -1;
  for (int x = 0; x < n; ++x)
    if (color[x] == cell) {
      v = x;
      break;
    }
  for (int w : cell_representatives(adj, color, cell, n, 2 * n)) {
    std::vector<int> c = color;
    c[v] = -1;
    c[w] = -1;
    if (iso_search(adj, c, n, adj_a, adj_b, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertices != b.vertices || a.num_edges() != b.num_edges()) return std::nullopt;
  const int n = a.vertices;
  if (n == 0) return std::vector<int>{};
  AdjList adj(static_cast<std::size_t>(2 * n));
  adj = adjacency_lists(a, 0, std::move(adj));
  adj = adjacency_lists(b, n, std::move(adj));
  std::vector<int> color(static_cast<std::size_t>(2 * n), 0);
  std::vector<int> out;
  if (iso_search(adj, color, n, a.adjacency(), b.adjacency(), out)) return out;
  return std::nullopt;
}

namespace {

std::string form_of(const std::vector<std::uint64_t>& adj, const std::vector<int>& pos) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[pos[v]] = v;
  std::string s(static_cast<std::size_t>(n * (n - 1) / 2), '0');
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s[k++] = ((adj[at[i]] >> at[j]) & 1U) ? '1' : '0';
  return s;
}

void canon_search(const AdjList& adj, std::vector<int> color, const std::vector<std::uint64_t>& masks,
                  std::string& best) {
  refine(adj, color);
  const int n = static_cast<int>(adj.size());
  const int cell = target_cell(color, 0, n);
  if (cell == -1) {
    std::string f = form_of(masks, color);
    if (best.empty() || f < best) best = std::move(f);
    return;
  }
  for (int v : cell_representatives(adj, color, cell, 0, n)) {
    std::vector<int> c = color;
    c[v] = -1;
    canon_search(adj, c, masks, best);
  }
}

}  // namespace

std::string graph_canonical_form(const Graph& g) {
  if (g.vertices > 16) throw DomainError("graph_canonical_form supports at most 16 vertices");
  const Graph s = simple_underlying(g);
  AdjList adj(static_cast<std::size_t>(s.vertices));
  adj = adjacency_lists(s, 0, std::move(adj));
  std::string best;
  canon_search(adj, std::vector<int>(static_cast<std::size_t>(s.vertices), 0), s.adjacency(), best);
  return std::to_string(s.vertices) + ":" + best;
}

namespace {

struct EmbedState {
  int n = 0;
  // Constraint graphs on the mapped side: edges of `from` must land on edges of `to`.
  std::vector<std::uint64_t> from;
  std::vector<std::uint64_t> to;
  // Pairs (a, b) in `from`-vertices whose images must NOT be adjacent in `to`.
  std::vector<std::uint64_t> forbid;
  std::vector<int> order;
  std::vector<int> phi;
  std::uint64_t used = 0;
  long long nodes = 0;
};

bool embed_rec(EmbedState& st, std::size_t depth) {
  if (++st.nodes > 50'000'000) throw BudgetError("spanning_embedding exceeded its node budget");
  if (depth == st.order.size()) return true;
  const int v = st.order[depth];
  const int need = std::popcount(st.from[v]);
  for (int w = 0; w < st.n; ++w) {
    if ((st.used >> w) & 1U) continue;
    if (std::popcount(st.to[w]) < need) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int u = st.order[i];
      const bool image_adj = (st.to[w] >> st.phi[u]) & 1U;
      if (((st.from[v] >> u) & 1U) && !image_adj) ok = false;
      if (((st.forbid[v] >> u) & 1U) && image_adj) ok = false;
    }
    if (!ok) continue;
    st.phi[v] = w;
    st.used |= std::uint64_t{1} << w;
    if (embed_rec(st, depth + 1)) return true;
    st.used &= ~(std::uint64_t{1} << w);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> spanning_embedding(const Graph& pattern, const Graph& host,
                                                   const std::vector<int>& required_host_edges) {
  const int n = pattern.vertices;
  if (host.vertices != n) return std::nullopt;
  if (pattern.num_edges() > host.num_edges()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  if (n > 64) throw DomainError("spanning_embedding supports at most 64 vertices");
  const auto pa = pattern.adjacency();
  const auto ha = host.adjacency();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // Degree-sequence dominance is necessary.
  {
    std::vector<int> dp, dh;
    for (int v = 0; v < n; ++v) {
      dp.push_back(std::popcount(pa[v]));
      dh.push_back(std::popcount(ha[v]));
    }
    std::sort(dp.rbegin(), dp.rend());
    std::sort(dh.rbegin(), dh.rend());
    for (int i = 0; i < n; ++i)
      if (dp[i] > dh[i]) return std::nullopt;
  }

  // Work in whichever direction has the sparser constraint graph. The
  // complement direction maps host vertices onto pattern vertices:
  // non-edges of host must land on non-edges of pattern.
  std::size_t host_edges = 0;
  for (auto m : ha) host_edges += static_cast<std::size_t>(std::popcount(m));
  host_edges /= 2;
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const bool complement = host_edges * 2 > pairs;

  EmbedState st;
  st.n = n;
  st.phi.assign(static_cast<std::size_t>(n), -1);
  st.forbid.assign(static_cast<std::size_t>(n), 0);
  if (!complement) {
    st.from = pa;
    st.to = ha;
  } else {
    st.from.resize(static_cast<std::size_t>(n));
    st.to.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      st.from[v] = all & ~ha[v] & ~(std::uint64_t{1} << v);
      st.to[v] = all & ~pa[v] & ~(std::uint64_t{1} << v);
    }
  }
  for (int e : required_host_edges) {
    auto [a, b] = host.edges[static_cast<std::size_t>(e)];
    if (!complement) {
      // Needs a pattern edge mapped onto (a, b): checked after the search.
      continue;
    }
    // Host edge (a,b) must come from a pattern edge: images of a, b (in the
    // pattern) must be adjacent in the pattern, i.e. NOT adjacent in st.to.
    st.forbid[a] |= std::uint64_t{1} << b;
    st.forbid[b] |= std::uint64_t{1} << a;
  }

  // Constrained vertices first (BFS from the highest-degree vertex), free ones last.
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  auto constrained = [&](int v) { return st.from[v] != 0 || st.forbid[v] != 0; };
  while (true) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && constrained(v) &&
          (start == -1 || std::popcount(st.from[v] | st.forbid[v]) > std::popcount(st.from[start] | st.forbid[start])))
        start = v;
    if (start == -1) break;
    std::vector<int> queue{start};
    placed[start] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      st.order.push_back(v);
      std::vector<int> nb;
      for (std::uint64_t m = st.from[v] | st.forbid[v]; m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (!placed[w]) nb.push_back(w);
      }
      std::sort(nb.begin(), nb.end(), [&](int x, int y) {
        return std::popcount(st.from[x] | st.forbid[x]) > std::popcount(st.from[y] | st.forbid[y]);
      });
      for (int w : nb) {
        placed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  const std::size_t constrained_count = st.order.size();
  for (int v = 0; v < n; ++v)
    if (!placed[v]) st.order.push_back(v);

  auto finish = [&](std::vector<int> map) -> std::optional<std::vector<int>> {
    // map is pattern -> host.
    for (int e : required_host_edges) {
      auto [a, b] = host.edges[static_cast<std::size_t>(e)];
      bool hit = false;
      for (int v = 0; v < n && !hit; ++v)
        if (map[v] == a)
          for (int w = 0; w < n; ++w)
            if (map[w] == b && ((pa[v] >> w) & 1U)) hit = true;
      if (!hit) return std::nullopt;
    }
    return map;
  };

  if (!complement && required_host_edges.empty()) {
    // Plain search, free vertices placed arbitrarily.
    st.order.resize(constrained_count);
    if (!embed_rec(st, 0)) return std::nullopt;
    std::uint64_t free_targets = all & ~st.used;
    for (int v = 0; v < n; ++v)
      if (st.phi[v] == -1) {
        st.phi[v] = std::countr_zero(free_targets);
        free_targets &= free_targets - 1;
      }
    return st.phi;
  }
  if (!complement) {
    // Required edges need full enumeration of the constrained part; keep it simple.
    std::optional<std::vector<int>> found;
    std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
      if (++st.nodes > 50'000'000) throw BudgetError("spanning_embedding exceeded its node budget");
      if (depth == st.order.size()) {
        found = finish(st.phi);
        return found.has_value();
      }
      const int v = st.order[depth];
      for (int w = 0; w < n; ++w) {
        if ((st.used >> w) & 1U) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
          const int u = st.order[i];
          if (((st.from[v] >> u) & 1U) && !((st.to[w] >> st.phi[u]) & 1U)) ok = false;
        }
        if (!ok) continue;
        st.phi[v] = w;
        st.used |= std::uint64_t{1} << w;
        if (rec(depth + 1)) return true;
        st.used &= ~(std::uint64_t{1} << w);
      }
      return false;
    };
    if (rec(0)) return found;
    return std::nullopt;
  }
  // Complement direction: st maps host vertices -> pattern vertices.
  st.order.resize(constrained_count);
  if (!embed_rec(st, 0)) return std::nullopt;
  std::uint64_t free_targets = all & ~st.used;
  for (int v = 0; v < n; ++v)
    if (st.phi[v] == -1) {
      st.phi[v] = std::countr_zero(free_targets);
      free_targets &= free_targets - 1;
    }
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) map[st.phi[h]] = h;
  return finish(map);
}

}  // namespace trimat
