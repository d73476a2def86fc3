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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "trimat/graph.hpp"

using namespace trimat;

namespace {

Graph random_simple(std::mt19937& rng, int n, double p) {
  Graph g;
  g.vertices = n;
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < p) g.edges.emplace_back(i, j);
  return g;
}

std::set<std::pair<int, int>> edge_set(const Graph& g, const std::vector<int>& phi) {
  std::set<std::pair<int, int>> s;
  for (auto [u, v] : g.edges) {
    int a = phi[u], b = phi[v];
    s.emplace(std::min(a, b), std::max(a, b));
  }
  return s;
}

bool brute_iso(const Graph& a, const Graph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  std::vector<int> id(static_cast<std::size_t>(b.vertices));
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_set(b, id);
  std::vector<int> p = id;
  do {
    if (edge_set(a, p) == target) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool brute_3conn(const Graph& g) {
  const int n = g.vertices;
  if (n < 4) return false;
  for (int x = -1; x < n; ++x)
    for (int y = x; y < n; ++y) {
      std::vector<int> comp(static_cast<std::size_t>(n), -1);
      int comps = 0;
      for (int s = 0; s < n; ++s) {
        if (s == x || s == y || comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = comps;
        while (!st.empty()) {
          int v = st.back();
          st.pop_back();
          for (auto [a, b] : g.edges) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w < 0 || w == x || w == y || comp[w] >= 0) continue;
            comp[w] = comps;
            st.push_back(w);
          }
        }
        ++comps;
      }
      if (comps > 1) return false;
    }
  return true;
}

bool brute_embed(const Graph& pat, const Graph& host, const std::vector<int>& required) {
  std::vector<int> p(static_cast<std::size_t>(host.vertices));
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> id = p;
  const auto h = edge_set(host, id);
  do {
    const auto img = edge_set(pat, p);
    bool ok = std::includes(h.begin(), h.end(), img.begin(), img.end());
    for (int e : required) {
      auto [u, v] = host.edges[e];
      ok = ok && img.count({std::min(u, v), std::max(u, v)});
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("3-vertex-connectivity matches brute force") {
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_simple(rng, 4 + static_cast<int>(rng() % 4), 0.6);
    CHECK(is_3_vertex_connected(g) == brute_3conn(g));
  }
  CHECK(is_3_vertex_connected(complete_graph(4)));
  CHECK(!is_3_vertex_connected(complete_graph(3)));
}

TEST_CASE("graph isomorphism and canonical forms") {
  std::mt19937 rng(2);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Graph a = random_simple(rng, n, 0.5);
    Graph b = a;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : b.edges) {
      u = perm[u];
      v = perm[v];
    }
    std::shuffle(b.edges.begin(), b.edges.end(), rng);
    auto phi = graph_isomorphism(a, b);
    REQUIRE(phi);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    CHECK(edge_set(a, *phi) == edge_set(b, id));
    CHECK(graph_canonical_form(a) == graph_canonical_form(b));
    const Graph c = random_simple(rng, n, 0.5);
    const bool iso = brute_iso(a, c);
    CHECK(graph_isomorphism(a, c).has_value() == iso);
    CHECK((graph_canonical_form(a) == graph_canonical_form(c)) == iso);
  }
}

TEST_CASE("spanning embeddings match brute force") {
  std::mt19937 rng(3);
  for (int t = 0; t < 150; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Graph pat = random_simple(rng, n, 0.4);
    const Graph host = random_simple(rng, n, 0.7);
    std::vector<int> req;
    if (!host.edges.empty() && rng() % 2) req.push_back(static_cast<int>(rng() % host.edges.size()));
    auto phi = spanning_embedding(pat, host, req);
    CHECK(phi.has_value() == brute_embed(pat, host, req));
    if (phi) {
      std::vector<int> id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 0);
      const auto h = edge_set(host, id);
      for (auto e : edge_set(pat, *phi)) CHECK(h.count(e));
    }
  }
}

TEST_CASE("graph minors") {
  const Graph k4 = complete_graph(4);
  // Contracting edge 0 (0-1) merges two vertices.
  std::vector<int> vm;
  const Graph m = graph_minor(k4, ElementSet{0}, {}, &vm);
  CHECK(m.vertices == 3);
  CHECK(m.num_edges() == 5);
  CHECK(vm[0] == vm[1]);
  std::vector<int> kept;
  const Graph s = simple_underlying(m, &kept);
  CHECK(s.num_edges() == 3);
  CHECK(s.is_simple());
  CHECK(!m.is_simple());
}
