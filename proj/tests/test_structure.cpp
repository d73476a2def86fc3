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
#include <random>

#include "oracles.hpp"
#include "trimat/error.hpp"
#include "trimat/structure.hpp"

using namespace trimat;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

Matroid graph_of(int vertices, const std::vector<std::pair<int, int>>& es) {
  std::vector<LabeledEdge> le;
  for (std::size_t i = 0; i < es.size(); ++i) le.push_back({es[i].first, es[i].second, "g" + std::to_string(i)});
  return graphic(vertices, le);
}

Matroid complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return graph_of(n, es);
}

Matroid random_binary(std::mt19937& rng, int rows, int cols) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
  for (auto& r : m)
    for (auto& x : r) x = static_cast<int>(rng() & 1U);
  return linear_gf2(m, names(cols));
}

}  // namespace

TEST_CASE("lambda") {
  const Matroid k4 = complete(4);
  // Edges 0-1, 0-2, 1-2 form a triangle.
  CHECK(lambda(k4, ElementSet{0, 1, 3}) == 2);
  CHECK(lambda(k4, {}) == 0);
  const Matroid t1 = graphic(3, {{0, 1, "p"}, {1, 2, "a"}, {0, 2, "b"}});
  const Matroid t2 = graphic(3, {{0, 1, "p"}, {1, 2, "c"}, {0, 2, "d"}});
  const Matroid s = two_sum(t1, t2, "p");
  CHECK(lambda(s, s.set({"a", "b"})) == 1);
  auto sep = find_separation(s, 2);
  REQUIRE(sep);
  CHECK(sep->order <= 2);
  CHECK(sep->side_a.count() >= 2);
  CHECK(sep->side_b.count() >= 2);
}

TEST_CASE("3-connectivity agrees with the brute-force oracle") {
  std::mt19937 rng(11);
  int connected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 3);
    const int cols = 4 + static_cast<int>(rng() % 6);
    const Matroid m = random_binary(rng, rows, cols);
    const bool expect = oracle::three_connected(oracle::of(m), cols);
    const auto res = check_3connected(m);
    CHECK(res.connected == expect);
    CHECK(is_3connected(dual(m)) == expect);
    if (res.witness) CHECK(lambda(m, res.witness->side_a) + 1 == res.witness->order);
    connected += expect;
  }
  CHECK(connected > 0);
  CHECK(is_3connected(uniform(2, 4)));
  CHECK(!find_separation(uniform(2, 4), 2));
  CHECK(!is_3connected(graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK(is_3connected(complete(5)));
  CHECK(is_3connected(uniform(1, 3)));
  CHECK(!is_3connected(linear_gf2(std::vector<std::vector<int>>{{1, 0, 1}}, names(3))));
}

TEST_CASE("3-connectivity beyond the exhaustive bound") {
  ConnectivityOptions small;
  small.exhaustive_bound = 8;
  // Graph route.
  CHECK(check_3connected(complete(6), small).method == "graph");
  CHECK(check_3connected(complete(6), small).connected);
  // Non-graphic input: a rank-3 binary matroid (Fano plus a parallel element).
  const Matroid pg = linear_gf2(std::vector<std::vector<int>>{{1, 0, 0, 1, 1, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 1, 0, 0}},
                                names(9));
  CHECK(!is_3connected(pg, small));
  // Chain route: the rank-4 binary projective geometry (15 elements).
  std::vector<std::vector<int>> rows(4, std::vector<int>(15));
  for (int c = 1; c <= 15; ++c)
    for (int r = 0; r < 4; ++r) rows[r][c - 1] = (c >> r) & 1;
  const Matroid pg3 = linear_gf2(rows, names(15));
  const auto res = check_3connected(pg3, small);
  CHECK(res.connected);
  CHECK(res.method == "chain");
  CHECK(is_3connected(pg3));
  // A 2-sum is caught by the small-side search.
  const Matroid f7 = linear_gf2(std::vector<std::vector<int>>{{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}},
                                names(7));
  const Matroid u25 = uniform(2, 5, {"e0", "u1", "u2", "u3", "u4"});
  const Matroid sum = two_sum(f7, u25, "e0");
  const auto s2 = check_3connected(sum, small);
  CHECK(!s2.connected);
  REQUIRE(s2.witness);
  CHECK(lambda(sum, s2.witness->side_a) <= 1);
  CHECK(!is_3connected(sum));
  ConnectivityOptions tiny;
  tiny.exhaustive_bound = 4;
  CHECK_THROWS_AS(find_separation(pg3, 2, tiny), BudgetError);
}

TEST_CASE("vertical 3-connectivity") {
  // U_{2,4} with an element duplicated in parallel.
  const Matroid u = linear_gf2(std::vector<std::vector<int>>{{1, 0, 1, 1, 1}, {0, 1, 1, 1, 0}}, names(5));
  CHECK(!is_3connected(u));
  CHECK(is_vertically_3connected(u));
  CHECK(is_vertically_3connected(complete(5)));
  // Brute force on the 4-cycle: ({e0,e1},{e2,e3}) has lambda 1 and ranks 2,2.
  const Matroid c4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  {
    const auto r = oracle::of(c4);
    bool vertical = false;
    for (oracle::Mask a = 1; a < 15; ++a) {
      const int l = oracle::lambda(r, 4, a);
      const int ra = r(a), rb = r(15 & ~a);
      if ((l <= 0 && std::min(ra, rb) >= 1) || (l <= 1 && std::min(ra, rb) >= 2)) vertical = true;
    }
    CHECK(is_vertically_3connected(c4) == !vertical);
  }
  // si(M) 3-connected versus vertical 3-connectivity on random small inputs.
  std::mt19937 rng(5);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Matroid m = random_binary(rng, 3, 4 + static_cast<int>(rng() % 6));
    bool loopless = true;
    for (int e = 0; e < m.size(); ++e) loopless &= !is_loop(m, e);
    if (!loopless) continue;
    if (is_3connected(si(m)) != is_vertically_3connected(m)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("simplification maps") {
  const Matroid u24 = uniform(2, 4);
  CHECK(simplify(u24).kept == u24.ground());
  // K4 with edge 0-1 contracted: the triangle through it becomes a parallel pair.
  const Matroid k4 = complete(4);
  const Matroid k4c = contraction(k4, ElementSet{0});
  const auto s = simplify(k4c);
  CHECK(s.quotient.size() == 3);
  // K4 minus one edge has series pairs.
  const auto c = cosimplify(deletion(k4, ElementSet{0}));
  CHECK(c.quotient.size() == 3);
  // Lowest label is kept regardless of index order.
  const Matroid par = linear_gf2(std::vector<std::vector<int>>{{1, 1, 0}, {0, 0, 1}}, {"z", "a", "m"});
  const auto p = simplify(par);
  CHECK(p.quotient.labels() == std::vector<std::string>{"a", "m"});
  CHECK(p.fate[0] == Fate::Parallel);
  CHECK(p.representative[0] == 1);
  const Matroid withloop = linear_gf2(std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}}, names(3));
  CHECK(simplify(withloop).fate[2] == Fate::Loop);
  CHECK(cosimplify(withloop).fate[0] == Fate::Coloop);
  // |si(M)| = number of rank-1 flats.
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Matroid m = random_binary(rng, 3, 8);
    std::set<oracle::Mask> flats;
    for (int e = 0; e < 8; ++e) {
      if (is_loop(m, e)) continue;
      oracle::Mask f = 0;
      for (int g = 0; g < 8; ++g)
        if (m.rank(ElementSet{e, g}) == 1) f |= oracle::Mask{1} << g;
      flats.insert(f);
    }
    CHECK(si(m).size() == static_cast<int>(flats.size()));
  }
}

TEST_CASE("small structures") {
  const Matroid k4 = complete(4);
  auto oracle_circuits = oracle::circuits(oracle::of(k4), 6);
  int tri = 0;
  for (auto c : oracle_circuits) tri += oracle::popcount(c) == 3;
  CHECK(static_cast<int>(triangles(k4).size()) == tri);
  CHECK(tri == 4);
  auto dual_circuits = oracle::circuits(oracle::dual(oracle::of(k4), 6), 6);
  int triad = 0;
  for (auto c : dual_circuits) triad += oracle::popcount(c) == 3;
  CHECK(static_cast<int>(triads(k4).size()) == triad);
  CHECK(triad == 4);
  CHECK(segments(uniform(2, 4), 4).size() == 1);
  CHECK(segments(uniform(2, 5), 4).size() == 5);
  CHECK(segments(k4, 3).size() == 4);
  CHECK(parallel_classes(contraction(k4, ElementSet{0})).size() == 3);
  // Vertex star of vertex 0 in K4: edges 0-1, 0-2, 0-3.
  CHECK(is_cocircuit(k4, ElementSet{0, 1, 2}));
  CHECK(!is_cocircuit(k4, ElementSet{0, 1, 2, 3}));
}

namespace {

// Vertical 3-connectivity straight from the definition.
bool oracle_vertical3(const oracle::RankFn& r, int n) {
  const oracle::Mask full = (oracle::Mask{1} << n) - 1;
  const int rf = r(full);
  for (oracle::Mask a = 1; a < full; ++a) {
    const int ra = r(a), rb = r(full & ~a);
    for (int k = 1; k <= 2; ++k)
      if (ra + rb - rf <= k - 1 && std::min(ra, rb) >= k) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph routes for 3-connectivity agree with the definitions") {
  std::mt19937 rng(23);
  int seen_conn = 0, seen_vert = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int v = 3 + static_cast<int>(rng() % 4);
    int e = 4 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> es;
    if (trial % 2) {
      // Simple graphs, so that 3-connected samples actually occur.
      for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) es.emplace_back(a, b);
      std::shuffle(es.begin(), es.end(), rng);
      es.resize(std::min<std::size_t>(es.size(), static_cast<std::size_t>(e)));
      e = static_cast<int>(es.size());
    } else {
      for (int i = 0; i < e; ++i) es.emplace_back(static_cast<int>(rng() % v), static_cast<int>(rng() % v));
    }
    const Matroid m = graph_of(v, es);
    const auto r = oracle::of(m);
    const bool conn = oracle::three_connected(r, e);
    const bool vert = oracle_vertical3(r, e);
    CHECK(is_3connected(m) == conn);
    CHECK(is_vertically_3connected(m) == vert);
    seen_conn += conn;
    seen_vert += vert;
  }
  CHECK(seen_conn > 0);
  CHECK(seen_vert > seen_conn);
}

TEST_CASE("vertical 3-connectivity of binary matroids and their duals") {
  std::mt19937 rng(29);
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 3);
    const int cols = 4 + static_cast<int>(rng() % 6);
    const Matroid m = random_binary(rng, rows, cols);
    for (const Matroid& x : {m, dual(m)}) {
      const bool expect = oracle_vertical3(oracle::of(x), cols);
      CHECK(is_vertically_3connected(x) == expect);
      CHECK(is_3connected(si(x)) == expect);
      yes += expect;
    }
  }
  CHECK(yes > 0);
}
