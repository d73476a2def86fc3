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

#include <random>

#include "oracles.hpp"
#include "trimat/error.hpp"
#include "trimat/minors.hpp"
#include "trimat/structure.hpp"

using namespace trimat;

namespace {

std::vector<std::string> names(int n, const std::string& p = "e") {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(p + std::to_string(i));
  return v;
}

Matroid complete(int n) {
  std::vector<LabeledEdge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j, std::to_string(i) + std::to_string(j)});
  return graphic(n, es);
}

const std::vector<std::vector<int>> kFano = {
    {1, 0, 0, 1, 1, 0, 1},
    {0, 1, 0, 1, 0, 1, 1},
    {0, 0, 1, 0, 1, 1, 1},
};

Matroid fano() { return linear_gf2(kFano, names(7, "f")); }

Matroid random_binary(std::mt19937& rng, int rows, int cols) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
  for (auto& r : m)
    for (auto& x : r) x = static_cast<int>(rng() & 1U);
  return linear_gf2(m, names(cols));
}

Matroid shuffled(const Matroid& m, std::mt19937& rng) {
  std::vector<int> order(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return permute(m, order);
}

MinorOptions generic_only() {
  MinorOptions o;
  o.graph_route = false;
  return o;
}

}  // namespace

TEST_CASE("isomorphism") {
  std::mt19937 rng(9);
  const Matroid f7 = fano();
  auto phi = isomorphism(f7, shuffled(f7, rng));
  CHECK(phi.has_value());
  CHECK(!isomorphism(f7, dual(f7)));
  CHECK(oracle::isomorphic(oracle::of(f7), 7, oracle::of(shuffled(f7, rng)), 7));
  for (int t = 0; t < 100; ++t) {
    const Matroid m = random_binary(rng, 3, 6 + static_cast<int>(rng() % 2));
    const Matroid s = shuffled(m, rng);
    auto map = isomorphism(m, s);
    REQUIRE(map);
    for_each_subset(m.ground(), [&](const ElementSet& a) {
      ElementSet b;
      for (int e : a) b.set((*map)[e]);
      CHECK(m.rank(a) == s.rank(b));
      return true;
    });
    const Matroid other = random_binary(rng, 3, m.size());
    CHECK(isomorphism(m, other).has_value() ==
          oracle::isomorphic(oracle::of(m), m.size(), oracle::of(other), m.size()));
  }
  // Graph route for 3-connected graphs.
  auto k5 = complete(5);
  CHECK(isomorphism(k5, shuffled(k5, rng)).has_value());
}

TEST_CASE("canonical keys") {
  std::mt19937 rng(10);
  const Matroid f7 = fano();
  CHECK(canonical_key(f7) == canonical_key(shuffled(f7, rng)));
  CHECK(canonical_key(f7) != canonical_key(dual(f7)));
  CHECK(canonical_key(uniform(2, 4)) != canonical_key(uniform(2, 5)));
  CHECK(canonical_key(uniform(2, 12)) == canonical_key(shuffled(uniform(2, 12), rng)));
  for (int t = 0; t < 60; ++t) {
    const Matroid a = random_binary(rng, 3, 7);
    const Matroid b = random_binary(rng, 3, 7);
    CHECK((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(oracle::of(a), 7, oracle::of(b), 7));
    CHECK(canonical_key(a) == canonical_key(shuffled(a, rng)));
  }
  CHECK_THROWS_AS(canonical_key(uniform(2, 17)), BudgetError);
}

TEST_CASE("minor search agrees with exhaustive deletion/contraction") {
  std::mt19937 rng(12);
  const Matroid u24 = uniform(2, 4);
  const Matroid k4 = complete(4);
  for (int t = 0; t < 40; ++t) {
    const int rows = 3 + static_cast<int>(rng() % 2);
    const int cols = 7 + static_cast<int>(rng() % 2);
    const Matroid m = random_binary(rng, rows, cols);
    for (const Matroid* n : {&k4, &u24}) {
      const auto res = find_minor(m, *n, generic_only());
      REQUIRE(res.status != SearchStatus::Budget);
      CHECK(res.found() == oracle::has_minor(oracle::of(m), m.size(), oracle::of(*n), n->size()));
      if (res.witness) CHECK(verify_witness(m, *n, *res.witness));
      // Dual consistency.
      CHECK(find_minor(dual(m), dual(*n)).found() == res.found());
    }
  }
  const Matroid u23 = uniform(2, 3);
  const Matroid f7 = fano();
  auto w = has_minor(f7, u23);
  REQUIRE(w);
  CHECK(verify_witness(f7, u23, *w));
  CHECK(!has_minor(f7, u24));
}

TEST_CASE("graph and generic routes agree") {
  std::mt19937 rng(13);
  const Matroid k4 = complete(4);
  const Matroid k5 = complete(5);
  auto w = has_minor(k5, k4);
  REQUIRE(w);
  CHECK(w->contracted.count() == 1);
  CHECK(w->deleted.count() == 3);
  CHECK(verify_witness(k5, k4, *w));
  for (int t = 0; t < 40; ++t) {
    std::vector<LabeledEdge> es;
    const int nv = 6;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        if (rng() % 3) es.push_back({i, j, std::to_string(i) + "_" + std::to_string(j)});
    const Matroid g = graphic(nv, es);
    if (!is_3connected(g)) continue;
    const auto a = find_minor(g, k5);
    const auto b = find_minor(g, k5, generic_only());
    CHECK(a.found() == b.found());
    if (a.witness) CHECK(verify_witness(g, k5, *a.witness));
    for (const ElementSet& tri : triangles(g)) {
      const auto x = find_minor_using_triangle(g, k4, tri);
      const auto y = find_minor_using_triangle(g, k4, tri, generic_only());
      CHECK(x.found() == y.found());
      for (const auto* r : {&x, &y})
        if (r->witness) {
          CHECK(verify_witness(g, k4, *r->witness));
          CHECK(!tri.intersects(r->witness->contracted | r->witness->deleted));
        }
    }
  }
}

TEST_CASE("minor using a triangle") {
  const Matroid k5 = complete(5);
  const Matroid k4 = complete(4);
  for (const ElementSet& tri : triangles(k5)) {
    auto w = has_minor_using_triangle(k5, k4, tri);
    REQUIRE(w);
    CHECK(verify_witness(k5, k4, *w));
    const Matroid minor_m = minor(k5, w->contracted, w->deleted);
    ElementSet t_in;
    for (int e : tri) t_in.set(*minor_m.find(k5.label(e)));
    CHECK(is_circuit(minor_m, t_in));
  }
  // Identity witness.
  for (const ElementSet& tri : triangles(k4)) {
    auto w = has_minor_using_triangle(k4, k4, tri);
    REQUIRE(w);
    CHECK(w->contracted.empty());
    CHECK(w->deleted.empty());
  }
  CHECK_THROWS_AS(find_minor_using_triangle(k5, k4, ElementSet{0, 1}), ValidationError);
}

TEST_CASE("normal form rewriting") {
  // e0 loop, e1 coloop, e2 e3 e4 a triangle.
  const Matroid m = linear_gf2(std::vector<std::vector<int>>{{0, 1, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}}, names(5));
  auto [i, d] = normalize_witness(m, ElementSet{0}, {});
  CHECK(i.empty());
  CHECK(d == ElementSet{0});
  auto [i2, d2] = normalize_witness(m, {}, ElementSet{1});
  CHECK(i2 == ElementSet{1});
  CHECK(d2.empty());
  auto [i3, d3] = normalize_witness(m, ElementSet{2}, ElementSet{3});
  CHECK(i3 == ElementSet{2});
  CHECK(d3 == ElementSet{3});
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const Matroid r = random_binary(rng, 3, 7);
    ElementSet c, dd;
    for (int e = 0; e < 7; ++e) {
      const auto x = rng() % 3;
      if (x == 0) c.set(e);
      if (x == 1) dd.set(e);
    }
    auto [ni, nd] = normalize_witness(r, c, dd);
    CHECK((ni | nd) == (c | dd));
    CHECK(is_independent(r, ni));
    CHECK(is_coindependent(r, nd));
    CHECK(same_rank_function(minor(r, ni, nd), minor(r, c, dd)));
  }
}
