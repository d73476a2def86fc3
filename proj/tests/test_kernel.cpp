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
#include "trimat/matroid.hpp"

using namespace trimat;

namespace {

const std::vector<std::vector<int>> kFano = {
    {1, 0, 0, 1, 1, 0, 1},
    {0, 1, 0, 1, 0, 1, 1},
    {0, 0, 1, 0, 1, 1, 1},
};

std::vector<std::string> names(int n, const std::string& p = "e") {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(p + std::to_string(i));
  return v;
}

Matroid k4() {
  return graphic(4, {{0, 1, "a"}, {0, 2, "b"}, {0, 3, "c"}, {1, 2, "d"}, {1, 3, "e"}, {2, 3, "f"}});
}

bool same_as(const oracle::RankFn& r, const Matroid& m) {
  const int n = m.size();
  for (oracle::Mask a = 0; a < (oracle::Mask{1} << n); ++a)
    if (r(a) != m.rank_unchecked(ElementSet(a, 0))) return false;
  return true;
}

}  // namespace

TEST_CASE("base representations match independent rank oracles") {
  const Matroid u24 = uniform(2, 4);
  CHECK(u24.rank() == 2);
  for_each_subset_of_size(u24.ground(), 3, [&](const ElementSet& s) {
    CHECK(u24.rank(s) == 2);
    return true;
  });

  const Matroid g = k4();
  CHECK(g.size() == 6);
  CHECK(g.rank() == 3);
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(same_as([&](oracle::Mask a) { return oracle::graph_rank(4, edges, a); }, g));

  const Matroid f7 = linear_gf2(kFano, names(7));
  CHECK(f7.rank() == 3);
  CHECK(same_as([&](oracle::Mask a) { return oracle::gf2_rank(kFano, a); }, f7));
  CHECK(circuits_up_to(f7, 3).size() == 7);
  CHECK(circuits_up_to(u24, 3).size() == 4);
  CHECK(oracle::circuits(oracle::of(f7), 7).size() ==
        circuits_up_to(f7, 7).size());
}

TEST_CASE("graphic and incidence-matrix representations agree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LabeledEdge> es;
    std::vector<std::vector<int>> inc(5, std::vector<int>(10, 0));
    for (int i = 0; i < 10; ++i) {
      int u = static_cast<int>(rng() % 5), v = static_cast<int>(rng() % 5);
      es.push_back({u, v, "x" + std::to_string(i)});
      if (u != v) inc[u][i] = inc[v][i] = 1;
    }
    const Matroid g = graphic(5, es);
    const Matroid b = linear_gf2(inc, names(10, "x"));
    CHECK(same_rank_function(g, b));
    auto rep = binary_representation(g);
    REQUIRE(rep);
    CHECK(same_rank_function(linear_gf2(*rep, g.labels()), g));
  }
}

TEST_CASE("rank axioms hold for base and derived matroids") {
  const Matroid f7 = linear_gf2(kFano, names(7));
  const std::vector<Matroid> ms = {
      uniform(2, 4), uniform(3, 6), k4(), f7, dual(f7), truncate(f7),
      principal_extension(f7, f7.ground(), "p"), minor(f7, ElementSet{0}, ElementSet{1}),
      two_sum(f7, relabel(f7, {"e0", "f1", "f2", "f3", "f4", "f5", "f6"}), "e0"),
  };
  for (const Matroid& m : ms) CHECK(oracle::rank_axioms(oracle::of(m), m.size()));
}

TEST_CASE("dual and minor formulas") {
  const Matroid f7 = linear_gf2(kFano, names(7));
  CHECK(same_rank_function(dual(dual(f7)), f7));
  CHECK(same_as(oracle::dual(oracle::of(f7), 7), dual(f7)));
  CHECK(dual(k4()).rank() == 3);
  CHECK(same_rank_function(dual(uniform(2, 4)), uniform(2, 4)));
  const Matroid once = minor(f7, ElementSet{0, 2}, ElementSet{5});
  const Matroid twice = minor(minor(f7, ElementSet{0}, {}), ElementSet{1}, ElementSet{4});
  CHECK(same_rank_function(once, twice));
  CHECK(same_as(oracle::minor(oracle::of(f7), 7, 0b101, 0b100000), once));
  CHECK(minor(f7, {}, {}).node_ptr() == f7.node_ptr());
  CHECK_THROWS_AS(minor(f7, ElementSet{1}, ElementSet{1}), DomainError);
  CHECK_THROWS_AS(f7.rank(ElementSet{9}), DomainError);
}

TEST_CASE("closure") {
  const Matroid f7 = linear_gf2(kFano, names(7));
  CHECK(closure(uniform(2, 4), ElementSet{0, 1}) == ElementSet::full(4));
  CHECK(closure(k4(), ElementSet{2}) == ElementSet{2});
  // e0 + e1 = e3 in the matrix above.
  CHECK(closure(f7, ElementSet{0, 1}) == ElementSet{0, 1, 3});
}

TEST_CASE("truncation and principal extension") {
  CHECK(same_rank_function(truncate(uniform(3, 5)), uniform(2, 5)));
  CHECK(truncate(k4()).rank() == 2);
  CHECK_THROWS_AS(truncate(uniform(0, 3)), DomainError);
  const Matroid u23 = uniform(2, 3, {"e0", "e1", "e2"});
  const Matroid ext = principal_extension(u23, u23.ground(), "e3");
  CHECK(same_rank_function(ext, uniform(2, 4)));
  CHECK_THROWS_AS(principal_extension(u23, u23.ground(), "e1"), DomainError);
  const Matroid f7 = linear_gf2(kFano, names(7));
  CHECK_THROWS_AS(principal_extension(f7, ElementSet{0, 1}, "p"), ValidationError);
  // Added freely on the line {e0,e1,e3}.
  const Matroid onl = principal_extension(f7, ElementSet{0, 1, 3}, "p");
  CHECK(onl.rank(ElementSet{0, 1, 7}) == 2);
  CHECK(onl.rank(ElementSet{0, 2, 7}) == 3);
}

TEST_CASE("two_sum of triangles is a 4-circuit") {
  const Matroid t1 = graphic(3, {{0, 1, "p"}, {1, 2, "a"}, {0, 2, "b"}});
  const Matroid t2 = graphic(3, {{0, 1, "p"}, {1, 2, "c"}, {0, 2, "d"}});
  const Matroid s = two_sum(t1, t2, "p");
  CHECK(s.size() == 4);
  CHECK(oracle::isomorphic(oracle::of(s), 4, oracle::of(uniform(3, 4)), 4));
  CHECK(oracle::lambda(oracle::of(s), 4, 0b0011) == 1);
  // Label clash on a non-basepoint is renamed with a prime.
  const Matroid c = two_sum(t1, t1, "p");
  CHECK(c.labels() == std::vector<std::string>{"a", "b", "a'", "b'"});
  CHECK(sum_relabeling(c).at("a") == "a'");
  auto rep = binary_representation(s);
  REQUIRE(rep);
  CHECK(same_rank_function(linear_gf2(*rep, s.labels()), s));
  CHECK_THROWS_AS(two_sum(t1, t2, "a"), ValidationError);
}

TEST_CASE("three_sum_binary agrees with the cycle-space definition") {
  const Matroid k = linear_gf2(kFano, {"s1", "s2", "k1", "s3", "k2", "k3", "k4"});
  const Matroid l = linear_gf2(kFano, {"s1", "s2", "l1", "s3", "l2", "l3", "l4"});
  const Matroid r = three_sum_binary(k, l, {"s1", "s2", "s3"});
  CHECK(r.size() == 8);
  CHECK(r.size() == k.size() + l.size() - 6);
  // Oracle: cycles of R are C1 ^ C2 for cycles Ci with equal traces on S.
  std::vector<oracle::Mask> cycles;
  auto is_cycle = [&](oracle::Mask a) {
    for (const auto& row : kFano) {
      int x = 0;
      for (int j = 0; j < 7; ++j)
        if (a >> j & 1U) x ^= row[j];
      if (x) return false;
    }
    return true;
  };
  const oracle::Mask s_mask = 0b1011;  // s1 s2 s3 in both copies
  std::set<oracle::Mask> rc;
  for (oracle::Mask c1 = 0; c1 < 128; ++c1)
    for (oracle::Mask c2 = 0; c2 < 128; ++c2) {
      if (!is_cycle(c1) || !is_cycle(c2) || (c1 & s_mask) != (c2 & s_mask)) continue;
      oracle::Mask out = 0;
      int pos = 0;
      for (int j = 0; j < 7; ++j)
        if (!(s_mask >> j & 1U)) out |= (c1 >> j & 1U) << pos++;
      for (int j = 0; j < 7; ++j)
        if (!(s_mask >> j & 1U)) out |= (c2 >> j & 1U) << pos++;
      rc.insert(out);
    }
  // r(A) = |A| - log2(#cycles inside A).
  auto oracle_rank = [&](oracle::Mask a) {
    int cnt = 0;
    for (oracle::Mask c : rc)
      if ((c & ~a) == 0) ++cnt;
    return oracle::popcount(a) - std::countr_zero(static_cast<unsigned>(cnt));
  };
  CHECK(r.rank() == 4);
  CHECK(same_as(oracle_rank, r));
  CHECK_THROWS_AS(three_sum_binary(k, l, {"s1", "s2", "k1"}), ValidationError);
  CHECK_THROWS_AS(three_sum_binary(uniform(2, 7, names(7)), l, {"s1", "s2", "s3"}), ValidationError);
}

TEST_CASE("rational affine ranks are exact") {
  const Matroid line = rational_affine(2, {{"a", {"0", "0"}}, {"b", {"1/3", "1/2"}}, {"c", {"2/3", "1"}}, {"d", {"1", "0"}}});
  CHECK(line.rank() == 3);
  CHECK(line.rank(line.set({"a", "b", "c"})) == 2);
  CHECK(line.rank(line.set({"a", "b", "d"})) == 3);
  // Coordinates large enough to force the arbitrary-precision path.
  const std::string big = "123456789012345678901234567890";
  const Matroid far = rational_affine(2, {{"a", {big, "1"}}, {"b", {"-" + big, "-1/" + big}}, {"c", {"0", "1/2"}}, {"d", {"1", big}}});
  CHECK(far.rank() == 3);
  CHECK(far.rank(far.set({"a", "b"})) == 2);
  const Matroid col = rational_affine(1, {{"a", {big}}, {"b", {big + "0"}}, {"c", {"7/" + big}}});
  CHECK(col.rank() == 2);
  CHECK_THROWS_AS(rational_affine(2, {{"a", {"1"}}}), ValidationError);
  CHECK_THROWS_AS(rational_affine(1, {{"a", {"1/0"}}}), ValidationError);
  CHECK_THROWS_AS(rational_affine(1, {{"a", {"x"}}}), ValidationError);
}

TEST_CASE("builders reject malformed input") {
  CHECK_THROWS_AS(uniform(5, 4), ValidationError);
  CHECK_THROWS_AS(graphic(2, {{0, 3, "a"}}), ValidationError);
  CHECK_THROWS_AS(linear_gf2(std::vector<std::vector<int>>{{1, 0}, {1}}, names(2)), ValidationError);
  CHECK_THROWS_AS(linear_gf2(kFano, names(6)), ValidationError);
  CHECK_THROWS_AS(uniform(1, 2, {"a", "a"}), ValidationError);
}

TEST_CASE("relaxation of a circuit-hyperplane") {
  // W^3 = M(K4) relaxed at its rim.
  const Matroid w = k4();
  const ElementSet rim = w.set({"d", "e", "f"});
  const Matroid whirl = relax(w, rim);
  CHECK(whirl.rank(rim) == 3);
  CHECK(circuits_up_to(whirl, 3).size() == 3);
  CHECK_THROWS_AS(relax(w, w.set({"a", "b"})), ValidationError);
}
