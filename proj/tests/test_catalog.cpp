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
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "trimat/catalog.hpp"
#include "trimat/constructions.hpp"
#include "trimat/error.hpp"

using namespace trimat;

namespace {

// ---- brute-force graph side -------------------------------------------

bool connected_without(int v, const std::vector<std::pair<int, int>>& es, unsigned gone) {
  std::vector<int> comp(static_cast<std::size_t>(v));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
  for (auto [a, b] : es)
    if (!(gone >> a & 1U) && !(gone >> b & 1U)) comp[root(a)] = root(b);
  int roots = 0;
  for (int x = 0; x < v; ++x)
    if (!(gone >> x & 1U) && root(x) == x) ++roots;
  return roots <= 1;
}

bool three_vertex_connected(int v, const std::vector<std::pair<int, int>>& es) {
  if (v < 4) return false;
  for (unsigned gone = 0; gone < (1U << v); ++gone)
    if (std::popcount(gone) <= 2 && !connected_without(v, es, gone)) return false;
  return true;
}

// Smallest edge bitmask over all relabelings of the vertices.
std::uint32_t canonical(int v, const std::vector<std::pair<int, int>>& es) {
  std::vector<int> p(static_cast<std::size_t>(v));
  std::iota(p.begin(), p.end(), 0);
  std::uint32_t best = ~0U;
  auto slot = [v](int a, int b) {
    if (a > b) std::swap(a, b);
    int k = 0;
    for (int i = 0; i < a; ++i) k += v - 1 - i;
    return k + (b - a - 1);
  };
  do {
    std::uint32_t m = 0;
    for (auto [a, b] : es) m |= 1U << slot(p[a], p[b]);
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::map<int, std::set<std::uint32_t>> brute_graphs(int max_v) {
  std::map<int, std::set<std::uint32_t>> out;
  for (int v = 4; v <= max_v; ++v) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) all.emplace_back(a, b);
    for (std::uint32_t m = 0; m < (1U << all.size()); ++m) {
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (m >> i & 1U) es.push_back(all[i]);
      if (three_vertex_connected(v, es)) out[v].insert(canonical(v, es));
    }
  }
  return out;
}

// ---- brute-force binary side --------------------------------------------

oracle::RankFn columns_rank(int r, const std::vector<int>& cols) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(r), std::vector<int>(cols.size()));
  for (int i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) rows[i][j] = cols[j] >> i & 1;
  return [rows](oracle::Mask a) { return oracle::gf2_rank(rows, a); };
}

// Isomorphism classes of 3-connected binary matroids with n elements and
// rank r <= n/2; the rest are duals.
int brute_binary_count(int n, int r) {
  const int points = (1 << r) - 1;
  std::vector<std::pair<std::vector<int>, oracle::RankFn>> reps;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      const auto rk = columns_rank(r, pick);
      const oracle::Mask full = (oracle::Mask{1} << n) - 1;
      if (rk(full) != r || !oracle::three_connected(rk, n)) return;
      // A cheap invariant first: triangles through each element.
      std::vector<int> inv(static_cast<std::size_t>(n), 0);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            if ((pick[a] ^ pick[b]) == pick[c]) {
              ++inv[a];
              ++inv[b];
              ++inv[c];
            }
      std::sort(inv.begin(), inv.end());
      for (const auto& [other_inv, other] : reps)
        if (other_inv == inv && oracle::isomorphic(rk, n, other, n)) return;
      reps.emplace_back(inv, rk);
      return;
    }
    for (int x = start; x <= points; ++x) {
      pick[depth] = x;
      rec(x + 1, depth + 1);
    }
  };
  rec(1, 0);
  return static_cast<int>(reps.size());
}

std::map<int, int> count_by(const std::vector<CatalogEntry>& es, bool graphs) {
  std::map<int, int> out;
  for (const auto& e : es) ++out[graphs ? entry_graph(e).vertices : e.matroid.size()];
  return out;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("trimat-test-" + name);
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("graph catalog equals the brute-force filter up to 6 vertices") {
  const auto brute = brute_graphs(6);
  const auto cat = gen_graphs_3c(6);
  std::map<int, std::set<std::uint32_t>> got;
  for (const auto& e : cat) {
    const Graph g = entry_graph(e);
    got[g.vertices].insert(canonical(g.vertices, g.edges));
    CHECK(is_3connected(e.matroid));
  }
  CHECK(got == brute);
  CHECK(brute.at(4).size() == 1);
  CHECK(brute.at(5).size() == 3);
  CHECK(cat.size() == 1 + 3 + 17);
}

TEST_CASE("graph catalog keys are unique and the 7-vertex count is stable") {
  const auto cat = gen_graphs_3c(7, 2);
  std::set<std::string> keys;
  for (const auto& e : cat) keys.insert(e.key);
  CHECK(keys.size() == cat.size());
  CHECK(count_by(cat, true) == std::map<int, int>{{4, 1}, {5, 3}, {6, 17}, {7, 136}});
  CHECK(gen_graphs_3c(7, 1).size() == cat.size());
}

TEST_CASE("binary catalog counts match the brute-force enumeration") {
  const auto cat = gen_binary_3c(8);
  const auto by = count_by(cat, false);
  for (int n = 6; n <= 8; ++n) {
    int expect = 0;
    for (int r = 2; 2 * r <= n; ++r) {
      const int c = brute_binary_count(n, r);
      expect += (2 * r == n) ? c : 2 * c;
    }
    CHECK_MESSAGE(by.at(n) == expect, "n = " << n);
  }
}

TEST_CASE("binary catalog membership, dual closure and dedup") {
  const auto cat = gen_binary_3c(10);
  CHECK(count_by(cat, false) == std::map<int, int>{{6, 1}, {7, 2}, {8, 3}, {9, 8}, {10, 24}});
  std::set<std::string> keys;
  for (const auto& e : cat) keys.insert(canonical_key(e.matroid));
  CHECK(keys.size() == cat.size());
  for (const char* name : {"MK4", "F7", "F7*", "R10", "MK5", "MK33*"})
    CHECK_MESSAGE(keys.count(canonical_key(named(name))) == 1, name);
  for (const auto& e : cat) {
    CHECK(keys.count(canonical_key(dual(e.matroid))) == 1);
    CHECK(is_3connected(e.matroid));
  }
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size() && cat[j].matroid.size() <= 8; ++j)
      if (cat[i].matroid.size() == cat[j].matroid.size()) CHECK(!isomorphism(cat[i].matroid, cat[j].matroid));
}

TEST_CASE("filter_with_minor") {
  const auto graphs = gen_graphs_3c(6);
  const auto with_k5 = filter_with_minor(graphs, named("MK5"));
  bool has_k5 = false;
  for (const auto& e : with_k5) has_k5 = has_k5 || isomorphism(e.matroid, named("MK5")).has_value();
  CHECK(has_k5);
  CHECK(with_k5.size() < graphs.size());

  const auto binary = gen_binary_3c(10);
  const auto with_f7 = filter_with_minor(binary, named("F7"));
  for (const char* regular : {"MK4", "R10", "MK5", "MK33*"})
    for (const auto& e : with_f7) CHECK(!isomorphism(e.matroid, named(regular)));
  CHECK(!with_f7.empty());
  CHECK(filter_with_minor(binary, named("U24")).empty());

  MinorOptions tiny;
  tiny.node_budget = 1;
  std::vector<FilterNote> notes;
  filter_with_minor(binary, named("F7"), tiny, &notes);
  CHECK(!notes.empty());
}

TEST_CASE("catalog files persist and are regenerated when stale") {
  const auto dir = fresh_dir("persist");
  const auto first = load_or_build(CatalogKind::Binary3c, 8, dir);
  const auto file = dir / "binary3c-v1-b8.jsonl";
  REQUIRE(std::filesystem::exists(file));
  const auto text = catalog_text(CatalogKind::Binary3c, 8, first);
  const auto again = load_or_build(CatalogKind::Binary3c, 8, dir);
  CHECK(catalog_text(CatalogKind::Binary3c, 8, again) == text);
  CHECK(parse_catalog(text, CatalogKind::Binary3c, 8).size() == first.size());
  CHECK_THROWS_AS(parse_catalog(text, CatalogKind::Graphs3c, 8), ValidationError);
  CHECK_THROWS_AS(parse_catalog(text, CatalogKind::Binary3c, 9), ValidationError);
  std::ofstream(file, std::ios::trunc) << "garbage\n";
  const auto rebuilt = load_or_build(CatalogKind::Binary3c, 8, dir);
  CHECK(catalog_text(CatalogKind::Binary3c, 8, rebuilt) == text);
  CHECK(catalog_text(CatalogKind::Binary3c, 8, load_or_build(CatalogKind::Binary3c, 8, dir, true)) == text);
  CHECK(fingerprint(text) == fingerprint(text));
  CHECK(fingerprint(text) != fingerprint(text + " "));
  std::filesystem::remove_all(dir);
}

TEST_CASE("catalog bounds are enforced") {
  CHECK_THROWS(gen_graphs_3c(3));
  CHECK_THROWS(gen_graphs_3c(10));
  CHECK_THROWS(gen_binary_3c(13));
}
