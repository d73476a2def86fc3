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

#include "oracles.hpp"
#include "trimat/constructions.hpp"
#include "trimat/error.hpp"
#include "trimat/rounded.hpp"
#include "trimat/structure.hpp"

using namespace trimat;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

// 9 elements, T = {e1, e2, e5}; the only MK4-hosts below it need two
// removals at once.
Matroid nine() {
  return linear_gf2({{1, 0, 0, 0, 1, 1, 0, 1, 0},
                     {0, 1, 0, 0, 1, 0, 1, 0, 1},
                     {0, 0, 1, 0, 0, 1, 1, 0, 0},
                     {0, 0, 0, 1, 0, 0, 0, 1, 1}},
                    names(9));
}

oracle::Mask mask(const ElementSet& s) {
  oracle::Mask a = 0;
  for (int e : s) a |= oracle::Mask{1} << e;
  return a;
}

// T (mask in the first n elements) is a triangle of r.
bool triangle_at(const oracle::RankFn& r, oracle::Mask t) {
  if (oracle::popcount(t) != 3 || r(t) != 2) return false;
  for (int e = 0; e < 32; ++e)
    if ((t >> e & 1U) && r(t & ~(oracle::Mask{1} << e)) != 2) return false;
  return true;
}

// Brute-force triangle property for the matroid r on n elements.
bool property(const oracle::RankFn& r, int n, oracle::Mask t, const Matroid& pattern) {
  return triangle_at(r, t) && oracle::three_connected(r, n) &&
         oracle::has_minor(r, n, oracle::of(pattern), pattern.size());
}

// No proper minor avoiding T keeps the property.
bool oracle_minimal(const Matroid& h, const ElementSet& t, const Matroid& pattern) {
  const int n = h.size();
  const oracle::RankFn r = oracle::of(h);
  const oracle::Mask tm = mask(t);
  const oracle::Mask rest = ((oracle::Mask{1} << n) - 1) & ~tm;
  for (oracle::Mask gone = rest; gone; gone = (gone - 1) & rest)
    for (oracle::Mask c = gone;; c = (c - 1) & gone) {
      std::vector<int> keep;
      for (int e = 0; e < n; ++e)
        if (!(gone >> e & 1U)) keep.push_back(e);
      oracle::Mask tt = 0;
      for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        if (tm >> keep[i] & 1U) tt |= oracle::Mask{1} << i;
      if (property(oracle::minor(r, n, c, gone & ~c), static_cast<int>(keep.size()), tt, pattern)) return false;
      if (c == 0) break;
    }
  return true;
}

void check_binary_witness(const Matroid& m, const Matroid& n, const ElementSet& t) {
  const auto w = verify_thm_binary(m, n, t);
  REQUIRE_MESSAGE(w.found, w.note);
  const oracle::RankFn hr = oracle::minor(oracle::of(m), m.size(), mask(w.contracted), mask(w.deleted));
  CHECK(oracle::isomorphic(hr, w.host.size(), oracle::of(w.host), w.host.size()));
  const ElementSet th = w.host.set(m.labels_of(t));
  CHECK(th.count() == 3);
  CHECK(((w.witness.contracted | w.witness.deleted) - th).empty());
  const Matroid np = minor(w.host, w.witness.contracted, w.witness.deleted);
  CHECK(oracle::isomorphic(oracle::of(np), np.size(), oracle::of(n), n.size()));
  CHECK(oracle::three_connected(oracle::of(w.host), w.host.size()));
}

}  // namespace

TEST_CASE("binary witnesses for small hosts") {
  const Matroid f7 = named("F7");
  for (const ElementSet& t : triangles(f7)) check_binary_witness(f7, named("MK4"), t);
  const Matroid m = nine();
  check_binary_witness(m, named("MK4"), m.set({"e1", "e2", "e5"}));
  const Matroid pg3 = projective_geometry(3);
  check_binary_witness(deletion(pg3, pg3.set({pg3.label(0), pg3.label(5), pg3.label(9)})), named("MK4"),
                       triangles(deletion(pg3, pg3.set({pg3.label(0), pg3.label(5), pg3.label(9)}))).front());
}

TEST_CASE("minimal host needs two removals at once") {
  const Matroid m = nine();
  const Matroid n = named("MK4");
  const ElementSet t = m.set({"e1", "e2", "e5"});
  REQUIRE(property(oracle::of(m), m.size(), mask(t), n));
  CHECK(!oracle_minimal(m, t, n));
  // No single move keeps the property, so a one-step descent would stop here.
  bool single = false;
  for (int e : m.ground() - t)
    for (bool contract : {true, false}) {
      const oracle::Mask bit = oracle::Mask{1} << e;
      const auto r = oracle::minor(oracle::of(m), m.size(), contract ? bit : 0, contract ? 0 : bit);
      oracle::Mask tt = 0;
      for (int f : t) tt |= oracle::Mask{1} << (f < e ? f : f - 1);
      single = single || property(r, m.size() - 1, tt, n);
    }
  CHECK(!single);
  const auto rep = minimal_triangle_host(m, n, t);
  CHECK(rep.host.size() < m.size());
  const ElementSet th = rep.host.set(m.labels_of(t));
  CHECK(oracle_minimal(rep.host, th, n));
  CHECK(property(oracle::of(rep.host), rep.host.size(), mask(th), n));
  CHECK_MESSAGE(rep.ok(), to_string(rep.classification.kase));
}

TEST_CASE("a host equal to the pattern is Contained") {
  const Matroid k4 = named("MK4");
  const ElementSet t = triangles(k4).front();
  const auto c = classify_minimal(k4, k4, t);
  CHECK(c.kase == Kase::Contained);
  CHECK(c.ok());
  const auto rep = minimal_triangle_host(named("F7"), k4, triangles(named("F7")).front());
  CHECK(rep.host.size() == 6);
  CHECK(rep.classification.kase == Kase::Contained);
  CHECK(!has_triangle_property(k4, named("F7"), t, exhaustive_oracle()));
}

TEST_CASE("splitter chains") {
  const Matroid f7 = named("F7");
  const Matroid k4 = named("MK4");
  for (const auto& [m, n] : std::vector<std::pair<Matroid, Matroid>>{
           {f7, k4}, {named("R10"), named("MK33")}, {projective_geometry(3), f7}}) {
    const auto res = splitter_chain(m, n);
    REQUIRE_MESSAGE(res.status == ChainStatus::Found, res.note);
    REQUIRE(res.chain);
    ElementSet c, d;
    CHECK(static_cast<int>(res.chain->steps.size()) == m.size() - n.size());
    for (const auto& s : res.chain->steps) {
      (s.op == ChainOp::Contract ? c : d).set(s.element);
      const Matroid step = minor(m, c, d);
      if (step.size() <= 16) CHECK(oracle::three_connected(oracle::of(step), step.size()));
    }
    const Matroid last = minor(m, c, d);
    CHECK(last.size() == n.size());
    if (n.size() <= 9) CHECK(oracle::isomorphic(oracle::of(last), last.size(), oracle::of(n), n.size()));
    CHECK(all_passed(res.checks));
  }
  // Wheels are excluded when M has a bigger wheel.
  CHECK(splitter_chain(wheel(4), wheel(3)).status == ChainStatus::Hypothesis);
  CHECK(splitter_chain(whirl(4), whirl(3)).status == ChainStatus::Hypothesis);
  CHECK_THROWS_AS(splitter_chain(k4, f7), ValidationError);
}

TEST_CASE("triangle-roundedness over tiny catalogs") {
  CHECK(check_triangle_rounded({named("F7"), named("F7*")}, {named("MK4")}).empty());
  const auto b = remark_graph(6, 2, BundleOptions{false, false, {}});
  const auto fails = check_triangle_rounded({b.matroid}, {complete_graph_matroid(6)});
  bool saw_t = false;
  for (const auto& f : fails) saw_t = saw_t || f.triangle == b.distinguished.at("T");
  CHECK(saw_t);
}
