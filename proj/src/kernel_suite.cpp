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
// Property checks on the rank oracle and the matroid combinators.

#include <functional>
#include <random>

#include "jobs_internal.hpp"
#include "parallel.hpp"
#include "trimat/constructions.hpp"
#include "trimat/error.hpp"
#include "trimat/graph.hpp"
#include "trimat/minors.hpp"
#include "trimat/structure.hpp"

namespace trimat::detail {

namespace {

constexpr int kExhaustive = 12;
constexpr int kSamples = 10'000;

struct Named {
  std::string name;
  std::function<Matroid()> make;
};

ElementSet mask_set(std::uint64_t a) { return ElementSet(a, 0); }

std::vector<int> rank_table(const Matroid& m) {
  std::vector<int> rk(std::size_t{1} << m.size());
  for (std::uint64_t a = 0; a < rk.size(); ++a) rk[a] = m.rank_unchecked(mask_set(a));
  return rk;
}

ElementSet random_subset(std::mt19937_64& rng, const ElementSet& from, int percent = 50) {
  ElementSet out;
  for (int e : from)
    if (static_cast<int>(rng() % 100) < percent) out.set(e);
  return out;
}

Record record(std::string instance, bool ok, std::string detail) {
  return Record{std::move(instance), ok ? Outcome::Pass : Outcome::Fail, std::move(detail), nullptr, 0};
}

// Bounds, unit increase and local submodularity over every subset; local
// submodularity at every A implies the full inequality.
Record rank_axioms_exhaustive(const std::string& name, const Matroid& m) {
  const int n = m.size();
  const auto rk = rank_table(m);
  for (std::uint64_t a = 0; a < rk.size(); ++a) {
    if (rk[a] < 0 || rk[a] > std::popcount(a)) return record("rank-axioms/" + name, false, "bounds at " + std::to_string(a));
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1U) continue;
      const std::uint64_t ae = a | std::uint64_t{1} << e;
      if (rk[ae] < rk[a] || rk[ae] > rk[a] + 1)
        return record("rank-axioms/" + name, false, "unit increase at " + std::to_string(a));
      for (int f = e + 1; f < n; ++f) {
        if (a >> f & 1U) continue;
        const std::uint64_t af = a | std::uint64_t{1} << f;
        if (rk[ae] + rk[af] < rk[ae | af] + rk[a])
          return record("rank-axioms/" + name, false, "submodularity at " + std::to_string(a));
      }
    }
  }
  return record("rank-axioms/" + name, true, "all " + std::to_string(rk.size()) + " subsets");
}

Record rank_axioms_sampled(const std::string& name, const Matroid& m, std::mt19937_64& rng) {
  const ElementSet e = m.ground();
  for (int i = 0; i < kSamples; ++i) {
    const ElementSet a = random_subset(rng, e), b = random_subset(rng, e);
    const int ra = m.rank(a), rb = m.rank(b), ru = m.rank(a | b), ri = m.rank(a & b);
    bool ok = ra >= 0 && ra <= a.count() && ri <= ra && ra <= ru && ra + rb >= ru + ri;
    if (ok && !(e - a).empty()) {
      const int x = (e - a).to_vector()[rng() % (e - a).count()];
      const int rx = m.rank(a.with(x));
      ok = rx == ra || rx == ra + 1;
    }
    if (!ok) return record("rank-axioms-sampled/" + name, false, "pair " + std::to_string(i));
  }
  return record("rank-axioms-sampled/" + name, true, std::to_string(kSamples) + " random pairs");
}

Record dual_involution(const std::string& name, const Matroid& m) {
  const Matroid d = dual(m), dd = dual(d);
  if (d.labels() != m.labels() || dd.labels() != m.labels()) return record("dual-involution/" + name, false, "labels moved");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m.size()); ++a) {
    const ElementSet s = mask_set(a);
    const int formula = s.count() + m.rank(m.ground() - s) - m.rank();
    if (d.rank(s) != formula || dd.rank(s) != m.rank(s))
      return record("dual-involution/" + name, false, "differs at " + std::to_string(a));
  }
  return record("dual-involution/" + name, true, "M** = M and r* matches its formula on every subset");
}

Record lambda_self_dual(const std::string& name, const Matroid& m) {
  const Matroid d = dual(m);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m.size()); ++a) {
    const ElementSet s = mask_set(a);
    const int direct = m.rank(s) + m.rank(m.ground() - s) - m.rank();
    if (lambda(m, s) != direct || lambda(d, s) != direct)
      return record("lambda-self-dual/" + name, false, "differs at " + std::to_string(a));
  }
  return record("lambda-self-dual/" + name, true, "every subset");
}

// Two-step minors agree with the single combined minor.
Record minor_composition(const std::string& name, const Matroid& m, std::mt19937_64& rng) {
  for (int trial = 0; trial < 25; ++trial) {
    const ElementSet c1 = random_subset(rng, m.ground(), 20);
    const ElementSet d1 = random_subset(rng, m.ground() - c1, 25);
    const Matroid m1 = minor(m, c1, d1);
    const ElementSet c2 = random_subset(rng, m1.ground(), 20);
    const ElementSet d2 = random_subset(rng, m1.ground() - c2, 25);
    const Matroid two = minor(m1, c2, d2);
    const Matroid one = minor(m, c1 | m.set(m1.labels_of(c2)), d1 | m.set(m1.labels_of(d2)));
    if (one.labels() != two.labels()) return record("minor-composition/" + name, false, "ground sets differ");
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << one.size()); ++a)
      if (one.rank(mask_set(a)) != two.rank(mask_set(a)))
        return record("minor-composition/" + name, false, "rank differs in trial " + std::to_string(trial));
  }
  return record("minor-composition/" + name, true, "25 random (C1,D1,C2,D2)");
}

// The cycle matroid against the GF(2) vertex-edge incidence matrix.
Record graphic_vs_incidence(const std::string& name, const Graph& g) {
  std::vector<LabeledEdge> es;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.vertices), std::vector<int>(g.edges.size(), 0));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    labels.push_back("g" + std::to_string(i));
    es.push_back({u, v, labels.back()});
    rows[u][i] ^= 1;
    rows[v][i] ^= 1;
  }
  const Matroid gm = graphic(g.vertices, es);
  const Matroid lm = linear_gf2(rows, labels);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << gm.size()); ++a)
    if (gm.rank(mask_set(a)) != lm.rank(mask_set(a)))
      return record("graphic-vs-incidence/" + name, false, "differs at " + std::to_string(a));
  return record("graphic-vs-incidence/" + name, true, std::to_string(gm.size()) + " edges, every subset");
}

Record iso_record(const std::string& name, const Matroid& a, const Matroid& b) {
  const bool ok = isomorphism(a, b).has_value();
  return record(name, ok, ok ? "isomorphic" : "not isomorphic");
}

Graph random_graph(std::mt19937_64& rng, int vertices, int edges) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  Graph g;
  g.vertices = vertices;
  g.edges.assign(all.begin(), all.begin() + std::min<std::size_t>(all.size(), static_cast<std::size_t>(edges)));
  return g;
}

Matroid random_binary(std::mt19937_64& rng, int rank, int size) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(size)));
  for (auto& row : rows)
    for (int& x : row) x = static_cast<int>(rng() & 1U);
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) labels.push_back("b" + std::to_string(i));
  return linear_gf2(rows, labels);
}

}  // namespace

std::vector<Record> kernel_suite_records(int workers) {
  std::mt19937_64 rng(20260101);
  std::vector<Named> small = {
      {"U24", [] { return named("U24"); }},
      {"U36", [] { return uniform(3, 6); }},
      {"F7", [] { return named("F7"); }},
      {"F7*", [] { return named("F7*"); }},
      {"MK4", [] { return named("MK4"); }},
      {"MK5", [] { return named("MK5"); }},
      {"MK33", [] { return named("MK33"); }},
      {"MK33*", [] { return named("MK33*"); }},
      {"R10", [] { return named("R10"); }},
      {"MW5", [] { return named("MW5"); }},
      {"W3", [] { return named("W3"); }},
      {"W4", [] { return named("W4"); }},
      {"K331", [] { return named("K331"); }},
      {"truncate(MK5)", [] { return truncate(named("MK5")); }},
      {"principal_extension(F7,E,p)", [] {
         const Matroid f = named("F7");
         return principal_extension(f, f.ground(), "p");
       }},
      {"PG3\\{0,5,9}", [] {
         const Matroid p = named("PG3");
         return deletion(p, ElementSet{0, 5, 9});
       }},
  };
  for (int i = 0; i < 4; ++i) {
    const Matroid b = random_binary(rng, 3 + i % 3, 8 + i);
    small.push_back({"random-binary-" + std::to_string(i), [b] { return b; }});
  }
  std::vector<Named> large = {
      {"MK6", [] { return named("MK6"); }},
      {"PG3", [] { return named("PG3"); }},
      {"dual(PG4)", [] { return dual(named("PG4")); }},
      {"sharp_affine(6)", [] { return construct("sharp_affine", {false, false, {}}).matroid; }},
      {"sharp_graph(14)", [] { return construct("sharp_graph", {false, false, {}}).matroid; }},
  };
  std::vector<std::pair<std::string, Graph>> graphs = {{"K4", complete_graph(4)}, {"K5", complete_graph(5)}};
  for (int i = 0; i < 4; ++i) graphs.emplace_back("random-graph-" + std::to_string(i), random_graph(rng, 5 + i % 3, 9 + i));

  // Seeds are drawn up front so results do not depend on the worker count.
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < small.size() + large.size(); ++i) seeds.push_back(rng());

  std::vector<std::vector<Record>> parts(small.size() + large.size() + graphs.size() + 1);
  parallel_for(parts.size(), workers, [&](std::size_t i) {
    auto& out = parts[i];
    if (i < small.size()) {
      std::mt19937_64 local(seeds[i]);
      const Matroid m = small[i].make();
      if (m.size() > kExhaustive) throw DomainError("kernel suite: " + small[i].name + " is too large");
      out.push_back(rank_axioms_exhaustive(small[i].name, m));
      out.push_back(dual_involution(small[i].name, m));
      out.push_back(lambda_self_dual(small[i].name, m));
      out.push_back(minor_composition(small[i].name, m, local));
    } else if (i < small.size() + large.size()) {
      std::mt19937_64 local(seeds[i]);
      const auto& nm = large[i - small.size()];
      out.push_back(rank_axioms_sampled(nm.name, nm.make(), local));
    } else if (i < parts.size() - 1) {
      const auto& [name, g] = graphs[i - small.size() - large.size()];
      out.push_back(graphic_vs_incidence(name, g));
    } else {
      const Matroid k3a = graphic(3, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "p"}});
      const Matroid k3b = graphic(3, {{0, 1, "c"}, {1, 2, "d"}, {0, 2, "p"}});
      out.push_back(iso_record("two_sum(MK3,MK3)=U34", two_sum(k3a, k3b, "p"), uniform(3, 4)));
      out.push_back(iso_record("truncate(U35)=U25", truncate(uniform(3, 5)), uniform(2, 5)));
      const Matroid u23 = uniform(2, 3);
      out.push_back(iso_record("principal_extension(U23,E,e)=U24", principal_extension(u23, u23.ground(), "e"),
                               uniform(2, 4)));
    }
  });
  std::vector<Record> all;
  for (auto& p : parts)
    for (auto& r : p) all.push_back(std::move(r));
  return all;
}

}  // namespace trimat::detail
