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

#include <set>

#include "oracles.hpp"
#include "trimat/constructions.hpp"
#include "trimat/error.hpp"
#include "trimat/minors.hpp"
#include "trimat/structure.hpp"

using namespace trimat;

namespace {

const Check* claim(const ConstructionBundle& b, const std::string& name) {
  for (const auto& c : b.claims)
    if (c.name == name) return &c;
  return nullptr;
}

void require_claims(const ConstructionBundle& b, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const Check* c = claim(b, n);
    REQUIRE_MESSAGE(c, b.name << " has no claim " << n);
    CHECK_MESSAGE(c->passed, b.name << "/" << n << ": " << c->detail);
  }
}

BundleOptions validate_only() {
  BundleOptions o;
  o.classify = false;
  return o;
}

}  // namespace

TEST_CASE("named matroids") {
  const Matroid f7 = named("F7");
  CHECK(f7.size() == 7);
  CHECK(f7.rank() == 3);
  CHECK(triangles(f7).size() == 7);
  const Matroid r10 = named("R10");
  CHECK(r10.size() == 10);
  CHECK(r10.rank() == 5);
  CHECK(canonical_key(r10) == canonical_key(dual(r10)));
  CHECK(isomorphism(named("MW3"), named("MK4")));
  CHECK(isomorphism(projective_geometry(2), f7));
  CHECK(isomorphism(whirl(2), named("U24")));
  CHECK(!isomorphism(whirl(3), wheel(3)));
  CHECK(wheel(4).size() == 8);
  CHECK(wheel(4).rank() == 4);
  CHECK(projective_geometry(3).size() == 15);
  CHECK(is_3connected(named("MK33*")));
  CHECK_THROWS_AS(named("K7"), DomainError);
  CHECK_THROWS_AS(named("MWx"), DomainError);
}

TEST_CASE("the 6-vertex graph K with K/uv = K5") {
  const Matroid k = k331_1();
  CHECK(k.size() == 11);
  CHECK(oracle::three_connected(oracle::of(k), k.size()));
  CHECK(is_3connected(k));
  const Matroid kuv = contraction(k, k.set({"uv"}));
  CHECK(isomorphism(kuv, named("MK5")));
  // G = K + va, used in the K5 argument.
  CHECK(is_3connected(deletion(k, k.set({"ab"}))) == oracle::three_connected(oracle::of(deletion(k, k.set({"ab"}))), 10));
}

TEST_CASE("remark graph") {
  const auto b = remark_graph(6, 2);
  CHECK(graph_representation(b.matroid)->vertices == 7);
  CHECK(b.distinguished.at("T").count() == 3);
  require_claims(b, {"three-connected", "contract-delete-is-Kn", "has-Kn-minor", "no-Kn-minor-uses-T"});
  const auto direct = find_minor_using_triangle(b.matroid, complete_graph_matroid(6), b.distinguished.at("T"));
  CHECK(direct.status == SearchStatus::Absent);
  CHECK_THROWS_AS(remark_graph(5, 2), ValidationError);
  CHECK_THROWS_AS(remark_graph(6, 3), ValidationError);
}

TEST_CASE("sharpness constructions: sizes and validators") {
  const auto g = sharp_graph(14, validate_only());
  CHECK(graph_representation(g.matroid)->vertices == 17);
  CHECK(g.ok());

  const auto a = sharp_affine(6, validate_only());
  CHECK(a.matroid.size() == 19);
  const ElementSet tx = a.distinguished.at("T") | a.distinguished.at("x");
  CHECK(a.matroid.rank(tx) == 2);
  CHECK(tx.count() == 4);
  CHECK(a.ok());

  const auto p = sharp_pg(6, 4, validate_only());
  CHECK(p.matroid.size() == 67);
  require_claims(p, {"N1-is-P+x1", "N2-is-truncation", "C1-T+y-cocircuit", "C2-E(P)-hyperplane",
                     "C3-short-circuits-meeting-T+y", "C4-contract-p-too-small", "C5-triangles-of-M/X", "C6-has-N1",
                     "C6-has-N2"});
  CHECK_THROWS_AS(sharp_graph(13), ValidationError);
  CHECK_THROWS_AS(sharp_affine(5), ValidationError);
  CHECK_THROWS_AS(sharp_pg(6, 5), ValidationError);
}

TEST_CASE("construct parses names and arguments") {
  CHECK(construct("sharp_graph(15)", BundleOptions{false, false, {}}).matroid.size() >
        construct("sharp_graph", BundleOptions{false, false, {}}).matroid.size());
  CHECK(construct("remark_graph(7,2)", BundleOptions{false, false, {}}).name == "remark_graph(7,2)");
  CHECK_THROWS_AS(construct("nope"), DomainError);
  CHECK_THROWS_AS(construct("sharp_pg(6,x)"), ValidationError);
  CHECK_THROWS_AS(construct("sharp_graph(14,1)"), ValidationError);
  CHECK_THROWS_AS(construct("sharp_graph(14"), ValidationError);
}

TEST_CASE("constructions are deterministic") {
  const auto a1 = sharp_affine(6, BundleOptions{false, false, {}});
  const auto a2 = sharp_affine(6, BundleOptions{false, false, {}});
  CHECK(same_rank_function(a1.matroid, a2.matroid));
}
