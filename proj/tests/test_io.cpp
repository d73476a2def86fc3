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
#include "trimat/io.hpp"
#include "trimat/structure.hpp"

using namespace trimat;

namespace {

bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.labels() != b.labels()) return false;
  const auto ra = oracle::of(a), rb = oracle::of(b);
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << a.size()); ++s)
    if (ra(s) != rb(s)) return false;
  return true;
}

// Serialize, parse, and serialize again: the matroid and the text survive.
void round_trip(const Matroid& m) {
  const std::string text = serialize(m);
  const Matroid back = parse_matroid(text);
  CHECK(same_matroid(m, back));
  CHECK(serialize(back) == text);
}

std::string error_of(const std::string& text) {
  try {
    parse_matroid(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("base representations round-trip") {
  round_trip(named("F7"));
  round_trip(named("R10"));
  round_trip(named("MK5"));
  round_trip(uniform(2, 5));
  round_trip(uniform(3, 4, {"p", "q", "r", "s"}));
  round_trip(rational_affine(2, {{"a", {"0", "0"}}, {"b", {"1", "0"}}, {"c", {"1/2", "0"}}, {"d", {"-3/4", "2"}}}));
  round_trip(named("K331"));
}

TEST_CASE("derived matroids round-trip") {
  const Matroid f7 = named("F7");
  const Matroid k5 = named("MK5");
  round_trip(dual(f7));
  round_trip(minor(k5, ElementSet{0}, ElementSet{3, 7}));
  round_trip(truncate(uniform(3, 5)));
  round_trip(principal_extension(uniform(2, 3), uniform(2, 3).ground(), "e"));
  const Matroid a = graphic(3, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "p"}});
  const Matroid b = graphic(3, {{0, 1, "c"}, {1, 2, "d"}, {0, 2, "p"}});
  round_trip(two_sum(a, b, "p"));
  const Matroid l = relabel(f7, {"1", "2", "3", "l4", "l5", "l6", "l7"});
  round_trip(three_sum_binary(f7, l, {"1", "2", "3"}));
  const Matroid k4 = named("MK4");
  // A triangle of M(K4) is a circuit-hyperplane; relaxing it gives the whirl.
  round_trip(relax(k4, triangles(k4).front()));
  round_trip(relabel(f7, {"a", "b", "c", "d", "e", "f", "g"}));
  round_trip(permute(f7, {6, 5, 4, 3, 2, 1, 0}));
  round_trip(dual(minor(named("MK33"), ElementSet{0}, ElementSet{1})));
}

TEST_CASE("descriptors name the offending location") {
  CHECK(error_of("{").find("matroid descriptor") != std::string::npos);
  CHECK(error_of(R"({"type":"nope"})").find("type") != std::string::npos);
  CHECK(error_of(R"({"type":"uniform","r":3,"n":2})") != "no error");
  CHECK(error_of(R"({"type":"linear_gf2","matrix":[[1,0],[0,1]],"labels":["a"]})") != "no error");
  CHECK(error_of(R"({"type":"linear_gf2","matrix":[[1,2]],"labels":["a","b"]})") != "no error");
  CHECK(error_of(R"({"type":"graphic","vertices":2,"edges":[[0,5,"a"]]})") != "no error");
  CHECK(error_of(R"({"type":"rational_affine","dim":2,"points":{"a":[1]}})") != "no error");
  CHECK(error_of(R"({"type":"rational_affine","dim":1,"points":{"a":["1/0"]}})") != "no error");
  const std::string bad_child =
      R"({"type":"derived","op":"minor","args":{"contract":["zz"],"delete":[]},"children":[{"type":"uniform","r":1,"n":2}]})";
  const std::string msg = error_of(bad_child);
  CHECK(msg != "no error");
  CHECK(error_of(R"({"type":"derived","op":"frobnicate","args":{},"children":[]})") != "no error");
  CHECK(error_of(R"({"type":"derived","op":"dual","args":{},"children":[]})") != "no error");
}
