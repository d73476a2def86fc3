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

#ifndef TRIMAT_MINORS_HPP
#define TRIMAT_MINORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimat/matroid.hpp"

namespace trimat {

/// M / contracted \ deleted is isomorphic to the pattern N. iso[i] is the
/// element of M that pattern element i is sent to.
struct MinorWitness {
  ElementSet contracted;
  ElementSet deleted;
  std::vector<int> iso;
};

enum class SearchStatus { Found, Absent, Budget };
std::string to_string(SearchStatus s);

struct MinorResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<MinorWitness> witness;
  /// Which search decided the answer and under what bound.
  std::string note;
  bool found() const { return status == SearchStatus::Found; }
};

struct MinorOptions {
  /// Backtracking nodes allowed before giving up with SearchStatus::Budget.
  std::uint64_t node_budget = 400'000'000;
  /// Use forest contraction + spanning embedding when both sides are graphic.
  bool graph_route = true;
};

/// Rank-preserving bijection from E(m) onto E(n) (map[i] = image of i), or
/// none. BudgetError when the search is cut off.
std::optional<std::vector<int>> isomorphism(const Matroid& m, const Matroid& n, const MinorOptions& opt = {});

/// Relabelling-invariant certificate; equal keys iff isomorphic. Built from
/// the circuit hypergraph, so limited to 16 elements (BudgetError above).
std::string canonical_key(const Matroid& m);

/// Minor search in normal form M / I \ I*.
MinorResult find_minor(const Matroid& m, const Matroid& n, const MinorOptions& opt = {});
/// Same, but T must survive as a triangle of the minor.
MinorResult find_minor_using_triangle(const Matroid& m, const Matroid& n, const ElementSet& t,
                                      const MinorOptions& opt = {});

/// Throwing forms: BudgetError instead of SearchStatus::Budget.
std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n, const MinorOptions& opt = {});
std::optional<MinorWitness> has_minor_using_triangle(const Matroid& m, const Matroid& n, const ElementSet& t,
                                                     const MinorOptions& opt = {});

/// Rewrites M / c \ d with c independent and d coindependent (loops move to
/// the deleted side, coloops to the contracted side).
std::pair<ElementSet, ElementSet> normalize_witness(const Matroid& m, const ElementSet& c, const ElementSet& d);

/// Re-checks a witness by direct rank queries: independence of I,
/// coindependence of I*, and rank agreement under iso (every subset when
/// |E(N)| <= 16, otherwise small subsets plus a deterministic sample).
bool verify_witness(const Matroid& m, const Matroid& n, const MinorWitness& w);

}  // namespace trimat

#endif  // TRIMAT_MINORS_HPP
