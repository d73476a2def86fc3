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

#ifndef TRIMAT_STRUCTURE_HPP
#define TRIMAT_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "trimat/matroid.hpp"

namespace trimat {

/// Partition (side_a, side_b) of the ground set. order is lambda(side_a) + 1,
/// so a k-separation has order <= k and both sides of size >= k.
struct Separation {
  ElementSet side_a;
  ElementSet side_b;
  int order = 0;
};

struct ConnectivityOptions {
  /// Largest ground set searched exhaustively.
  int exhaustive_bound = 24;
  /// Largest side examined by the small-side search beyond the bound.
  int small_side = 4;
};

/// r(A) + r(E - A) - r(M).
int lambda(const Matroid& m, const ElementSet& a);

/// A k-separation (|A|, |B| >= k, lambda(A) <= k - 1) if one exists.
/// Exhaustive; BudgetError when |E| exceeds the bound.
std::optional<Separation> find_separation(const Matroid& m, int k, const ConnectivityOptions& opt = {});

/// Outcome of a 3-connectivity test with the route that decided it.
struct ConnectivityResult {
  bool connected = false;
  /// A 1- or 2-separation when !connected and one was produced.
  std::optional<Separation> witness;
  /// "exhaustive", "small", "graph", "quick" or "chain".
  std::string method;
};

/// Tutte 3-connectivity: no 1- or 2-separation. Large inputs are decided by quick obstructions,
/// the graph criterion, a small-side search, or a chain of single-element
/// removals ending in an exhaustively checked matroid; BudgetError otherwise.
ConnectivityResult check_3connected(const Matroid& m, const ConnectivityOptions& opt = {});
bool is_3connected(const Matroid& m, const ConnectivityOptions& opt = {});

/// Vertical k-separation: lambda(A) <= k - 1 and min(r(A), r(B)) >= k.
std::optional<Separation> find_vertical_separation(const Matroid& m, int k, const ConnectivityOptions& opt = {});
/// No vertical 1- or 2-separation. Exhaustive.
bool is_vertically_3connected(const Matroid& m, const ConnectivityOptions& opt = {});

enum class Fate { Kept, Loop, Parallel, Coloop, Series };
std::string to_string(Fate f);

struct SimplificationMap {
  Matroid quotient;
  /// Elements of the input that survive, in input order.
  ElementSet kept;
  std::vector<Fate> fate;
  /// Input index standing in for each element (itself when kept, -1 for loops and coloops).
  std::vector<int> representative;
};

/// Deletes loops and all but the lexicographically smallest label of each
/// parallel class.
SimplificationMap simplify(const Matroid& m);
/// Dual of simplify: contracts coloops and all but one element per series class.
SimplificationMap cosimplify(const Matroid& m);
Matroid si(const Matroid& m);
Matroid co(const Matroid& m);

std::vector<ElementSet> triangles(const Matroid& m);
std::vector<ElementSet> triads(const Matroid& m);
/// k-element sets S with r(S) = 2 and every pair independent.
std::vector<ElementSet> segments(const Matroid& m, int k);
/// Rank-1 flats with loops removed, ordered by smallest member.
std::vector<ElementSet> parallel_classes(const Matroid& m);
std::vector<ElementSet> series_classes(const Matroid& m);

bool is_cocircuit(const Matroid& m, const ElementSet& a);

}  // namespace trimat

#endif  // TRIMAT_STRUCTURE_HPP
