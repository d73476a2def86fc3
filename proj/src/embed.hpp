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

// Shared backtracking core for isomorphism and minor search.

#ifndef TRIMAT_SRC_EMBED_HPP
#define TRIMAT_SRC_EMBED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trimat/matroid.hpp"

namespace trimat::detail {

/// Independence oracle on the pattern, tabulated when small.
class PatternIndependence {
 public:
  explicit PatternIndependence(const Matroid& p);
  bool independent(const ElementSet& s) const;
  const Matroid& matroid() const { return p_; }

 private:
  Matroid p_;
  std::vector<std::uint8_t> table_;  // rank per subset when |E| <= 20
};

struct EmbedProblem {
  const Matroid* host = nullptr;
  const PatternIndependence* pattern = nullptr;
  /// Pattern elements in assignment order (every element exactly once).
  std::vector<int> order;
  /// Allowed host images for each position of `order`.
  std::vector<ElementSet> candidates;
  /// Optional per-element colour that images must match (isomorphism).
  const std::vector<std::uint64_t>* pattern_colour = nullptr;
  const std::vector<std::uint64_t>* host_colour = nullptr;
};

/// Injective phi with independence preserved in both directions on every
/// subset, i.e. the pattern is isomorphic to host restricted to the image.
/// Host and pattern must have equal rank for the result to be a spanning
/// restriction. Returns phi indexed by pattern element; nodes is charged one
/// per tried assignment and the search stops (nullopt, exhausted=false) when
/// it exceeds budget.
std::optional<std::vector<int>> embed(const EmbedProblem& prob, std::uint64_t& nodes, std::uint64_t budget,
                                      bool& exhausted);

/// Greedy order: `first` in the given order, then repeatedly the element
/// adding the least rank to the placed set (ties by index).
std::vector<int> constrained_order(const Matroid& p, const std::vector<int>& first);

}  // namespace trimat::detail

#endif  // TRIMAT_SRC_EMBED_HPP
