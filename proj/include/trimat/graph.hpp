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

#ifndef TRIMAT_GRAPH_HPP
#define TRIMAT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimat/element_set.hpp"

namespace trimat {

/// Multigraph on vertices 0..vertices-1. Loops and parallel edges allowed;
/// edge i is edges[i].
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  bool is_simple() const;
  std::vector<int> degrees() const;
  /// Adjacency masks; requires vertices <= 64. Loops are ignored.
  std::vector<std::uint64_t> adjacency() const;
  bool operator==(const Graph&) const = default;
};

Graph complete_graph(int n);

/// Connected after removing isolated vertices (edgeless graphs count as connected).
bool is_connected_ignoring_isolated(const Graph& g);

/// Vertex 3-connectivity of the underlying simple graph: at least 4 vertices
/// and no vertex set of size <= 2 whose removal disconnects it.
bool is_3_vertex_connected(const Graph& g);

/// Contracts then deletes edges. vertex_map (optional) receives old -> new vertex.
Graph graph_minor(const Graph& g, const ElementSet& contract, const ElementSet& del,
                  std::vector<int>* vertex_map = nullptr);

/// One edge per parallel class, loops removed. kept receives the original
/// index of each surviving edge (the smallest in its class).
Graph simple_underlying(const Graph& g, std::vector<int>* kept = nullptr);

/// Vertex bijection a -> b carrying edges onto edges, for simple graphs.
std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b);

/// Vertex bijection phi: V(pattern) -> V(host) with every pattern edge
/// mapped onto a host edge and every host edge listed in required_host_edges hit by
/// some pattern edge. Both graphs simple with equal vertex counts.
std::optional<std::vector<int>> spanning_embedding(const Graph& pattern, const Graph& host,
                                                   const std::vector<int>& required_host_edges = {});

/// Certificate of the isomorphism class of a simple graph with <= 16 vertices.
std::string graph_canonical_form(const Graph& g);

}  // namespace trimat

#endif  // TRIMAT_GRAPH_HPP
