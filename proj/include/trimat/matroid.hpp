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

#ifndef TRIMAT_MATROID_HPP
#define TRIMAT_MATROID_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimat/element_set.hpp"
#include "trimat/gf2.hpp"
#include "trimat/graph.hpp"

namespace trimat {

enum class Representation { LinearGF2, Graphic, Uniform, RationalAffine, Derived };

enum class DerivedOp { Dual, Minor, TwoSum, ThreeSumBinary, PrincipalExtension, Truncation, Relaxation, Relabel };

std::string to_string(DerivedOp op);

namespace detail {
class Node;
}

/// Immutable matroid value: labelled ground set 0..n-1 plus an exact rank
/// oracle. Copies share the underlying representation.
class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const detail::Node> node);

  int size() const;
  ElementSet ground() const { return ElementSet::full(size()); }
  const std::vector<std::string>& labels() const;
  const std::string& label(int i) const { return labels()[static_cast<std::size_t>(i)]; }
  std::optional<int> find(std::string_view label) const;
  /// Throws DomainError when the label is not in the ground set.
  int index(std::string_view label) const;
  ElementSet set(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const ElementSet& s) const;

  /// Rank of a subset of the ground set; DomainError otherwise.
  int rank(const ElementSet& a) const;
  int rank() const { return full_rank_; }
  int corank() const { return size() - full_rank_; }
  /// Rank without the ground-set check, for hot loops.
  int rank_unchecked(const ElementSet& a) const;

  Representation representation() const;
  std::optional<DerivedOp> derived_op() const;
  const detail::Node& node() const { return *node_; }
  const std::shared_ptr<const detail::Node>& node_ptr() const { return node_; }

  /// Base representations, when this matroid is stored as one.
  const BitMatrix* gf2_matrix() const;
  const Graph* graph() const;

 private:
  std::shared_ptr<const detail::Node> node_;
  int full_rank_ = 0;
};

struct LabeledEdge {
  int u = 0;
  int v = 0;
  std::string label;
};

/// Exact rational number written as "p/q" or "p".
struct RationalPoint {
  std::string label;
  std::vector<std::string> coords;
};

// Base representations.
Matroid linear_gf2(const BitMatrix& matrix, std::vector<std::string> labels);
Matroid linear_gf2(const std::vector<std::vector<int>>& rows, std::vector<std::string> labels);
Matroid graphic(int vertices, const std::vector<LabeledEdge>& edges);
Matroid uniform(int r, int n, std::vector<std::string> labels = {});
/// Affine points in dimension dim; rank is the rank of the homogenised
/// vectors (1, p) over the rationals.
Matroid rational_affine(int dim, const std::vector<RationalPoint>& points);

// Derived combinators.
Matroid dual(const Matroid& m);
/// M / contract \ del; the sets must be disjoint.
Matroid minor(const Matroid& m, const ElementSet& contract, const ElementSet& del);
Matroid restriction(const Matroid& m, const ElementSet& keep);
Matroid contraction(const Matroid& m, const ElementSet& c);
Matroid deletion(const Matroid& m, const ElementSet& d);
Matroid truncate(const Matroid& m);
/// Adds `label` freely on the flat `flat` (the whole ground set gives M+e).
Matroid principal_extension(const Matroid& m, const ElementSet& flat, const std::string& label);
/// 2-sum along the basepoint label shared by p and q. Other label clashes
/// in q are renamed by appending primes; see sum_relabeling().
Matroid two_sum(const Matroid& p, const Matroid& q, const std::string& basepoint);
/// 3-sum of binary matroids along their common triangle.
Matroid three_sum_binary(const Matroid& k, const Matroid& l, const std::vector<std::string>& triangle);
/// Relaxes a circuit-hyperplane into a basis.
Matroid relax(const Matroid& m, const ElementSet& circuit_hyperplane);
/// Same matroid with element i renamed to new_labels[i].
Matroid relabel(const Matroid& m, std::vector<std::string> new_labels);
/// Copy whose element i is the original element order[i].
Matroid permute(const Matroid& m, const std::vector<int>& order);

/// Renamings applied to the second summand of a sum (original -> new).
std::map<std::string, std::string> sum_relabeling(const Matroid& m);
/// Children of a derived matroid (empty for base representations).
std::vector<Matroid> children(const Matroid& m);

// Queries.
ElementSet closure(const Matroid& m, const ElementSet& a);
ElementSet coclosure(const Matroid& m, const ElementSet& a);
bool is_independent(const Matroid& m, const ElementSet& a);
bool is_coindependent(const Matroid& m, const ElementSet& a);
bool is_circuit(const Matroid& m, const ElementSet& a);
bool is_flat(const Matroid& m, const ElementSet& a);
bool is_loop(const Matroid& m, int e);
bool is_coloop(const Matroid& m, int e);

enum class CircuitKind { Circuit, Cocircuit };

struct Circuit {
  ElementSet elements;
  CircuitKind kind = CircuitKind::Circuit;
  bool operator==(const Circuit&) const = default;
};

struct CircuitQuery {
  /// Only circuits meeting this set (all when empty).
  ElementSet meeting;
  /// Refuse when the number of candidate subsets exceeds this.
  std::uint64_t budget = 50'000'000;
};

/// All circuits with at most k elements, ordered by size then colex.
std::vector<Circuit> circuits_up_to(const Matroid& m, int k, const CircuitQuery& q = {});
std::vector<Circuit> cocircuits_up_to(const Matroid& m, int k, const CircuitQuery& q = {});

/// GF(2) representation when one is available structurally (LinearGF2,
/// Graphic, binary uniform, and minors/duals/3-sums/relabelings of those).
std::optional<BitMatrix> binary_representation(const Matroid& m);

/// Graph whose cycle matroid is m, for Graphic matroids and their minors
/// and relabelings. Edge i of the graph is element i.
std::optional<Graph> graph_representation(const Matroid& m);

/// Rank-function equality on every subset (|E| <= 24) of equally labelled
/// matroids.
bool same_rank_function(const Matroid& a, const Matroid& b);

}  // namespace trimat

#endif  // TRIMAT_MATROID_HPP
