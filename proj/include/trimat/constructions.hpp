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

#ifndef TRIMAT_CONSTRUCTIONS_HPP
#define TRIMAT_CONSTRUCTIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trimat/matroid.hpp"
#include "trimat/rounded.hpp"

namespace trimat {

/// Registry: U24, F7, F7*, MK4, MK5, MK6, MK33, MK33*, R10, K331, MW<n>,
/// W<n> (whirl) and PG<d> (PG(d,2)). DomainError for unknown names.
Matroid named(const std::string& name);
std::vector<std::string> named_list();

/// Cycle matroid of the wheel with n spokes: spokes s1..sn, rim r1..rn
/// (r_i joins rim vertices i and i+1).
Matroid wheel(int n);
/// The wheel with its rim circuit-hyperplane relaxed.
Matroid whirl(int n);
/// PG(d,2) on the nonzero vectors of GF(2)^(d+1); point k is labelled "p<k>".
Matroid projective_geometry(int d);
/// Cycle matroid of K_n with edge labels "<i>-<j>", 1 <= i < j <= n.
Matroid complete_graph_matroid(int n);
/// The 6-vertex, 11-edge graph K_{3,3}^{1,1} on u, v, a, b, c, d. Edge
/// labels are the two vertex names in alphabetical order ("av", "bu").
Matroid k331_1();

struct ConstructionBundle {
  std::string name;
  Matroid matroid;
  /// T, x, y, F, X, ... as applicable, in indices of matroid.
  std::map<std::string, ElementSet> distinguished;
  /// Patterns N named as in the construction.
  std::map<std::string, Matroid> patterns;
  std::vector<Check> claims;
  /// Restricted exact minor test for this construction, when the
  /// exhaustive one is out of reach.
  std::shared_ptr<const MinorOracle> oracle;
  bool ok() const { return all_passed(claims); }
};

struct BundleOptions {
  /// Run the claim validators.
  bool validate = true;
  /// Also run the minimal-host classification claims.
  bool classify = true;
  RoundedOptions rounded;
};

/// K on X, Y, z (|X| = xsize, |Y| = n - 2 - xsize) plus x, y joined to z,
/// each other and their own side; G \ xz / xy is K_n.
ConstructionBundle remark_graph(int n, int xsize, const BundleOptions& opt = {});
/// K_n with a triangle u1u2u3 attached through four edges per corner.
ConstructionBundle sharp_graph(int n, const BundleOptions& opt = {});
/// Rank-4 affine configuration: four points on a line and three m-point
/// lines through three of them.
ConstructionBundle sharp_affine(int m, const BundleOptions& opt = {});
/// PG(rP-1,2) plus a free x, 2-summed with a 4-point line on x, x1, x2, x3,
/// then y added freely on the flat F + T where F is spanned by the first rF
/// coordinate vectors.
ConstructionBundle sharp_pg(int rP, int rF, const BundleOptions& opt = {});

/// Builds a bundle by name with its default parameters.
/// "name" or "name(a,b)"; missing arguments take the defaults.
ConstructionBundle construct(const std::string& text, const BundleOptions& opt = {});
std::vector<std::string> construction_list();

}  // namespace trimat

#endif  // TRIMAT_CONSTRUCTIONS_HPP
