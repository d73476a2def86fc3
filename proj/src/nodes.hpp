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

// Representation nodes behind trimat::Matroid. Internal header.

#ifndef TRIMAT_SRC_NODES_HPP
#define TRIMAT_SRC_NODES_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trimat/matroid.hpp"

namespace trimat::detail {

class Node {
 public:
  explicit Node(std::vector<std::string> labels);
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  virtual int rank(const ElementSet& a) const = 0;
  virtual Representation representation() const { return Representation::Derived; }
  virtual std::optional<DerivedOp> op() const { return std::nullopt; }
  virtual std::vector<Matroid> children() const { return {}; }
  /// Longest chain of derived nodes below (base representations are 0).
  virtual int depth() const { return 0; }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// Bounded, internally synchronised memo of rank values.
class RankCache {
 public:
  template <class F>
  int get(const ElementSet& a, F&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(a);
      if (it != map_.end()) return it->second;
    }
    const int r = compute();
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= kMaxEntries) map_.clear();
    map_.emplace(a, r);
    return r;
  }

 private:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 18;
  mutable std::mutex mu_;
  mutable std::unordered_map<ElementSet, int, ElementSetHash> map_;
};

class Gf2Node final : public Node {
 public:
  Gf2Node(BitMatrix m, std::vector<std::string> labels);
  int rank(const ElementSet& a) const override { return matrix_.rank_of(a); }
  Representation representation() const override { return Representation::LinearGF2; }
  const BitMatrix& matrix() const { return matrix_; }

 private:
  BitMatrix matrix_;
};

class GraphNode final : public Node {
 public:
  GraphNode(Graph g, std::vector<std::string> labels);
  int rank(const ElementSet& a) const override;
  Representation representation() const override { return Representation::Graphic; }
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

class UniformNode final : public Node {
 public:
  UniformNode(int r, std::vector<std::string> labels);
  int rank(const ElementSet& a) const override { return std::min(a.count(), r_); }
  Representation representation() const override { return Representation::Uniform; }
  int r() const { return r_; }

 private:
  int r_;
};

class AffineNode final : public Node {
 public:
  using BigInt = boost::multiprecision::cpp_int;
  AffineNode(int dim, std::vector<std::vector<std::string>> coords, std::vector<std::vector<BigInt>> columns,
             std::vector<std::string> labels);
  int rank(const ElementSet& a) const override;
  Representation representation() const override { return Representation::RationalAffine; }
  int dim() const { return dim_; }
  const std::vector<std::vector<std::string>>& coords() const { return coords_; }

 private:
  int rank_small(const ElementSet& a, bool& overflow) const;
  int rank_big(const ElementSet& a) const;

  int dim_;
  std::vector<std::vector<std::string>> coords_;
  std::vector<std::vector<BigInt>> big_;
  std::vector<std::vector<long long>> small_;
  bool fits_small_ = true;
};

/// Shared plumbing for derived nodes: memoisation once the chain is deep.
class DerivedNode : public Node {
 public:
  DerivedNode(std::vector<std::string> labels, std::vector<Matroid> kids);
  int rank(const ElementSet& a) const final;
  std::vector<Matroid> children() const override { return kids_; }
  int depth() const override { return depth_; }

 protected:
  virtual int compute_rank(const ElementSet& a) const = 0;
  const Matroid& child(std::size_t i = 0) const { return kids_[i]; }

 private:
  std::vector<Matroid> kids_;
  int depth_ = 1;
  RankCache cache_;
};

class DualNode final : public DerivedNode {
 public:
  explicit DualNode(const Matroid& m);
  std::optional<DerivedOp> op() const override { return DerivedOp::Dual; }

 private:
  int compute_rank(const ElementSet& a) const override;
};

class MinorNode final : public DerivedNode {
 public:
  MinorNode(const Matroid& m, const ElementSet& contract, const ElementSet& del);
  std::optional<DerivedOp> op() const override { return DerivedOp::Minor; }
  const ElementSet& contracted() const { return contract_; }
  const ElementSet& deleted() const { return delete_; }
  /// Child index of each surviving element.
  const std::vector<int>& lift() const { return lift_; }

 private:
  int compute_rank(const ElementSet& a) const override;
  ElementSet contract_;
  ElementSet delete_;
  std::vector<int> lift_;
  int contract_rank_ = 0;
};

class TruncationNode final : public DerivedNode {
 public:
  explicit TruncationNode(const Matroid& m);
  std::optional<DerivedOp> op() const override { return DerivedOp::Truncation; }

 private:
  int compute_rank(const ElementSet& a) const override;
};

class PrincipalExtensionNode final : public DerivedNode {
 public:
  PrincipalExtensionNode(const Matroid& m, const ElementSet& flat, const std::string& label);
  std::optional<DerivedOp> op() const override { return DerivedOp::PrincipalExtension; }
  const ElementSet& flat() const { return flat_; }

 private:
  int compute_rank(const ElementSet& a) const override;
  ElementSet flat_;
  int flat_rank_ = 0;
};

class TwoSumNode final : public DerivedNode {
 public:
  TwoSumNode(const Matroid& p, const Matroid& q, int p_base, int q_base, std::vector<std::string> labels,
             std::map<std::string, std::string> renamed);
  std::optional<DerivedOp> op() const override { return DerivedOp::TwoSum; }
  const std::string& basepoint() const { return child(0).label(p_base_); }
  const std::map<std::string, std::string>& renamed() const { return renamed_; }

 private:
  int compute_rank(const ElementSet& a) const override;
  int p_base_;
  int q_base_;
  int p_count_;  // surviving elements of P come first
  std::vector<int> p_lift_;
  std::vector<int> q_lift_;
  std::map<std::string, std::string> renamed_;
};

class ThreeSumNode final : public DerivedNode {
 public:
  ThreeSumNode(const Matroid& k, const Matroid& l, std::vector<std::string> triangle, BitMatrix sum,
               std::vector<std::string> labels, std::map<std::string, std::string> renamed);
  std::optional<DerivedOp> op() const override { return DerivedOp::ThreeSumBinary; }
  const BitMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& triangle() const { return triangle_; }
  const std::map<std::string, std::string>& renamed() const { return renamed_; }

 private:
  int compute_rank(const ElementSet& a) const override { return matrix_.rank_of(a); }
  std::vector<std::string> triangle_;
  BitMatrix matrix_;
  std::map<std::string, std::string> renamed_;
};

class RelaxationNode final : public DerivedNode {
 public:
  RelaxationNode(const Matroid& m, const ElementSet& h);
  std::optional<DerivedOp> op() const override { return DerivedOp::Relaxation; }
  const ElementSet& relaxed() const { return h_; }

 private:
  int compute_rank(const ElementSet& a) const override;
  ElementSet h_;
};

class RelabelNode final : public DerivedNode {
 public:
  RelabelNode(const Matroid& m, std::vector<int> order, std::vector<std::string> labels);
  std::optional<DerivedOp> op() const override { return DerivedOp::Relabel; }
  const std::vector<int>& order() const { return order_; }

 private:
  int compute_rank(const ElementSet& a) const override;
  std::vector<int> order_;
};

}  // namespace trimat::detail

#endif  // TRIMAT_SRC_NODES_HPP
