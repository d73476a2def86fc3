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

#include "trimat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "nodes.hpp"
#include "trimat/error.hpp"

namespace trimat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(DerivedOp op) {
  switch (op) {
    case DerivedOp::Dual: return "dual";
    case DerivedOp::Minor: return "minor";
    case DerivedOp::TwoSum: return "two_sum";
    case DerivedOp::ThreeSumBinary: return "three_sum_binary";
    case DerivedOp::PrincipalExtension: return "principal_extension";
    case DerivedOp::Truncation: return "truncation";
    case DerivedOp::Relaxation: return "relaxation";
    case DerivedOp::Relabel: return "relabel";
  }
  return "?";
}

namespace detail {

Node::Node(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(ElementSet::kCapacity))
    throw ValidationError("ground set larger than " + std::to_string(ElementSet::kCapacity) + " elements");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ValidationError("element labels must be non-empty");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
      throw ValidationError("duplicate element label '" + labels_[i] + "'");
  }
}

std::optional<int> Node::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Gf2Node::Gf2Node(BitMatrix m, std::vector<std::string> labels) : Node(std::move(labels)), matrix_(std::move(m)) {
  if (matrix_.num_cols() != size())
    throw ValidationError("linear_gf2: " + std::to_string(matrix_.num_cols()) + " columns but " +
                          std::to_string(size()) + " labels");
}

GraphNode::GraphNode(Graph g, std::vector<std::string> labels) : Node(std::move(labels)), graph_(std::move(g)) {
  if (graph_.vertices < 0 || graph_.vertices > 256) throw ValidationError("graphic: vertex count must be in [0, 256]");
  if (graph_.num_edges() != size()) throw ValidationError("graphic: edge/label count mismatch");
  for (std::size_t i = 0; i < graph_.edges.size(); ++i) {
    auto [u, v] = graph_.edges[i];
    if (u < 0 || v < 0 || u >= graph_.vertices || v >= graph_.vertices)
      throw ValidationError("graphic: edge '" + Node::labels()[i] + "' has an endpoint out of range");
  }
}

int GraphNode::rank(const ElementSet& a) const {
  int parent[256];
  for (int v = 0; v < graph_.vertices; ++v) parent[v] = v;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int r = 0;
  for (int e : a) {
    auto [u, v] = graph_.edges[static_cast<std::size_t>(e)];
    const int ru = root(u);
    const int rv = root(v);
    if (ru != rv) {
      parent[ru] = rv;
      ++r;
    }
  }
  return r;
}

UniformNode::UniformNode(int r, std::vector<std::string> labels) : Node(std::move(labels)), r_(r) {
  if (r_ < 0 || r_ > size()) throw ValidationError("uniform: need 0 <= r <= n");
}

AffineNode::AffineNode(int dim, std::vector<std::vector<std::string>> coords, std::vector<std::vector<BigInt>> columns,
                       std::vector<std::string> labels)
    : Node(std::move(labels)), dim_(dim), coords_(std::move(coords)), big_(std::move(columns)) {
  const BigInt limit = BigInt(1) << 60;
  small_.resize(big_.size());
  for (std::size_t i = 0; i < big_.size(); ++i)
    for (const BigInt& x : big_[i]) {
      if (abs(x) >= limit) fits_small_ = false;
      small_[i].push_back(fits_small_ ? static_cast<long long>(x) : 0);
    }
}

int AffineNode::rank_small(const ElementSet& a, bool& overflow) const {
  const int cols = dim_ + 1;
  std::vector<std::vector<__int128>> m;
  m.reserve(static_cast<std::size_t>(a.count()));
  for (int e : a) {
    std::vector<__int128> row(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) row[j] = small_[static_cast<std::size_t>(e)][j];
    m.push_back(std::move(row));
  }
  const int rows = static_cast<int>(m.size());
  const __int128 cap = static_cast<__int128>(1) << 62;
  __int128 prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        const __int128 x = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = x / prev;
        if (m[i][j] >= cap || m[i][j] <= -cap) {
          overflow = true;
          return 0;
        }
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int AffineNode::rank_big(const ElementSet& a) const {
  const int cols = dim_ + 1;
  std::vector<std::vector<BigRational>> m;
  for (int e : a) {
    std::vector<BigRational> row;
    for (int j = 0; j < cols; ++j) row.emplace_back(big_[static_cast<std::size_t>(e)][j]);
    m.push_back(std::move(row));
  }
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const BigRational f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int AffineNode::rank(const ElementSet& a) const {
  if (fits_small_) {
    bool overflow = false;
    const int r = rank_small(a, overflow);
    if (!overflow) return r;
  }
  return rank_big(a);
}

DerivedNode::DerivedNode(std::vector<std::string> labels, std::vector<Matroid> kids)
    : Node(std::move(labels)), kids_(std::move(kids)) {
  for (const Matroid& k : kids_) depth_ = std::max(depth_, k.node().depth() + 1);
}

int DerivedNode::rank(const ElementSet& a) const {
  if (depth_ < 2) return compute_rank(a);
  return cache_.get(a, [&] { return compute_rank(a); });
}

DualNode::DualNode(const Matroid& m) : DerivedNode(m.labels(), {m}) {}

int DualNode::compute_rank(const ElementSet& a) const {
  const Matroid& m = child();
  return a.count() + m.rank_unchecked(m.ground() - a) - m.rank();
}

MinorNode::MinorNode(const Matroid& m, const ElementSet& contract, const ElementSet& del)
    : DerivedNode(
          [&] {
            std::vector<std::string> l;
            for (int i = 0; i < m.size(); ++i)
              if (!contract.test(i) && !del.test(i)) l.push_back(m.label(i));
            return l;
          }(),
          {m}),
      contract_(contract),
      delete_(del) {
  for (int i = 0; i < m.size(); ++i)
    if (!contract.test(i) && !del.test(i)) lift_.push_back(i);
  contract_rank_ = m.rank_unchecked(contract);
}

int MinorNode::compute_rank(const ElementSet& a) const {
  ElementSet lifted = contract_;
  for (int e : a) lifted.set(lift_[static_cast<std::size_t>(e)]);
  return child().rank_unchecked(lifted) - contract_rank_;
}

TruncationNode::TruncationNode(const Matroid& m) : DerivedNode(m.labels(), {m}) {}

int TruncationNode::compute_rank(const ElementSet& a) const {
  return std::min(child().rank_unchecked(a), child().rank() - 1);
}

PrincipalExtensionNode::PrincipalExtensionNode(const Matroid& m, const ElementSet& flat, const std::string& label)
    : DerivedNode(
          [&] {
            std::vector<std::string> l = m.labels();
            l.push_back(label);
            return l;
          }(),
          {m}),
      flat_(flat) {
  flat_rank_ = m.rank_unchecked(flat);
}

int PrincipalExtensionNode::compute_rank(const ElementSet& a) const {
  const int e = size() - 1;
  const Matroid& m = child();
  if (!a.test(e)) return m.rank_unchecked(a);
  const ElementSet b = a.without(e);
  const int rb = m.rank_unchecked(b);
  // e lies in cl(B) iff the flat is spanned by B.
  if (m.rank_unchecked(b | flat_) == rb) return rb;
  return rb + 1;
}

TwoSumNode::TwoSumNode(const Matroid& p, const Matroid& q, int p_base, int q_base, std::vector<std::string> labels,
                       std::map<std::string, std::string> renamed)
    : DerivedNode(std::move(labels), {p, q}), p_base_(p_base), q_base_(q_base), renamed_(std::move(renamed)) {
  for (int i = 0; i < p.size(); ++i)
    if (i != p_base) p_lift_.push_back(i);
  for (int i = 0; i < q.size(); ++i)
    if (i != q_base) q_lift_.push_back(i);
  p_count_ = static_cast<int>(p_lift_.size());
}

int TwoSumNode::compute_rank(const ElementSet& a) const {
  ElementSet ap, aq;
  for (int e : a) {
    if (e < p_count_) ap.set(p_lift_[static_cast<std::size_t>(e)]);
    else aq.set(q_lift_[static_cast<std::size_t>(e - p_count_)]);
  }
  const Matroid& p = child(0);
  const Matroid& q = child(1);
  const int rp = p.rank_unchecked(ap);
  const int rq = q.rank_unchecked(aq);
  const bool spans_p = p.rank_unchecked(ap.with(p_base_)) == rp;
  if (!spans_p) return rp + rq;
  const bool spans_q = q.rank_unchecked(aq.with(q_base_)) == rq;
  return rp + rq - (spans_q ? 1 : 0);
}

ThreeSumNode::ThreeSumNode(const Matroid& k, const Matroid& l, std::vector<std::string> triangle, BitMatrix sum,
                           std::vector<std::string> labels, std::map<std::string, std::string> renamed)
    : DerivedNode(std::move(labels), {k, l}),
      triangle_(std::move(triangle)),
      matrix_(std::move(sum)),
      renamed_(std::move(renamed)) {}

RelaxationNode::RelaxationNode(const Matroid& m, const ElementSet& h) : DerivedNode(m.labels(), {m}), h_(h) {}

int RelaxationNode::compute_rank(const ElementSet& a) const {
  if (a == h_) return child().rank();
  return child().rank_unchecked(a);
}

RelabelNode::RelabelNode(const Matroid& m, std::vector<int> order, std::vector<std::string> labels)
    : DerivedNode(std::move(labels), {m}), order_(std::move(order)) {}

int RelabelNode::compute_rank(const ElementSet& a) const {
  ElementSet lifted;
  for (int e : a) lifted.set(order_[static_cast<std::size_t>(e)]);
  return child().rank_unchecked(lifted);
}

}  // namespace detail

// ---------------------------------------------------------------------------

Matroid::Matroid(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {
  full_rank_ = node_->rank(ElementSet::full(node_->size()));
}

int Matroid::size() const { return node_->size(); }
const std::vector<std::string>& Matroid::labels() const { return node_->labels(); }
std::optional<int> Matroid::find(std::string_view label) const { return node_->find(label); }

int Matroid::index(std::string_view label) const {
  auto i = node_->find(label);
  if (!i) throw DomainError("element '" + std::string(label) + "' is not in the ground set");
  return *i;
}

ElementSet Matroid::set(const std::vector<std::string>& ls) const {
  ElementSet s;
  for (const auto& l : ls) s.set(index(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(const ElementSet& s) const {
  std::vector<std::string> out;
  for (int i : s) out.push_back(label(i));
  return out;
}

int Matroid::rank(const ElementSet& a) const {
  if (!a.subset_of(ground())) throw DomainError("rank: set is not contained in the ground set");
  return node_->rank(a);
}

int Matroid::rank_unchecked(const ElementSet& a) const { return node_->rank(a); }

Representation Matroid::representation() const { return node_->representation(); }
std::optional<DerivedOp> Matroid::derived_op() const { return node_->op(); }

const BitMatrix* Matroid::gf2_matrix() const {
  if (auto* n = dynamic_cast<const detail::Gf2Node*>(node_.get())) return &n->matrix();
  return nullptr;
}

const Graph* Matroid::graph() const {
  if (auto* n = dynamic_cast<const detail::GraphNode*>(node_.get())) return &n->graph();
  return nullptr;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back("e" + std::to_string(i));
  return l;
}

void require_subset(const Matroid& m, const ElementSet& a, const char* what) {
  if (!a.subset_of(m.ground())) throw DomainError(std::string(what) + ": set is not contained in the ground set");
}

BigRational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    if (t.empty()) throw ValidationError("rational_affine: malformed number '" + s + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ValidationError("rational_affine: malformed number '" + s + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw ValidationError("rational_affine: malformed number '" + s + "'");
    return BigInt(t);
  };
  if (slash == std::string::npos) return BigRational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ValidationError("rational_affine: zero denominator in '" + s + "'");
  return BigRational(num, den);
}

}  // namespace

Matroid linear_gf2(const BitMatrix& matrix, std::vector<std::string> labels) {
  return Matroid(std::make_shared<detail::Gf2Node>(matrix, std::move(labels)));
}

Matroid linear_gf2(const std::vector<std::vector<int>>& rows, std::vector<std::string> labels) {
  BitMatrix m = BitMatrix::from_rows(rows);
  if (rows.empty()) m.cols.assign(labels.size(), 0);
  return linear_gf2(m, std::move(labels));
}

Matroid graphic(int vertices, const std::vector<LabeledEdge>& edges) {
  Graph g;
  g.vertices = vertices;
  std::vector<std::string> labels;
  for (const auto& e : edges) {
    g.edges.emplace_back(e.u, e.v);
    labels.push_back(e.label);
  }
  return Matroid(std::make_shared<detail::GraphNode>(std::move(g), std::move(labels)));
}

Matroid uniform(int r, int n, std::vector<std::string> labels) {
  if (n < 0) throw ValidationError("uniform: n must be non-negative");
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) throw ValidationError("uniform: label count differs from n");
  return Matroid(std::make_shared<detail::UniformNode>(r, std::move(labels)));
}

Matroid rational_affine(int dim, const std::vector<RationalPoint>& points) {
  if (dim < 0) throw ValidationError("rational_affine: dimension must be non-negative");
  std::vector<std::vector<std::string>> coords;
  std::vector<std::vector<BigInt>> columns;
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (static_cast<int>(p.coords.size()) != dim)
      throw ValidationError("rational_affine: point '" + p.label + "' has " + std::to_string(p.coords.size()) +
                            " coordinates, expected " + std::to_string(dim));
    std::vector<BigRational> h{BigRational(1)};
    for (const auto& c : p.coords) h.push_back(parse_rational(c));
    BigInt l = 1;
    for (const auto& x : h) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<BigInt> col;
    for (const auto& x : h) col.push_back(numerator(x) * (l / denominator(x)));
    columns.push_back(std::move(col));
    coords.push_back(p.coords);
    labels.push_back(p.label);
  }
  return Matroid(std::make_shared<detail::AffineNode>(dim, std::move(coords), std::move(columns), std::move(labels)));
}

Matroid dual(const Matroid& m) { return Matroid(std::make_shared<detail::DualNode>(m)); }

Matroid minor(const Matroid& m, const ElementSet& contract, const ElementSet& del) {
  require_subset(m, contract, "minor");
  require_subset(m, del, "minor");
  if (contract.intersects(del)) throw DomainError("minor: contraction and deletion sets overlap");
  if (contract.empty() && del.empty()) return m;
  return Matroid(std::make_shared<detail::MinorNode>(m, contract, del));
}

Matroid restriction(const Matroid& m, const ElementSet& keep) { return minor(m, {}, m.ground() - keep); }
Matroid contraction(const Matroid& m, const ElementSet& c) { return minor(m, c, {}); }
Matroid deletion(const Matroid& m, const ElementSet& d) { return minor(m, {}, d); }

Matroid truncate(const Matroid& m) {
  if (m.rank() < 1) throw DomainError("truncate: rank-0 matroid");
  return Matroid(std::make_shared<detail::TruncationNode>(m));
}

Matroid principal_extension(const Matroid& m, const ElementSet& flat, const std::string& label) {
  require_subset(m, flat, "principal_extension");
  if (m.find(label)) throw DomainError("principal_extension: label '" + label + "' already in the ground set");
  if (flat != m.ground() && !is_flat(m, flat)) throw ValidationError("principal_extension: the given set is not a flat");
  return Matroid(std::make_shared<detail::PrincipalExtensionNode>(m, flat, label));
}

namespace {

// Labels of q with clashes against `taken` renamed by appending primes.
std::vector<std::string> rename_clashes(const Matroid& q, const std::set<std::string>& skip,
                                        std::set<std::string>& taken, std::map<std::string, std::string>& renamed) {
  std::vector<std::string> out;
  for (const auto& l : q.labels()) {
    if (skip.count(l)) continue;
    std::string nl = l;
    while (taken.count(nl)) nl += "'";
    if (nl != l) renamed[l] = nl;
    taken.insert(nl);
    out.push_back(nl);
  }
  return out;
}

// Binary matroid whose cycles are C1 ^ C2 (Ci cycles of the parts) meeting
// the shared columns identically. shared pairs (column in a, column in b).
BitMatrix sum_by_cycles(const BitMatrix& a, const BitMatrix& b, const std::vector<std::pair<int, int>>& shared) {
  const int na = a.num_cols();
  const int nb = b.num_cols();
  if (na + nb > ElementSet::kCapacity) throw ValidationError("sum: too many elements");
  struct Gen {
    ElementSet support;  // over na + nb columns
    unsigned syndrome;
  };
  std::vector<Gen> gens;
  for (const ElementSet& z : cycle_space_basis(a)) {
    unsigned s = 0;
    for (std::size_t i = 0; i < shared.size(); ++i)
      if (z.test(shared[i].first)) s ^= 1U << i;
    gens.push_back({z, s});
  }
  for (const ElementSet& z : cycle_space_basis(b)) {
    ElementSet shifted;
    unsigned s = 0;
    for (int c : z) shifted.set(na + c);
    for (std::size_t i = 0; i < shared.size(); ++i)
      if (z.test(shared[i].second)) s ^= 1U << i;
    gens.push_back({shifted, s});
  }
  // Kernel of the syndrome map.
  std::vector<ElementSet> kernel;
  std::vector<Gen> pivots;
  for (Gen g : gens) {
    for (const Gen& p : pivots)
      if (g.syndrome & (1U << std::countr_zero(p.syndrome))) {
        g.syndrome ^= p.syndrome;
        g.support ^= p.support;
      }
    if (g.syndrome == 0) {
      kernel.push_back(g.support);
      continue;
    }
    for (Gen& p : pivots)
      if (p.syndrome & (1U << std::countr_zero(g.syndrome))) {
        p.syndrome ^= g.syndrome;
        p.support ^= g.support;
      }
    pivots.push_back(g);
  }
  for (const Gen& p : pivots)
    if (p.syndrome == 0) kernel.push_back(p.support);
  // Project onto surviving columns.
  std::vector<int> keep;
  ElementSet drop;
  for (auto [ca, cb] : shared) {
    drop.set(ca);
    drop.set(na + cb);
  }
  for (int c = 0; c < na + nb; ++c)
    if (!drop.test(c)) keep.push_back(c);
  std::vector<ElementSet> rows;
  for (const ElementSet& z : kernel) {
    ElementSet r;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (z.test(keep[j])) r.set(static_cast<int>(j));
    if (!r.empty()) rows.push_back(r);
  }
  // Row-reduce the cycle generators, then take the orthogonal complement.
  std::vector<ElementSet> basis;
  for (ElementSet r : rows) {
    for (const ElementSet& bv : basis)
      if (r.test(bv.first())) r ^= bv;
    if (r.empty()) continue;
    for (ElementSet& bv : basis)
      if (bv.test(r.first())) bv ^= r;
    basis.push_back(r);
  }
  if (basis.size() > 64) throw ValidationError("sum: cycle space too large for the bit-matrix backend");
  BitMatrix z;
  z.rows = static_cast<int>(basis.size());
  z.cols.assign(keep.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int c : basis[i]) z.cols[static_cast<std::size_t>(c)] |= std::uint64_t{1} << i;
  return row_reduced(dual_representation(z));
}

}  // namespace

Matroid two_sum(const Matroid& p, const Matroid& q, const std::string& basepoint) {
  const auto pb = p.find(basepoint);
  const auto qb = q.find(basepoint);
  if (!pb || !qb) throw ValidationError("two_sum: basepoint '" + basepoint + "' must be in both ground sets");
  if (p.size() < 3 || q.size() < 3) throw ValidationError("two_sum: both parts need at least 3 elements");
  if (is_loop(p, *pb) || is_coloop(p, *pb) || is_loop(q, *qb) || is_coloop(q, *qb))
    throw ValidationError("two_sum: basepoint is a loop or coloop in one of the parts");
  std::vector<std::string> labels;
  std::set<std::string> taken;
  for (const auto& l : p.labels())
    if (l != basepoint) {
      labels.push_back(l);
      taken.insert(l);
    }
  std::map<std::string, std::string> renamed;
  auto ql = rename_clashes(q, {basepoint}, taken, renamed);
  labels.insert(labels.end(), ql.begin(), ql.end());
  return Matroid(std::make_shared<detail::TwoSumNode>(p, q, *pb, *qb, std::move(labels), std::move(renamed)));
}

Matroid three_sum_binary(const Matroid& k, const Matroid& l, const std::vector<std::string>& triangle) {
  if (triangle.size() != 3) throw ValidationError("three_sum_binary: the shared set must have 3 elements");
  if (k.size() < 7 || l.size() < 7) throw ValidationError("three_sum_binary: both parts need at least 7 elements");
  const auto ka = binary_representation(k);
  const auto la = binary_representation(l);
  if (!ka || !la) throw ValidationError("three_sum_binary: both parts must be binary");
  ElementSet sk, sl;
  std::vector<std::pair<int, int>> shared;
  for (const auto& t : triangle) {
    const auto i = k.find(t);
    const auto j = l.find(t);
    if (!i || !j) throw ValidationError("three_sum_binary: '" + t + "' is not in both ground sets");
    sk.set(*i);
    sl.set(*j);
    shared.emplace_back(*i, *j);
  }
  if (!is_circuit(k, sk) || !is_circuit(l, sl))
    throw ValidationError("three_sum_binary: the shared set is not a triangle of both parts");
  BitMatrix sum = sum_by_cycles(*ka, *la, shared);
  std::vector<std::string> labels;
  std::set<std::string> taken;
  std::set<std::string> skip(triangle.begin(), triangle.end());
  for (const auto& x : k.labels())
    if (!skip.count(x)) {
      labels.push_back(x);
      taken.insert(x);
    }
  std::map<std::string, std::string> renamed;
  for (const auto& x : k.labels()) taken.insert(x);
  auto ll = rename_clashes(l, skip, taken, renamed);
  labels.insert(labels.end(), ll.begin(), ll.end());
  return Matroid(
      std::make_shared<detail::ThreeSumNode>(k, l, triangle, std::move(sum), std::move(labels), std::move(renamed)));
}

Matroid relax(const Matroid& m, const ElementSet& h) {
  require_subset(m, h, "relax");
  if (!is_circuit(m, h) || m.rank(h) != m.rank() - 1 || !is_flat(m, h))
    throw ValidationError("relax: set is not a circuit-hyperplane");
  return Matroid(std::make_shared<detail::RelaxationNode>(m, h));
}

Matroid relabel(const Matroid& m, std::vector<std::string> new_labels) {
  if (static_cast<int>(new_labels.size()) != m.size()) throw ValidationError("relabel: label count differs");
  std::vector<int> order(static_cast<std::size_t>(m.size()));
  std::iota(order.begin(), order.end(), 0);
  return Matroid(std::make_shared<detail::RelabelNode>(m, std::move(order), std::move(new_labels)));
}

Matroid permute(const Matroid& m, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) || sorted.size() != static_cast<std::size_t>(m.size()))
      throw ValidationError("permute: not a permutation of the ground set");
  std::vector<std::string> labels;
  for (int i : order) labels.push_back(m.label(i));
  return Matroid(std::make_shared<detail::RelabelNode>(m, order, std::move(labels)));
}

std::map<std::string, std::string> sum_relabeling(const Matroid& m) {
  if (auto* n = dynamic_cast<const detail::TwoSumNode*>(&m.node())) return n->renamed();
  if (auto* n = dynamic_cast<const detail::ThreeSumNode*>(&m.node())) return n->renamed();
  return {};
}

std::vector<Matroid> children(const Matroid& m) { return m.node().children(); }

// ---------------------------------------------------------------------------

ElementSet closure(const Matroid& m, const ElementSet& a) {
  require_subset(m, a, "closure");
  const int r = m.rank_unchecked(a);
  ElementSet cl = a;
  for (int e : m.ground() - a)
    if (m.rank_unchecked(a.with(e)) == r) cl.set(e);
  return cl;
}

ElementSet coclosure(const Matroid& m, const ElementSet& a) { return closure(dual(m), a); }

bool is_independent(const Matroid& m, const ElementSet& a) { return m.rank(a) == a.count(); }

bool is_coindependent(const Matroid& m, const ElementSet& a) {
  require_subset(m, a, "is_coindependent");
  return m.rank_unchecked(m.ground() - a) == m.rank();
}

bool is_circuit(const Matroid& m, const ElementSet& a) {
  require_subset(m, a, "is_circuit");
  const int k = a.count();
  if (k == 0 || m.rank_unchecked(a) != k - 1) return false;
  for (int e : a)
    if (m.rank_unchecked(a.without(e)) != k - 1) return false;
  return true;
}

bool is_flat(const Matroid& m, const ElementSet& a) { return closure(m, a) == a; }

bool is_loop(const Matroid& m, int e) { return m.rank_unchecked(ElementSet::single(e)) == 0; }

bool is_coloop(const Matroid& m, int e) {
  return m.rank_unchecked(m.ground().without(e)) == m.rank() - 1;
}

namespace {

std::vector<Circuit> enumerate_circuits(const Matroid& m, int k, const CircuitQuery& q, CircuitKind kind) {
  const int n = m.size();
  k = std::min(k, n);
  if (k < 1) return {};
  const ElementSet all = m.ground();
  const ElementSet meeting = q.meeting & all;
  std::uint64_t cost = 0;
  if (meeting.empty()) {
    for (int s = 1; s <= k; ++s) cost += binomial(n, s);
  } else {
    int i = 0;
    for ([[maybe_unused]] int e : meeting) {
      for (int s = 1; s <= k; ++s) cost += binomial(n - 1 - i, s - 1);
      ++i;
    }
  }
  if (cost > q.budget)
    throw BudgetError("circuits_up_to: " + std::to_string(cost) + " candidate subsets exceed budget " +
                      std::to_string(q.budget));
  std::vector<Circuit> out;
  auto consider = [&](const ElementSet& s) {
    if (is_circuit(m, s)) out.push_back({s, kind});
    return true;
  };
  for (int s = 1; s <= k; ++s) {
    if (meeting.empty()) {
      for_each_subset_of_size(all, s, consider);
    } else {
      ElementSet excluded;
      for (int e : meeting) {
        for_each_subset_of_size(all - excluded - ElementSet::single(e), s - 1,
                                [&](const ElementSet& rest) { return consider(rest.with(e)); });
        excluded.set(e);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    if (a.elements.count() != b.elements.count()) return a.elements.count() < b.elements.count();
    return a.elements < b.elements;
  });
  return out;
}

}  // namespace

std::vector<Circuit> circuits_up_to(const Matroid& m, int k, const CircuitQuery& q) {
  return enumerate_circuits(m, k, q, CircuitKind::Circuit);
}

std::vector<Circuit> cocircuits_up_to(const Matroid& m, int k, const CircuitQuery& q) {
  return enumerate_circuits(dual(m), k, q, CircuitKind::Cocircuit);
}

std::optional<BitMatrix> binary_representation(const Matroid& m) {
  const detail::Node& node = m.node();
  if (auto* g = dynamic_cast<const detail::Gf2Node*>(&node)) return g->matrix();
  if (auto* g = dynamic_cast<const detail::GraphNode*>(&node)) {
    const Graph& gr = g->graph();
    if (gr.vertices > 64) return std::nullopt;
    BitMatrix b;
    b.rows = gr.vertices;
    for (auto [u, v] : gr.edges)
      b.cols.push_back(u == v ? 0 : ((std::uint64_t{1} << u) | (std::uint64_t{1} << v)));
    return row_reduced(b);
  }
  if (auto* u = dynamic_cast<const detail::UniformNode*>(&node)) {
    const int n = u->size();
    const int r = u->r();
    BitMatrix b;
    if (r == 0) {
      b.cols.assign(static_cast<std::size_t>(n), 0);
      return b;
    }
    if (r == 1) {
      b.rows = 1;
      b.cols.assign(static_cast<std::size_t>(n), 1);
      return b;
    }
    if (r > 64) return std::nullopt;
    if (r == n || r == n - 1) {
      b.rows = r;
      for (int i = 0; i < r; ++i) b.cols.push_back(std::uint64_t{1} << i);
      if (r == n - 1) b.cols.push_back(r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1);
      return b;
    }
    return std::nullopt;
  }
  if (auto* d = dynamic_cast<const detail::DualNode*>(&node)) {
    auto c = binary_representation(d->children()[0]);
    if (!c) return std::nullopt;
    if (m.corank() > 64) return std::nullopt;
    return dual_representation(*c);
  }
  if (auto* mn = dynamic_cast<const detail::MinorNode*>(&node)) {
    auto c = binary_representation(mn->children()[0]);
    if (!c) return std::nullopt;
    return row_reduced(minor_representation(*c, mn->contracted(), mn->deleted()));
  }
  if (auto* t = dynamic_cast<const detail::ThreeSumNode*>(&node)) return t->matrix();
  if (auto* rl = dynamic_cast<const detail::RelabelNode*>(&node)) {
    auto c = binary_representation(rl->children()[0]);
    if (!c) return std::nullopt;
    return select_columns(*c, rl->order());
  }
  if (auto* ts = dynamic_cast<const detail::TwoSumNode*>(&node)) {
    const auto kids = ts->children();
    auto a = binary_representation(kids[0]);
    auto b = binary_representation(kids[1]);
    if (!a || !b) return std::nullopt;
    const std::string& base = ts->basepoint();
    return sum_by_cycles(*a, *b, {{kids[0].index(base), kids[1].index(base)}});
  }
  return std::nullopt;
}

std::optional<Graph> graph_representation(const Matroid& m) {
  const detail::Node& node = m.node();
  if (auto* g = dynamic_cast<const detail::GraphNode*>(&node)) return g->graph();
  if (auto* mn = dynamic_cast<const detail::MinorNode*>(&node)) {
    auto c = graph_representation(mn->children()[0]);
    if (!c) return std::nullopt;
    return graph_minor(*c, mn->contracted(), mn->deleted());
  }
  if (auto* rl = dynamic_cast<const detail::RelabelNode*>(&node)) {
    auto c = graph_representation(rl->children()[0]);
    if (!c) return std::nullopt;
    Graph g;
    g.vertices = c->vertices;
    for (int i : rl->order()) g.edges.push_back(c->edges[static_cast<std::size_t>(i)]);
    return g;
  }
  return std::nullopt;
}

bool same_rank_function(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 24) throw BudgetError("same_rank_function: more than 24 elements");
  std::vector<int> to_b;
  for (const auto& l : a.labels()) {
    auto j = b.find(l);
    if (!j) return false;
    to_b.push_back(*j);
  }
  return for_each_subset(a.ground(), [&](const ElementSet& s) {
    ElementSet t;
    for (int e : s) t.set(to_b[static_cast<std::size_t>(e)]);
    return a.rank_unchecked(s) == b.rank_unchecked(t);
  });
}

}  // namespace trimat
