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
#include "trimat/io.hpp"

#include <memory>

#include "nodes.hpp"
#include "trimat/error.hpp"

namespace trimat {

namespace {

Json label_list(const Matroid& m, const ElementSet& s) {
  Json out = Json::array();
  for (int e : s) out.push_back(m.label(e));
  return out;
}

std::string op_name(DerivedOp op) {
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
  return "unknown";
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError("matroid descriptor" + (path.empty() ? std::string() : " at " + path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer()) fail(path, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::string> strings(const Json& v, const std::string& path, const char* what) {
  if (!v.is_array()) fail(path, std::string("'") + what + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) fail(path, std::string("'") + what + "' must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

ElementSet labels_in(const Matroid& m, const Json& v, const std::string& path, const char* what) {
  ElementSet out;
  for (const auto& l : strings(v, path, what)) {
    auto i = m.find(l);
    if (!i) fail(path, std::string("'") + what + "' names '" + l + "', which is not in the child's ground set");
    out.set(*i);
  }
  return out;
}

Matroid build_at(const Json& j, const std::string& path);

std::vector<Matroid> kids(const Json& j, const std::string& path, std::size_t want) {
  const Json& c = field(j, "children", path);
  if (!c.is_array() || c.size() != want) fail(path, "'children' must hold " + std::to_string(want) + " descriptor(s)");
  std::vector<Matroid> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(build_at(c[i], path + "/children/" + std::to_string(i)));
  return out;
}

Matroid build_derived(const Json& j, const std::string& path) {
  const Json& opv = field(j, "op", path);
  if (!opv.is_string()) fail(path, "'op' must be a string");
  const std::string op = opv.get<std::string>();
  const Json empty = Json::object();
  const Json& args = j.contains("args") ? j.at("args") : empty;
  if (!args.is_object()) fail(path, "'args' must be an object");
  if (op == "dual") return dual(kids(j, path, 1)[0]);
  if (op == "truncation") return truncate(kids(j, path, 1)[0]);
  if (op == "minor") {
    const Matroid m = kids(j, path, 1)[0];
    const ElementSet c = labels_in(m, field(args, "contract", path), path, "contract");
    const ElementSet d = labels_in(m, field(args, "delete", path), path, "delete");
    if (c.intersects(d)) fail(path, "contraction and deletion sets overlap");
    return minor(m, c, d);
  }
  if (op == "principal_extension") {
    const Matroid m = kids(j, path, 1)[0];
    const Json& lv = field(args, "label", path);
    if (!lv.is_string()) fail(path, "'label' must be a string");
    return principal_extension(m, labels_in(m, field(args, "flat", path), path, "flat"), lv.get<std::string>());
  }
  if (op == "two_sum") {
    const auto ms = kids(j, path, 2);
    const Json& b = field(args, "basepoint", path);
    if (!b.is_string()) fail(path, "'basepoint' must be a string");
    return two_sum(ms[0], ms[1], b.get<std::string>());
  }
  if (op == "three_sum_binary") {
    const auto ms = kids(j, path, 2);
    return three_sum_binary(ms[0], ms[1], strings(field(args, "triangle", path), path, "triangle"));
  }
  if (op == "relaxation") {
    const Matroid m = kids(j, path, 1)[0];
    return relax(m, labels_in(m, field(args, "circuit_hyperplane", path), path, "circuit_hyperplane"));
  }
  if (op == "relabel") {
    const Matroid m = kids(j, path, 1)[0];
    const Json& ov = field(args, "order", path);
    if (!ov.is_array()) fail(path, "'order' must be an array of integers");
    std::vector<int> order;
    for (const auto& x : ov) {
      if (!x.is_number_integer()) fail(path, "'order' must be an array of integers");
      order.push_back(x.get<int>());
    }
    auto labels = strings(field(args, "labels", path), path, "labels");
    if (labels.size() != order.size()) fail(path, "'order' and 'labels' differ in length");
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) || sorted.size() != static_cast<std::size_t>(m.size()))
        fail(path, "'order' is not a permutation of the child's ground set");
    return Matroid(std::make_shared<detail::RelabelNode>(m, std::move(order), std::move(labels)));
  }
  fail(path, "unknown op '" + op + "'");
}

Matroid build_at(const Json& j, const std::string& path) {
  const Json& tv = field(j, "type", path);
  if (!tv.is_string()) fail(path, "'type' must be a string");
  const std::string type = tv.get<std::string>();
  if (type == "linear_gf2") {
    const Json& mv = field(j, "matrix", path);
    if (!mv.is_array()) fail(path, "'matrix' must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : mv) {
      if (!r.is_array()) fail(path, "'matrix' must be an array of rows");
      std::vector<int> row;
      for (const auto& b : r) {
        if (!b.is_number_integer()) fail(path, "matrix entries must be 0 or 1");
        row.push_back(b.get<int>());
      }
      rows.push_back(std::move(row));
    }
    auto labels = strings(field(j, "labels", path), path, "labels");
    return linear_gf2(rows, std::move(labels));
  }
  if (type == "graphic") {
    const int n = int_field(j, "vertices", path);
    const Json& ev = field(j, "edges", path);
    if (!ev.is_array()) fail(path, "'edges' must be an array of [u, v, label]");
    std::vector<LabeledEdge> edges;
    for (const auto& e : ev) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_string())
        fail(path, "'edges' must be an array of [u, v, label]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<std::string>()});
    }
    return graphic(n, edges);
  }
  if (type == "uniform") {
    const int r = int_field(j, "r", path);
    const int n = int_field(j, "n", path);
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = strings(j.at("labels"), path, "labels");
      if (static_cast<int>(labels.size()) != n) fail(path, "'labels' must have n entries");
    }
    return uniform(r, n, std::move(labels));
  }
  if (type == "rational_affine") {
    const int dim = int_field(j, "dim", path);
    const Json& pv = field(j, "points", path);
    if (!pv.is_object()) fail(path, "'points' must map labels to coordinate lists");
    std::vector<RationalPoint> pts;
    for (auto it = pv.begin(); it != pv.end(); ++it) pts.push_back({it.key(), strings(it.value(), path, "points")});
    return rational_affine(dim, pts);
  }
  if (type == "derived") return build_derived(j, path);
  fail(path, "unknown type '" + type + "'");
}

}  // namespace

Json descriptor(const Matroid& m) {
  Json j;
  switch (m.representation()) {
    case Representation::LinearGF2:
      j["type"] = "linear_gf2";
      j["matrix"] = m.gf2_matrix()->to_rows();
      j["labels"] = m.labels();
      return j;
    case Representation::Graphic: {
      const Graph& g = *m.graph();
      j["type"] = "graphic";
      j["vertices"] = g.vertices;
      Json edges = Json::array();
      for (int i = 0; i < g.num_edges(); ++i)
        edges.push_back(Json::array({g.edges[static_cast<std::size_t>(i)].first,
                                     g.edges[static_cast<std::size_t>(i)].second, m.label(i)}));
      j["edges"] = std::move(edges);
      return j;
    }
    case Representation::Uniform:
      j["type"] = "uniform";
      j["r"] = m.rank();
      j["n"] = m.size();
      j["labels"] = m.labels();
      return j;
    case Representation::RationalAffine: {
      const auto& node = dynamic_cast<const detail::AffineNode&>(m.node());
      j["type"] = "rational_affine";
      j["dim"] = node.dim();
      Json pts = Json::object();
      for (int i = 0; i < m.size(); ++i) pts[m.label(i)] = node.coords()[static_cast<std::size_t>(i)];
      j["points"] = std::move(pts);
      return j;
    }
    case Representation::Derived: break;
  }
  const DerivedOp op = *m.derived_op();
  const auto ch = children(m);
  j["type"] = "derived";
  j["op"] = op_name(op);
  Json args = Json::object();
  const detail::Node& node = m.node();
  switch (op) {
    case DerivedOp::Minor: {
      const auto& n = dynamic_cast<const detail::MinorNode&>(node);
      args["contract"] = label_list(ch[0], n.contracted());
      args["delete"] = label_list(ch[0], n.deleted());
      break;
    }
    case DerivedOp::PrincipalExtension: {
      const auto& n = dynamic_cast<const detail::PrincipalExtensionNode&>(node);
      args["flat"] = label_list(ch[0], n.flat());
      args["label"] = m.label(m.size() - 1);
      break;
    }
    case DerivedOp::TwoSum:
      args["basepoint"] = dynamic_cast<const detail::TwoSumNode&>(node).basepoint();
      break;
    case DerivedOp::ThreeSumBinary:
      args["triangle"] = dynamic_cast<const detail::ThreeSumNode&>(node).triangle();
      break;
    case DerivedOp::Relaxation:
      args["circuit_hyperplane"] = label_list(ch[0], dynamic_cast<const detail::RelaxationNode&>(node).relaxed());
      break;
    case DerivedOp::Relabel:
      args["order"] = dynamic_cast<const detail::RelabelNode&>(node).order();
      args["labels"] = m.labels();
      break;
    case DerivedOp::Dual:
    case DerivedOp::Truncation: break;
  }
  j["args"] = std::move(args);
  Json kids_json = Json::array();
  for (const auto& c : ch) kids_json.push_back(descriptor(c));
  j["children"] = std::move(kids_json);
  return j;
}

Matroid build(const Json& j) { return build_at(j, ""); }

std::string serialize(const Matroid& m, int indent) { return descriptor(m).dump(indent); }

Matroid parse_matroid(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("matroid descriptor: not valid JSON (") + e.what() + ")");
  }
  return build(j);
}

}  // namespace trimat
