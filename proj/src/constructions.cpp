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

#include "trimat/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "trimat/error.hpp"
#include "trimat/graph.hpp"
#include "trimat/structure.hpp"

namespace trimat {

namespace {

std::string edge_label(const std::string& a, const std::string& b) { return a + "-" + b; }

// Graph builder over named vertices.
struct GraphBuilder {
  std::vector<std::string> names;
  std::vector<LabeledEdge> edges;

  int vertex(const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    names.push_back(name);
    return static_cast<int>(names.size()) - 1;
  }
  void edge(const std::string& a, const std::string& b, std::string label = {}) {
    if (label.empty()) label = edge_label(a, b);
    const int u = vertex(a);
    const int v = vertex(b);
    edges.push_back({u, v, std::move(label)});
  }
  Matroid build() const { return graphic(static_cast<int>(names.size()), edges); }
};

std::vector<std::string> numbered(const std::string& prefix, int n, int from = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + from));
  return out;
}

Matroid fano() {
  std::vector<std::vector<int>> rows(3, std::vector<int>(7));
  for (int k = 1; k <= 7; ++k)
    for (int b = 0; b < 3; ++b) rows[b][k - 1] = (k >> b) & 1;
  return linear_gf2(rows, numbered("", 7));
}

Matroid r10() {
  const char* a[5] = {"11001", "11100", "01110", "00111", "10011"};
  std::vector<std::vector<int>> rows(5, std::vector<int>(10, 0));
  for (int i = 0; i < 5; ++i) {
    rows[i][i] = 1;
    for (int j = 0; j < 5; ++j) rows[i][5 + j] = a[i][j] - '0';
  }
  return linear_gf2(rows, numbered("", 10));
}

Matroid k33() {
  GraphBuilder g;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) g.edge("a" + std::to_string(i), "b" + std::to_string(j));
  return g.build();
}

int suffix_number(const std::string& name, std::size_t prefix_len) {
  const std::string digits = name.substr(prefix_len);
  if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw DomainError("named: unknown matroid '" + name + "'");
  return std::stoi(digits);
}

}  // namespace

Matroid wheel(int n) {
  if (n < 2) throw ValidationError("wheel: needs at least 2 spokes");
  GraphBuilder g;
  g.vertex("h");
  for (int i = 1; i <= n; ++i) g.edge("h", "v" + std::to_string(i), "s" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    g.edge("v" + std::to_string(i), "v" + std::to_string(i % n + 1), "r" + std::to_string(i));
  return g.build();
}

Matroid whirl(int n) {
  const Matroid w = wheel(n);
  return relax(w, w.set(numbered("r", n)));
}

Matroid projective_geometry(int d) {
  if (d < 1 || d > 6) throw ValidationError("projective_geometry: dimension must be in [1, 6]");
  const int r = d + 1;
  const int n = (1 << r) - 1;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k)
    for (int b = 0; b < r; ++b) rows[b][k - 1] = (k >> b) & 1;
  return linear_gf2(rows, numbered("p", n));
}

Matroid complete_graph_matroid(int n) {
  if (n < 1 || n > 15) throw ValidationError("complete_graph_matroid: n must be in [1, 15]");
  GraphBuilder g;
  for (int i = 1; i <= n; ++i) g.vertex(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.edge(std::to_string(i), std::to_string(j));
  return g.build();
}

Matroid k331_1() {
  GraphBuilder g;
  for (const char* v : {"u", "v", "a", "b", "c", "d"}) g.vertex(v);
  const char* edges[11][2] = {{"a", "u"}, {"b", "u"}, {"a", "b"}, {"a", "c"}, {"c", "v"}, {"d", "v"},
                              {"c", "d"}, {"b", "c"}, {"b", "d"}, {"a", "d"}, {"u", "v"}};
  for (auto& e : edges) g.edge(e[0], e[1], std::string(e[0]) + e[1]);
  return g.build();
}

std::vector<std::string> named_list() {
  return {"U24", "F7", "F7*", "MK4", "MK5", "MK6", "MK33", "MK33*", "R10", "K331",
          "MW<n>", "W<n>", "PG<d>"};
}

Matroid named(const std::string& name) {
  if (name == "U24") return uniform(2, 4, numbered("", 4));
  if (name == "F7") return fano();
  if (name == "F7*") return dual(fano());
  if (name == "MK4") return complete_graph_matroid(4);
  if (name == "MK5") return complete_graph_matroid(5);
  if (name == "MK6") return complete_graph_matroid(6);
  if (name == "MK33") return k33();
  if (name == "MK33*") return dual(k33());
  if (name == "R10") return r10();
  if (name == "K331") return k331_1();
  if (name.rfind("MW", 0) == 0) return wheel(suffix_number(name, 2));
  if (name.rfind("PG", 0) == 0) return projective_geometry(suffix_number(name, 2));
  if (name.rfind("W", 0) == 0) return whirl(suffix_number(name, 1));
  throw DomainError("named: unknown matroid '" + name + "'");
}

namespace {

Check check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

std::string status_text(const MinorResult& r) { return to_string(r.status) + " (" + r.note + ")"; }

// Claims shared by the three sharpness bundles: the host search lands in
// the expected alternative with every clause verified.
void classify_claim(ConstructionBundle& b, const std::string& id, const Matroid& n, Kase expected,
                    const std::string& special, const BundleOptions& opt) {
  const MinorOracle& oracle = b.oracle ? *b.oracle : exhaustive_oracle();
  const auto rep = minimal_triangle_host(b.matroid, n, b.distinguished.at("T"), oracle, opt.rounded);
  std::ostringstream os;
  os << "kase " << to_string(rep.classification.kase) << ", host " << rep.host.size() << " elements";
  bool ok = rep.ok() && rep.classification.kase == expected;
  if (ok && !special.empty()) {
    const auto& s = rep.classification.special;
    ok = s && rep.host.label(*s) == special;
    if (s) os << ", special " << rep.host.label(*s);
  }
  for (const auto& c : rep.classification.checks)
    if (!c.passed) os << "; failed: " << c.name;
  for (const auto& c : rep.checks)
    if (!c.passed) os << "; failed: " << c.name;
  b.claims.push_back(check(id, ok, os.str()));
}

}  // namespace

ConstructionBundle remark_graph(int n, int xsize, const BundleOptions& opt) {
  if (n < 6 || n > 12) throw ValidationError("remark_graph: n must be in [6, 12]");
  if (xsize < 2 || xsize > n - 4) throw ValidationError("remark_graph: xsize must be in [2, n-4]");
  GraphBuilder g;
  std::vector<std::string> kv = numbered("x", xsize);
  const auto ys = numbered("y", n - 2 - xsize);
  kv.insert(kv.end(), ys.begin(), ys.end());
  kv.push_back("z");
  for (std::size_t i = 0; i < kv.size(); ++i)
    for (std::size_t j = i + 1; j < kv.size(); ++j) g.edge(kv[i], kv[j]);
  g.edge("x", "y");
  g.edge("x", "z");
  g.edge("y", "z");
  for (const auto& v : numbered("x", xsize)) g.edge("x", v);
  for (const auto& v : ys) g.edge("y", v);

  ConstructionBundle b{"remark_graph(" + std::to_string(n) + "," + std::to_string(xsize) + ")", g.build(), {}, {}, {}, {}};
  const Matroid& m = b.matroid;
  b.distinguished["T"] = m.set({"x-y", "x-z", "y-z"});
  const Matroid kn = complete_graph_matroid(n);
  b.patterns.insert_or_assign("K" + std::to_string(n), kn);
  if (!opt.validate) return b;

  b.claims.push_back(check("three-connected", is_3connected(m)));
  const Matroid cd = minor(m, m.set({"x-y"}), m.set({"x-z"}));
  b.claims.push_back(check("contract-delete-is-Kn", isomorphism(cd, kn).has_value(), "G\\xz/xy against K_" + std::to_string(n)));
  const auto plain = find_minor(m, kn, opt.rounded.minor);
  b.claims.push_back(check("has-Kn-minor", plain.found(), status_text(plain)));
  const auto using_t = find_minor_using_triangle(m, kn, b.distinguished["T"], opt.rounded.minor);
  b.claims.push_back(check("no-Kn-minor-uses-T", using_t.status == SearchStatus::Absent, status_text(using_t)));
  return b;
}

ConstructionBundle sharp_graph(int n, const BundleOptions& opt) {
  if (n < 14 || n > 15) throw ValidationError("sharp_graph: n must be 14 or 15 (128-element capacity)");
  GraphBuilder g;
  const auto kv = numbered("k", n);
  for (const auto& v : kv) g.vertex(v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edge(kv[i], kv[j]);
  g.edge("u1", "u2");
  g.edge("u2", "u3");
  g.edge("u1", "u3");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) g.edge("u" + std::to_string(i), kv[4 * (i - 1) + j - 1]);

  ConstructionBundle b{"sharp_graph(" + std::to_string(n) + ")", g.build(), {}, {}, {}, {}};
  const Matroid& m = b.matroid;
  const ElementSet t = m.set({"u1-u2", "u2-u3", "u1-u3"});
  const ElementSet a = m.set({"u2-u3"});
  const ElementSet bb = m.set({"u1-u2"});
  b.distinguished["T"] = t;
  b.distinguished["A"] = a;
  b.distinguished["B"] = bb;
  const Matroid nm = minor(m, bb, a);
  b.patterns.insert_or_assign("N", nm);
  if (!opt.validate) return b;

  const Graph gr = *m.graph();
  const Graph h = *graph_representation(nm);
  b.claims.push_back(check("vertex-count", gr.vertices == n + 3, std::to_string(gr.vertices) + " vertices"));
  b.claims.push_back(check("H-simple", h.is_simple()));
  b.claims.push_back(check("three-connected", is_3connected(m)));

  bool pairs_ok = true;
  bool si_ok = true;
  std::string worst;
  for (int e = 0; e < m.size(); ++e) {
    if (t.test(e)) continue;
    const Graph c = graph_minor(gr, ElementSet::single(e), {});
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : c.edges)
      if (u != v) ++mult[{std::min(u, v), std::max(u, v)}];
    int pairs = 0;
    for (const auto& [ends, k] : mult) pairs += k * (k - 1) / 2;
    if (pairs < 3) {
      pairs_ok = false;
      worst = m.label(e);
    }
    const int si_size = static_cast<int>(mult.size());
    if (!(si_size < nm.size() && si_size <= m.size() - 4)) si_ok = false;
  }
  b.claims.push_back(check("contraction-parallel-pairs", pairs_ok, worst.empty() ? "every e outside T" : "fails at " + worst));
  b.claims.push_back(check("contraction-si-too-small", si_ok, "|E(si(M/e))| < |E(H)| = " + std::to_string(nm.size())));

  bool del_ok = true;
  std::string del_note;
  for (int e = 0; e < m.size(); ++e) {
    if (t.test(e)) continue;
    const auto r = find_minor(deletion(m, ElementSet::single(e)), nm, opt.rounded.minor);
    if (r.status != SearchStatus::Absent) {
      del_ok = false;
      del_note = m.label(e) + ": " + status_text(r);
      break;
    }
  }
  b.claims.push_back(check("deletion-no-N-minor", del_ok, del_ok ? "every e incident to K" : del_note));
  if (opt.classify) classify_claim(b, "minimal-host-contained", nm, Kase::Contained, "", opt);
  return b;
}

namespace {

// Parameters along the three lines; attempt k perturbs them when the
// previous choice was not generic.
std::vector<int> line_parameters(int m, int attempt) {
  std::vector<int> t;
  for (int j = 0; j < m; ++j) t.push_back(j + attempt * j * j);
  return t;
}

struct AffineLayout {
  std::vector<RationalPoint> points;
  std::vector<std::vector<std::string>> lines;
};

AffineLayout affine_layout(int m, int attempt) {
  AffineLayout out;
  out.points.push_back({"x", {"0", "0", "0"}});
  out.points.push_back({"a", {"1", "0", "0"}});
  out.points.push_back({"b", {"2", "0", "0"}});
  out.points.push_back({"c", {"3", "0", "0"}});
  out.lines.push_back({"x", "a", "b", "c"});
  const char* names[3] = {"a", "b", "c"};
  const int base[3][3] = {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}};
  const int dir[3][3] = {{1, 1, 0}, {1, 0, 1}, {1, 2, 3}};
  const auto ts = line_parameters(m, attempt);
  for (int y = 0; y < 3; ++y) {
    std::vector<std::string> line{names[y]};
    for (int j = 1; j < m; ++j) {
      RationalPoint p;
      p.label = std::string(names[y]) + std::to_string(j);
      for (int k = 0; k < 3; ++k) p.coords.push_back(std::to_string(base[y][k] + ts[j] * dir[y][k]));
      line.push_back(p.label);
      out.points.push_back(std::move(p));
    }
    out.lines.push_back(std::move(line));
  }
  return out;
}

// Every collinear triple inside one of the given lines, each line of rank 2,
// and no three lines in a common plane.
bool affine_generic(const Matroid& m, const std::vector<ElementSet>& lines, std::string& detail) {
  for (const auto& l : lines)
    if (m.rank(l) != 2) {
      detail = "a line has rank " + std::to_string(m.rank(l));
      return false;
    }
  for (const auto& tri : triangles(m)) {
    bool inside = false;
    for (const auto& l : lines) inside = inside || tri.subset_of(l);
    if (!inside) {
      detail = "extra collinear triple";
      return false;
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      for (std::size_t k = j + 1; k < lines.size(); ++k)
        if (m.rank(lines[i] | lines[j] | lines[k]) != 4) {
          detail = "three lines coplanar";
          return false;
        }
  return true;
}

}  // namespace

ConstructionBundle sharp_affine(int m, const BundleOptions& opt) {
  if (m < 6 || m > 42) throw ValidationError("sharp_affine: m must be in [6, 42]");
  std::string generic_note;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto layout = affine_layout(m, attempt);
    Matroid mat = rational_affine(3, layout.points);
    std::vector<ElementSet> lines;
    for (const auto& l : layout.lines) lines.push_back(mat.set(l));
    std::string why;
    if (!affine_generic(mat, lines, why)) {
      generic_note += "attempt " + std::to_string(attempt) + " rejected: " + why + "; ";
      continue;
    }
    ConstructionBundle b{"sharp_affine(" + std::to_string(m) + ")", mat, {}, {}, {}, {}};
    const int x = mat.index("x");
    const ElementSet t = mat.set({"a", "b", "c"});
    b.distinguished["T"] = t;
    b.distinguished["x"] = ElementSet::single(x);
    b.distinguished["R"] = lines[0];
    b.distinguished["La"] = lines[1];
    b.distinguished["Lb"] = lines[2];
    b.distinguished["Lc"] = lines[3];
    const Matroid n_ab = minor(mat, ElementSet::single(x), mat.set({"a", "b"}));
    const Matroid n_t = minor(mat, ElementSet::single(x), t);
    b.patterns.insert_or_assign("N_ab", n_ab);
    b.patterns.insert_or_assign("N_T", n_t);
    if (!opt.validate) return b;

    b.claims.push_back(check("generic", true, generic_note + "attempt " + std::to_string(attempt) + " accepted"));
    b.claims.push_back(check("size", mat.size() == 4 + 3 * (m - 1), std::to_string(mat.size()) + " elements"));
    b.claims.push_back(check("rank", mat.rank() == 4));
    b.claims.push_back(check("four-point-line", segments(mat, 4).size() >= 1 && mat.rank(t | ElementSet::single(x)) == 2));
    b.claims.push_back(check("three-connected", is_3connected(mat)));
    for (const auto& [pname, pat] : b.patterns) {
      bool ok = true;
      std::string note = "every e other than x";
      for (int e = 0; e < mat.size() && ok; ++e) {
        if (e == x) continue;
        const auto r = find_minor(contraction(mat, ElementSet::single(e)), pat, opt.rounded.minor);
        if (r.status != SearchStatus::Absent) {
          ok = false;
          note = mat.label(e) + ": " + status_text(r);
        }
      }
      b.claims.push_back(check("contractions-other-than-x-lack-" + pname, ok, note));
    }
    if (opt.classify) {
      classify_claim(b, "minimal-host-caseA-N_ab", n_ab, Kase::CaseA, "x", opt);
      classify_claim(b, "minimal-host-caseA-N_T", n_t, Kase::CaseA, "x", opt);
    }
    return b;
  }
  throw DomainError("sharp_affine: no generic coordinates found; " + generic_note);
}

namespace {

// Exact minor test for the projective-geometry construction, restricted to
// minors M / X \ Y with X and Y inside T + y. Every such minor restricts on
// E(P) to a quotient of P, so equal rank on E(P) forces equality with P; the
// hyperplanes of P then decide whether the extra element is free (pattern
// P + x1) or whether the quotient is the truncation of P (pattern N1 / x1).
class PgOracle : public MinorOracle {
 public:
  PgOracle(int rp, Matroid n1, Matroid n2) : rp_(rp), n1_(std::move(n1)), n2_(std::move(n2)) {
    const int n = (1 << rp) - 1;
    p_labels_ = numbered("p", n);
    for (int a = 1; a <= n; ++a) {
      std::vector<int> h;
      for (int k = 1; k <= n; ++k)
        if (std::popcount(static_cast<unsigned>(a & k)) % 2 == 0) h.push_back(k - 1);
      hyperplanes_.push_back(std::move(h));
    }
  }

  std::string name() const override { return "restricted (X, Y inside T+y)"; }

  MinorResult find(const Matroid& host, const Matroid& pattern) const override {
    const int kind = pattern_kind(pattern);
    if (kind == 0) return MinorOracle::find(host, pattern);
    const std::string note = "exact, restricted to M/X\\Y with X, Y inside T+y";
    for (const auto& l : p_labels_)
      if (!host.find(l)) return MinorResult{SearchStatus::Absent, std::nullopt, note + " (E(P) not inside host)"};
    ElementSet spare;
    for (const char* l : {"x1", "x2", "x3", "y"})
      if (auto i = host.find(l)) spare.set(*i);
    const int need = host.size() - pattern.size();
    if (need < 0 || need > spare.count()) return MinorResult{SearchStatus::Absent, std::nullopt, note};
    std::optional<MinorWitness> found;
    for_each_subset_of_size(spare, need, [&](const ElementSet& s) {
      return for_each_subset(s, [&](const ElementSet& x) {
        const Matroid c = minor(host, x, s - x);
        int extra = -1;
        if (!identify(c, kind, &extra)) return true;
        MinorWitness w{x, s - x, {}};
        for (const auto& l : pattern.labels())
          w.iso.push_back(l == "x1" ? host.index(c.label(extra)) : host.index(l));
        found = std::move(w);
        return false;
      });
    });
    if (found) return MinorResult{SearchStatus::Found, found, note};
    return MinorResult{SearchStatus::Absent, std::nullopt, note};
  }

  std::optional<std::vector<int>> isomorphic(const Matroid& a, const Matroid& b) const override {
    const int kind = pattern_kind(b);
    if (kind == 0) return MinorOracle::isomorphic(a, b);
    int extra = -1;
    if (!identify(a, kind, &extra)) return std::nullopt;
    std::vector<int> map;
    for (const auto& l : b.labels()) map.push_back(l == "x1" ? extra : a.index(l));
    return map;
  }

  // 1 for P + x1, 2 for its contraction by x1, 0 otherwise.
  int pattern_kind(const Matroid& pattern) const {
    if (pattern.labels() == n1_.labels() && pattern.rank() == n1_.rank()) return 1;
    if (pattern.labels() == n2_.labels() && pattern.rank() == n2_.rank()) return 2;
    return 0;
  }

  bool identify(const Matroid& c, int kind, int* extra) const {
    const int np = static_cast<int>(p_labels_.size());
    std::vector<int> at;
    ElementSet ep;
    for (const auto& l : p_labels_) {
      const auto i = c.find(l);
      if (!i) return false;
      at.push_back(*i);
      ep.set(*i);
    }
    auto hyper = [&](const std::vector<int>& h) {
      ElementSet s;
      for (int k : h) s.set(at[k]);
      return s;
    };
    if (kind == 1) {
      if (c.size() != np + 1 || c.rank() != rp_ || c.rank(ep) != rp_) return false;
      const int e = (c.ground() - ep).first();
      for (const auto& h : hyperplanes_)
        if (c.rank(hyper(h).with(e)) != rp_) return false;
      *extra = e;
      return true;
    }
    if (c.size() != np || c.rank() != rp_ - 1) return false;
    for (const auto& h : hyperplanes_)
      if (c.rank(hyper(h)) != rp_ - 1) return false;
    return true;
  }

 private:
  int rp_;
  Matroid n1_;
  Matroid n2_;
  std::vector<std::string> p_labels_;
  std::vector<std::vector<int>> hyperplanes_;
};

std::string describe_labels(const Matroid& m, const ElementSet& s) {
  std::string out = "{";
  for (const auto& l : m.labels_of(s)) out += (out.size() > 1 ? "," : "") + l;
  return out + "}";
}

std::set<std::vector<std::string>> triangle_labels(const Matroid& m) {
  std::set<std::vector<std::string>> out;
  for (const auto& t : triangles(m)) {
    auto l = m.labels_of(t);
    std::sort(l.begin(), l.end());
    out.insert(std::move(l));
  }
  return out;
}

// Rank agreement of equally labelled matroids on every subset of size <= 3
// and on a deterministic sample of larger subsets.
bool spot_equal(const Matroid& a, const Matroid& b, std::string& detail) {
  if (a.labels() != b.labels() || a.rank() != b.rank()) {
    detail = "labels or rank differ";
    return false;
  }
  bool ok = true;
  for (int k = 0; k <= 3 && ok; ++k)
    for_each_subset_of_size(a.ground(), k, [&](const ElementSet& s) {
      ok = a.rank(s) == b.rank(s);
      return ok;
    });
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < 20000 && ok; ++i) {
    ElementSet s;
    for (int e = 0; e < a.size(); ++e) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      if (state % 3 == 0) s.set(e);
    }
    ok = a.rank(s) == b.rank(s);
  }
  detail = "all subsets of size <= 3 and 20000 sampled subsets";
  return ok;
}

}  // namespace

ConstructionBundle sharp_pg(int rp, int rf, const BundleOptions& opt) {
  if (rp < 6 || rp > 6) throw ValidationError("sharp_pg: r(P) must be 6 (128-element capacity)");
  if (rf < 4 || rf > rp - 2) throw ValidationError("sharp_pg: r(F) must be in [4, r(P)-2]");
  const Matroid p = projective_geometry(rp - 1);
  const Matroid px = principal_extension(p, p.ground(), "x");
  const Matroid s = two_sum(px, uniform(2, 4, {"x", "x1", "x2", "x3"}), "x");
  std::vector<std::string> flat = numbered("p", (1 << rf) - 1);
  flat.insert(flat.end(), {"x1", "x2", "x3"});
  const Matroid m = principal_extension(s, s.set(flat), "y");

  ConstructionBundle b{"sharp_pg(" + std::to_string(rp) + "," + std::to_string(rf) + ")", m, {}, {}, {}, {}};
  const ElementSet t = m.set({"x1", "x2", "x3"});
  const int y = m.index("y");
  const ElementSet ep = m.set(p.labels());
  b.distinguished["T"] = t;
  b.distinguished["y"] = ElementSet::single(y);
  b.distinguished["P"] = ep;
  b.distinguished["F"] = m.set(numbered("p", (1 << rf) - 1));
  const Matroid n1 = minor(m, m.set({"x2"}), m.set({"y", "x3"}));
  const Matroid n2 = minor(m, m.set({"x1", "x2"}), m.set({"y", "x3"}));
  b.patterns.insert_or_assign("N1", n1);
  b.patterns.insert_or_assign("N2", n2);
  auto oracle = std::make_shared<PgOracle>(rp, n1, n2);
  b.oracle = oracle;
  if (!opt.validate) return b;

  b.claims.push_back(check("size", m.size() == (1 << rp) - 1 + 4, std::to_string(m.size()) + " elements"));
  int extra = -1;
  std::string d1, d2;
  const bool n1_free = oracle->identify(n1, 1, &extra) && n1.label(extra) == "x1";
  const bool n1_spot = spot_equal(n1, principal_extension(p, p.ground(), "x1"), d1);
  b.claims.push_back(check("N1-is-P+x1", n1_free && n1_spot, "x1 free over every hyperplane of P; " + d1));
  const bool n2_trunc = oracle->identify(n2, 2, &extra);
  const bool n2_spot = spot_equal(n2, truncate(p), d2);
  b.claims.push_back(check("N2-is-truncation", n2_trunc && n2_spot, "no hyperplane of P drops rank; " + d2));

  const ElementSet ty = t.with(y);
  b.claims.push_back(check("C1-T+y-cocircuit", is_cocircuit(m, ty)));
  b.claims.push_back(check("C2-E(P)-hyperplane", is_flat(m, ep) && m.rank(ep) == m.rank() - 1));
  const auto short_circuits = circuits_up_to(m, 5, CircuitQuery{ty, 50'000'000});
  b.claims.push_back(check("C3-short-circuits-meeting-T+y",
                           short_circuits.size() == 1 && short_circuits[0].elements == t,
                           std::to_string(short_circuits.size()) + " circuits of size <= 5"));
  bool c4 = true;
  int largest = 0;
  for (int e : ep) {
    const int k = simplify(contraction(m, ElementSet::single(e))).quotient.size();
    largest = std::max(largest, k);
    c4 = c4 && k < n1.size() && k < n2.size();
  }
  b.claims.push_back(check("C4-contract-p-too-small", c4, "largest |E(si(M/p))| = " + std::to_string(largest)));
  // X ranges over the contraction sets allowed by the rank gap (independent,
  // at most two elements); T itself is set aside while it survives.
  const auto p_tri = triangle_labels(p);
  const auto t_labels = [&] {
    auto l = m.labels_of(t);
    std::sort(l.begin(), l.end());
    return l;
  }();
  bool c5 = true;
  std::string c5_bad;
  for_each_subset(ty, [&](const ElementSet& x) {
    if (x.count() > 2 || m.rank(x) != x.count()) return true;
    auto tri = triangle_labels(contraction(m, x));
    tri.erase(t_labels);
    c5 = tri == p_tri;
    if (!c5) c5_bad = describe_labels(m, x);
    return c5;
  });
  b.claims.push_back(check("C5-triangles-of-M/X", c5,
                           c5 ? std::to_string(p_tri.size()) + " triangles of P" : "differs for X = " + c5_bad));

  auto c6 = [&](const std::string& id, const Matroid& host, const Matroid& pat, SearchStatus want) {
    const auto r = oracle->find(host, pat);
    std::string detail = status_text(r);
    if (r.witness)
      detail += " as /" + describe_labels(host, r.witness->contracted) + " \\" + describe_labels(host, r.witness->deleted);
    b.claims.push_back(check(id, r.status == want, detail));
  };
  c6("C6-has-N1", m, n1, SearchStatus::Found);
  c6("C6-has-N2", m, n2, SearchStatus::Found);
  c6("C6-M/y-no-N1", contraction(m, ElementSet::single(y)), n1, SearchStatus::Absent);
  c6("C6-M/y-no-N2", contraction(m, ElementSet::single(y)), n2, SearchStatus::Absent);
  for_each_subset(t, [&](const ElementSet& a) {
    if (a.count() < 2) return true;
    std::string tag;
    for (const auto& l : m.labels_of(a)) tag += l;
    c6("C6-M\\" + tag + "-no-N1", deletion(m, a), n1, SearchStatus::Absent);
    c6("C6-M\\" + tag + "-no-N2", deletion(m, a), n2, SearchStatus::Absent);
    return true;
  });
  if (opt.classify) {
    classify_claim(b, "minimal-host-caseB-N1", n1, Kase::CaseB, "y", opt);
    classify_claim(b, "minimal-host-caseB-N2", n2, Kase::CaseB, "y", opt);
  }
  return b;
}

// "name" or "name(a,b)" with integer arguments.
ConstructionBundle construct(const std::string& text, const BundleOptions& opt) {
  std::string name = text;
  std::vector<int> args;
  if (const auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') throw ValidationError("construct: malformed '" + text + "'");
    name = text.substr(0, open);
    std::stringstream in(text.substr(open + 1, text.size() - open - 2));
    for (std::string tok; std::getline(in, tok, ',');) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ValidationError("construct: bad argument '" + tok + "' in '" + text + "'");
      }
    }
  }
  auto arg = [&](std::size_t i, int fallback) { return i < args.size() ? args[i] : fallback; };
  std::size_t max_args = 0;
  if (name == "remark_graph") max_args = 2;
  else if (name == "sharp_graph" || name == "sharp_affine") max_args = 1;
  else if (name == "sharp_pg") max_args = 2;
  else throw DomainError("construct: unknown construction '" + name + "'");
  if (args.size() > max_args) throw ValidationError("construct: too many arguments in '" + text + "'");
  if (name == "remark_graph") return remark_graph(arg(0, 6), arg(1, 2), opt);
  if (name == "sharp_graph") return sharp_graph(arg(0, 14), opt);
  if (name == "sharp_affine") return sharp_affine(arg(0, 6), opt);
  return sharp_pg(arg(0, 6), arg(1, 4), opt);
}

std::vector<std::string> construction_list() { return {"remark_graph", "sharp_affine", "sharp_graph", "sharp_pg"}; }

}  // namespace trimat
