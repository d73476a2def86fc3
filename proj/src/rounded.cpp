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

#include "trimat/rounded.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "trimat/constructions.hpp"
#include "trimat/error.hpp"

namespace trimat {

MinorResult MinorOracle::find(const Matroid& host, const Matroid& pattern) const { return find_minor(host, pattern); }

std::optional<std::vector<int>> MinorOracle::isomorphic(const Matroid& a, const Matroid& b) const {
  return isomorphism(b, a);
}

const MinorOracle& exhaustive_oracle() {
  static const MinorOracle oracle;
  return oracle;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string to_string(Kase k) {
  switch (k) {
    case Kase::Contained: return "Contained";
    case Kase::CaseA: return "CaseA";
    case Kase::CaseB: return "CaseB";
    case Kase::None: break;
  }
  return "None";
}

std::string to_string(ChainOp op) { return op == ChainOp::Contract ? "contract" : "delete"; }

std::string to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::Found: return "found";
    case ChainStatus::Hypothesis: return "hypothesis";
    case ChainStatus::NotFound: break;
  }
  return "not-found";
}

namespace {

Check check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

bool found(const MinorResult& r, const std::string& what) {
  if (r.status == SearchStatus::Budget) throw BudgetError(what + ": " + r.note);
  return r.found();
}

bool is_triangle(const Matroid& m, const ElementSet& t) {
  return t.count() == 3 && t.subset_of(m.ground()) && is_circuit(m, t);
}

std::vector<int> label_order(const Matroid& m, const ElementSet& s) {
  std::vector<int> v = s.to_vector();
  std::sort(v.begin(), v.end(), [&](int a, int b) { return m.label(a) < m.label(b); });
  return v;
}

// Translates a minor's element set back to the matroid it was taken from.
ElementSet lift(const Matroid& from, const Matroid& part, const ElementSet& s) {
  ElementSet out;
  for (int e : s) out.set(from.index(part.label(e)));
  return out;
}

// An n-minor M / X \ Y with X and Y inside `within`.
std::optional<MinorWitness> minor_within(const Matroid& m, const Matroid& n, const ElementSet& within,
                                         const MinorOracle& oracle) {
  const int need = m.size() - n.size();
  if (need < 0 || need > within.count()) return std::nullopt;
  std::optional<MinorWitness> out;
  for_each_subset_of_size(within, need, [&](const ElementSet& s) {
    return for_each_subset(s, [&](const ElementSet& x) {
      if (m.rank(x) != x.count() || m.rank() - x.count() != n.rank()) return true;
      const Matroid c = minor(m, x, s - x);
      if (c.rank() != n.rank()) return true;
      auto map = oracle.isomorphic(c, n);
      if (!map) return true;
      MinorWitness w{x, s - x, {}};
      for (int j : *map) w.iso.push_back(m.index(c.label(j)));
      out = std::move(w);
      return false;
    });
  });
  return out;
}

bool minor_absent(const MinorOracle& oracle, const Matroid& host, const Matroid& n, std::string& note) {
  const auto r = oracle.find(host, n);
  note = to_string(r.status) + " (" + r.note + ")";
  return r.status == SearchStatus::Absent;
}

std::string describe(const Matroid& m, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : m.labels_of(s)) {
    out += (first ? "" : ",") + l;
    first = false;
  }
  return out + "}";
}

// A proper minor M / C \ D (C, D outside T) with the property that no
// 3-connected single-element step reaches. Such minors are wheels or whirls
// containing N, so above the exhaustive size only those are searched.
std::optional<std::pair<ElementSet, ElementSet>> deeper_minor(const Matroid& m, const Matroid& n, const ElementSet& t,
                                                              const MinorOracle& oracle, const RoundedOptions& opt) {
  const ElementSet rest = m.ground() - t;
  if (rest.count() <= 10) {
    std::optional<std::pair<ElementSet, ElementSet>> out;
    for (int k = 2; k <= m.size() - n.size() && !out; ++k) {
      for_each_subset_of_size(rest, k, [&](const ElementSet& r) {
        return for_each_subset(r, [&](const ElementSet& c) {
          const int rc = m.rank(c);
          if (m.rank() - rc < n.rank() || (m.size() - k) - (m.rank() - rc) < n.corank()) return true;
          if (m.rank(t | c) - rc != 2) return true;
          for (int e : t)
            if (m.rank((t - ElementSet::single(e)) | c) - rc != 2) return true;
          const Matroid h = minor(m, c, r - c);
          if (!is_3connected(h, opt.connectivity) || !found(oracle.find(h, n), "deeper minor")) return true;
          out.emplace(c, r - c);
          return false;
        });
      });
    }
    return out;
  }
  const int k0 = n.rank();
  const bool is_wheel = k0 >= 3 && n.size() == 2 * k0 && oracle.isomorphic(n, wheel(k0));
  const bool is_whirl = k0 >= 2 && n.size() == 2 * k0 && oracle.isomorphic(n, whirl(k0));
  if (!is_wheel && !is_whirl) return std::nullopt;
  for (int k = k0; 2 * k < m.size(); ++k) {
    for (int kind = 0; kind < 2; ++kind) {
      if (kind == 0 && (!is_wheel || k < 3)) continue;
      const Matroid w = kind == 0 ? wheel(k) : whirl(k);
      const auto r = find_minor_using_triangle(m, w, t, opt.minor);
      if (found(r, "deeper minor")) return std::make_pair(r.witness->contracted, r.witness->deleted);
    }
  }
  return std::nullopt;
}

// No proper minor keeps the property: single steps first, then deeper ones.
bool minimal_for_property(const Matroid& m, const Matroid& n, const ElementSet& t, const MinorOracle& oracle,
                          const RoundedOptions& opt, std::string& detail) {
  for (int e : label_order(m, m.ground() - t)) {
    const ElementSet s = ElementSet::single(e);
    if (has_triangle_property(deletion(m, s), n, t, oracle, opt)) {
      detail = "M\\" + m.label(e) + " keeps the property";
      return false;
    }
    if (has_triangle_property(contraction(m, s), n, t, oracle, opt)) {
      detail = "M/" + m.label(e) + " keeps the property";
      return false;
    }
  }
  if (auto deeper = deeper_minor(m, n, t, oracle, opt)) {
    detail = "M/" + describe(m, deeper->first) + "\\" + describe(m, deeper->second) + " keeps the property";
    return false;
  }
  detail = "no proper minor keeps the property";
  return true;
}

// Elements e with si(M/e) (or co(M\e)) 3-connected and having an n-minor.
ElementSet candidates(const Matroid& m, const Matroid& n, bool contract, const MinorOracle& oracle,
                      const RoundedOptions& opt) {
  ElementSet out;
  for (int e = 0; e < m.size(); ++e) {
    const ElementSet s = ElementSet::single(e);
    const Matroid r = contract ? si(contraction(m, s)) : co(deletion(m, s));
    if (r.size() < n.size()) continue;
    if (!found(oracle.find(r, n), "candidate scan")) continue;
    if (is_3connected(r, opt.connectivity)) out.set(e);
  }
  return out;
}

}  // namespace

bool has_triangle_property(const Matroid& m, const Matroid& n, const ElementSet& t, const MinorOracle& oracle,
                           const RoundedOptions& opt) {
  if (!is_triangle(m, t)) return false;
  if (m.size() < n.size() || !found(oracle.find(m, n), "property")) return false;
  return is_3connected(m, opt.connectivity);
}

ElementSet contract_candidates(const Matroid& m, const Matroid& n, const RoundedOptions& opt) {
  return candidates(m, n, true, exhaustive_oracle(), opt);
}

ElementSet delete_candidates(const Matroid& m, const Matroid& n, const RoundedOptions& opt) {
  return candidates(m, n, false, exhaustive_oracle(), opt);
}

Classification classify_minimal(const Matroid& m, const Matroid& n, const ElementSet& t, const MinorOracle& oracle,
                                const RoundedOptions& opt) {
  Classification out;
  auto& ch = out.checks;
  if (n.size() < 4) throw ValidationError("classify_minimal: the pattern needs at least 4 elements");
  if (!is_3connected(n, opt.connectivity)) throw ValidationError("classify_minimal: the pattern is not 3-connected");
  ch.push_back(check("property", has_triangle_property(m, n, t, oracle, opt),
                     "3-connected, T a triangle, N-minor via " + oracle.name()));
  std::string detail;
  const bool minimal = minimal_for_property(m, n, t, oracle, opt, detail);
  ch.push_back(check("minor-minimal", minimal, detail));
  const int gap = m.rank() - n.rank();
  const int cogap = m.corank() - n.corank();
  ch.push_back(check("rank-gap<=2", gap <= 2, "r(M)-r(N) = " + std::to_string(gap)));

  if (auto w = minor_within(m, n, t, oracle)) {
    out.kase = Kase::Contained;
    ch.push_back(check("N'-inside-T", true, "contract " + describe(m, w->contracted) + ", delete " + describe(m, w->deleted)));
    out.witness = std::move(w);
    return out;
  }

  // Alternative (a): a 4-point line T + x.
  std::vector<Check> a_checks;
  std::optional<int> a_x;
  std::optional<MinorWitness> a_w;
  for (int x : label_order(m, m.ground() - t)) {
    const ElementSet tx = t.with(x);
    bool line = m.rank(tx) == 2;
    for (int e : t) line = line && m.rank(ElementSet{e, x}) == 2;
    if (!line) continue;
    std::vector<Check> c;
    const std::string tag = "A[" + m.label(x) + "]:";
    c.push_back(check(tag + "rank-gap=1", gap == 1, std::to_string(gap)));
    c.push_back(check(tag + "corank-gap-in-{2,3}", cogap == 2 || cogap == 3, std::to_string(cogap)));
    c.push_back(check(tag + "four-point-line", true, describe(m, tx)));
    auto w = minor_within(m, n, tx, oracle);
    c.push_back(check(tag + "N'-inside-T+x", w.has_value(), w ? "contract " + describe(m, w->contracted) + ", delete " + describe(m, w->deleted) : "none"));
    std::string note;
    const bool no_del = minor_absent(oracle, deletion(m, ElementSet::single(x)), n, note);
    c.push_back(check(tag + "M\\x-no-N-minor", no_del, note));
    const ElementSet cand = candidates(m, n, true, oracle, opt);
    c.push_back(check(tag + "x-unique-contract-candidate", cand == ElementSet::single(x), "candidates " + describe(m, cand)));
    if (all_passed(c)) {
      a_checks = std::move(c);
      a_x = x;
      a_w = std::move(w);
      break;
    }
    if (a_checks.empty()) a_checks = std::move(c);
  }

  // Alternative (b): a 4-cocircuit T + y.
  std::vector<Check> b_checks;
  std::optional<int> b_y;
  std::optional<MinorWitness> b_w;
  for (int y : label_order(m, m.ground() - t)) {
    const ElementSet ty = t.with(y);
    if (!is_cocircuit(m, ty)) continue;
    std::vector<Check> c;
    const std::string tag = "B[" + m.label(y) + "]:";
    c.push_back(check(tag + "corank-gap=2", cogap == 2, std::to_string(cogap)));
    c.push_back(check(tag + "rank-gap-in-{1,2}", gap == 1 || gap == 2, std::to_string(gap)));
    c.push_back(check(tag + "four-cocircuit", true, describe(m, ty)));
    auto w = minor_within(m, n, ty, oracle);
    c.push_back(check(tag + "N'-inside-T+y", w.has_value(), w ? "contract " + describe(m, w->contracted) + ", delete " + describe(m, w->deleted) : "none"));
    std::string note;
    const bool no_con = minor_absent(oracle, contraction(m, ElementSet::single(y)), n, note);
    c.push_back(check(tag + "M/y-no-N-minor", no_con, note));
    for_each_subset(t, [&](const ElementSet& a) {
      if (a.count() < 2) return true;
      const bool absent = minor_absent(oracle, deletion(m, a), n, note);
      c.push_back(check(tag + "M\\" + describe(m, a) + "-no-N-minor", absent, note));
      return true;
    });
    if (all_passed(c)) {
      b_checks = std::move(c);
      b_y = y;
      b_w = std::move(w);
      break;
    }
    if (b_checks.empty()) b_checks = std::move(c);
  }

  const bool a_ok = a_x.has_value();
  const bool b_ok = b_y.has_value();
  if (a_ok) {
    out.kase = Kase::CaseA;
    out.special = a_x;
    out.witness = a_w;
    ch.insert(ch.end(), a_checks.begin(), a_checks.end());
  } else if (b_ok) {
    out.kase = Kase::CaseB;
    out.special = b_y;
    out.witness = b_w;
    ch.insert(ch.end(), b_checks.begin(), b_checks.end());
  } else {
    ch.push_back(check("some-alternative-holds", false, "no N' inside T, no verified 4-point line or 4-cocircuit"));
    ch.insert(ch.end(), a_checks.begin(), a_checks.end());
    ch.insert(ch.end(), b_checks.begin(), b_checks.end());
    return out;
  }
  ch.push_back(check("single-alternative", !(a_ok && b_ok)));
  return out;
}

namespace {

struct HostSearch {
  const Matroid& m;
  const Matroid& n;
  const ElementSet& t;
  const MinorOracle& oracle;
  const RoundedOptions& opt;
  bool all = false;
  std::set<std::pair<ElementSet, ElementSet>> visited;
  std::vector<std::pair<ElementSet, ElementSet>> hosts;

  // True once a host is found and only the first one is wanted.
  bool descend(const ElementSet& c, const ElementSet& d) {
    if (!visited.insert({c, d}).second) return false;
    if (visited.size() > opt.max_visited) throw BudgetError("minimal_triangle_host: visited-minor budget exhausted");
    bool any = false;
    for (int e : label_order(m, m.ground() - c - d - t)) {
      for (int op = 0; op < 2; ++op) {
        const ElementSet c2 = op ? c.with(e) : c;
        const ElementSet d2 = op ? d : d.with(e);
        if (visited.count({c2, d2})) {
          any = true;
          continue;
        }
        const Matroid h = minor(m, c2, d2);
        if (!has_triangle_property(h, n, lift(h, m, t), oracle, opt)) continue;
        any = true;
        if (descend(c2, d2) && !all) return true;
      }
    }
    if (!any) {
      const Matroid h = minor(m, c, d);
      if (auto deeper = deeper_minor(h, n, lift(h, m, t), oracle, opt))
        return descend(c | lift(m, h, deeper->first), d | lift(m, h, deeper->second)) && !all;
      hosts.emplace_back(c, d);
      return true;
    }
    return false;
  }
};

MinimalHostReport host_report(const Matroid& m, const Matroid& n, const ElementSet& t, const ElementSet& c,
                              const ElementSet& d, const MinorOracle& oracle, const RoundedOptions& opt) {
  const Matroid h = minor(m, c, d);
  const ElementSet th = h.set(m.labels_of(t));
  MinimalHostReport r{h, c, d, th, classify_minimal(h, n, th, oracle, opt), {}};
  r.checks.push_back(check("host-rank-gap<=2", h.rank() - n.rank() <= 2));
  if (r.classification.witness) {
    const auto& w = *r.classification.witness;
    const int outside = ((w.contracted | w.deleted) - th).count();
    r.checks.push_back(check("at-most-one-outside-N'+T", outside <= 1, std::to_string(outside)));
  } else {
    r.checks.push_back(check("at-most-one-outside-N'+T", false, "no N' found"));
  }
  return r;
}

}  // namespace

MinimalHostReport minimal_triangle_host(const Matroid& m, const Matroid& n, const ElementSet& t,
                                        const MinorOracle& oracle, const RoundedOptions& opt) {
  if (!has_triangle_property(m, n, t, oracle, opt))
    throw ValidationError("minimal_triangle_host: M must be 3-connected with T a triangle and an N-minor");
  HostSearch s{m, n, t, oracle, opt, false, {}, {}};
  s.descend({}, {});
  const auto& [c, d] = s.hosts.front();
  return host_report(m, n, t, c, d, oracle, opt);
}

std::vector<MinimalHostReport> all_minimal_triangle_hosts(const Matroid& m, const Matroid& n, const ElementSet& t,
                                                          const MinorOracle& oracle, const RoundedOptions& opt) {
  if (!has_triangle_property(m, n, t, oracle, opt))
    throw ValidationError("all_minimal_triangle_hosts: M must be 3-connected with T a triangle and an N-minor");
  HostSearch s{m, n, t, oracle, opt, true, {}, {}};
  s.descend({}, {});
  std::vector<MinimalHostReport> out;
  for (const auto& [c, d] : s.hosts) out.push_back(host_report(m, n, t, c, d, oracle, opt));
  return out;
}

namespace {

// si(M) 3-connected is equivalent to vertical 3-connectivity; the
// exhaustive vertical test is used while it is cheap.
bool vertical3(const Matroid& m, const RoundedOptions& opt) {
  if (m.size() <= 16) return is_vertically_3connected(m, opt.connectivity);
  return is_3connected(si(m), opt.connectivity);
}

}  // namespace

BinaryWitness verify_thm_binary(const Matroid& m, const Matroid& n, const ElementSet& t, const RoundedOptions& opt) {
  if (!is_triangle(m, t)) throw ValidationError("verify_thm_binary: T is not a triangle");
  if (!binary_representation(m)) throw ValidationError("verify_thm_binary: M has no binary representation");
  BinaryWitness out{false, m, {}, {}, {}, {}, {}};
  if (n.size() >= 4) {
    const auto rep = minimal_triangle_host(m, n, t, exhaustive_oracle(), opt);
    out.route = "host-search";
    out.host = rep.host;
    out.contracted = rep.contracted;
    out.deleted = rep.deleted;
    out.note = "kase " + to_string(rep.classification.kase);
    if (rep.ok() && rep.classification.kase == Kase::Contained && rep.classification.witness) {
      out.found = true;
      out.witness = *rep.classification.witness;
    }
    return out;
  }
  // Small patterns: a 3-connected host on T itself, which makes the
  // containment automatic.
  out.route = "small-pattern";
  const ElementSet rest = m.ground() - t;
  auto try_host = [&](const ElementSet& c, const ElementSet& d, const std::string& how) {
    const Matroid h = minor(m, c, d);
    if (!is_3connected(h, opt.connectivity)) return false;
    const auto r = find_minor(h, n, opt.minor);
    if (!found(r, "verify_thm_binary")) return false;
    out = BinaryWitness{true, h, c, d, *r.witness, "small-pattern", how};
    return true;
  };
  if (try_host({}, rest, "M|T")) return out;
  for (const auto& c : circuits_up_to(m, m.rank() + 1, CircuitQuery{t, 50'000'000})) {
    const ElementSet cc = c.elements;
    if ((cc & t).count() != 2) continue;
    if (try_host(cc - t, rest - cc, "(M|T+C)/(C-T), C = " + describe(m, cc))) return out;
  }
  out.note = "no host on T found";
  return out;
}

std::vector<RoundedFailure> check_triangle_rounded(const std::vector<Matroid>& catalog,
                                                   const std::vector<Matroid>& family, const MinorOptions& opt) {
  std::vector<RoundedFailure> out;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Matroid& m = catalog[i];
    if (!is_3connected(m)) continue;
    bool has = false;
    bool budget = false;
    for (const auto& f : family) {
      const auto r = find_minor(m, f, opt);
      has = has || r.found();
      budget = budget || r.status == SearchStatus::Budget;
    }
    if (!has) {
      if (budget) out.push_back({i, {}, SearchStatus::Budget});
      continue;
    }
    for (const auto& t : triangles(m)) {
      bool ok = false;
      bool tb = false;
      for (const auto& f : family) {
        const auto r = find_minor_using_triangle(m, f, t, opt);
        ok = ok || r.found();
        tb = tb || r.status == SearchStatus::Budget;
        if (ok) break;
      }
      if (!ok) out.push_back({i, t, tb ? SearchStatus::Budget : SearchStatus::Absent});
    }
  }
  return out;
}

int largest_wheel_minor(const Matroid& m, bool whirl_kind, const MinorOptions& opt) {
  // Whirls have U_{2,4}-minors, so binary matroids have none.
  if (whirl_kind && binary_representation(m)) return 0;
  const int low = whirl_kind ? 2 : 3;
  for (int k = std::min(m.rank(), m.size() / 2); k >= low; --k) {
    const Matroid w = whirl_kind ? whirl(k) : wheel(k);
    if (found(find_minor(m, w, opt), "largest_wheel_minor")) return k;
  }
  return 0;
}

namespace {

bool is_wheel_like(const Matroid& n, bool whirl_kind) {
  const int k = n.rank();
  if (n.size() != 2 * k || k < (whirl_kind ? 2 : 3)) return false;
  return isomorphism(n, whirl_kind ? whirl(k) : wheel(k)).has_value();
}

struct ChainSearch {
  const Matroid& m;
  const Matroid& n;
  const RoundedOptions& opt;
  std::set<std::pair<ElementSet, ElementSet>> failed;
  std::vector<ChainStep> steps;
  std::vector<int> iso;
  std::size_t visited = 0;

  bool dfs(const ElementSet& c, const ElementSet& d) {
    const Matroid cur = minor(m, c, d);
    if (cur.size() == n.size()) {
      auto map = isomorphism(n, cur, opt.minor);
      if (!map) return false;
      iso.clear();
      for (int j : *map) iso.push_back(m.index(cur.label(j)));
      return true;
    }
    if (failed.count({c, d})) return false;
    if (++visited > opt.max_visited) throw BudgetError("splitter_chain: visited-minor budget exhausted");
    for (int e : label_order(m, m.ground() - c - d)) {
      for (int op = 0; op < 2; ++op) {
        const ElementSet c2 = op ? c.with(e) : c;
        const ElementSet d2 = op ? d : d.with(e);
        if (op ? !is_independent(m, c2) : !is_coindependent(m, d2)) continue;
        const Matroid child = minor(m, c2, d2);
        if (child.rank() < n.rank() || child.corank() < n.corank()) continue;
        if (!is_3connected(child, opt.connectivity)) continue;
        if (!found(find_minor(child, n, opt.minor), "splitter_chain")) continue;
        if (op ? !vertical3(contraction(m, c2), opt) : !vertical3(dual(deletion(m, d2)), opt)) continue;
        steps.push_back({e, op ? ChainOp::Contract : ChainOp::Delete});
        if (dfs(c2, d2)) return true;
        steps.pop_back();
      }
    }
    failed.insert({c, d});
    return false;
  }
};

}  // namespace

ChainResult splitter_chain(const Matroid& m, const Matroid& n, const RoundedOptions& opt) {
  if (!is_3connected(m, opt.connectivity) || !is_3connected(n, opt.connectivity))
    throw ValidationError("splitter_chain: both matroids must be 3-connected");
  ChainResult out;
  for (bool whirl_kind : {false, true}) {
    if (!is_wheel_like(n, whirl_kind)) continue;
    const int w = largest_wheel_minor(m, whirl_kind, opt.minor);
    const std::string what = whirl_kind ? "whirl" : "wheel";
    const bool ok = w <= n.rank();
    out.checks.push_back(check("no-larger-" + what, ok, "largest " + what + " minor has rank " + std::to_string(w)));
    if (!ok) {
      out.status = ChainStatus::Hypothesis;
      out.note = "N is a " + what + " and M has a larger " + what + " minor";
      return out;
    }
  }
  if (m.size() < n.size() || !found(find_minor(m, n, opt.minor), "splitter_chain"))
    throw ValidationError("splitter_chain: N is not a minor of M");
  ChainSearch s{m, n, opt, {}, {}, {}, 0};
  if (!s.dfs({}, {})) {
    out.status = ChainStatus::NotFound;
    out.note = "no chain of 3-connected single-element minors";
    out.checks.push_back(check("chain-exists", false, out.note));
    return out;
  }
  ChainCertificate cert{s.steps, s.iso};
  // Re-verification of the certificate from scratch.
  ElementSet c, d;
  bool prefix3 = true, vert = true, covert = true;
  for (const auto& st : cert.steps) {
    if (st.op == ChainOp::Contract) {
      c.set(st.element);
      vert = vert && vertical3(contraction(m, c), opt);
    } else {
      d.set(st.element);
      covert = covert && vertical3(dual(deletion(m, d)), opt);
    }
    prefix3 = prefix3 && is_3connected(minor(m, c, d), opt.connectivity);
  }
  const Matroid end = minor(m, c, d);
  MinorWitness w{c, d, cert.iso};
  out.checks.push_back(check("prefixes-3-connected", prefix3));
  out.checks.push_back(check("I-independent", is_independent(m, c), describe(m, c)));
  out.checks.push_back(check("I*-coindependent", is_coindependent(m, d), describe(m, d)));
  out.checks.push_back(check("contraction-prefixes-vertically-3-connected", vert));
  out.checks.push_back(check("deletion-prefixes-dual-vertically-3-connected", covert));
  out.checks.push_back(check("end-isomorphic-to-N", end.size() == n.size() && verify_witness(m, n, w)));
  out.status = all_passed(out.checks) ? ChainStatus::Found : ChainStatus::NotFound;
  out.chain = std::move(cert);
  return out;
}

std::vector<Check> lemma_bixby(const Matroid& m, const RoundedOptions& opt) {
  std::vector<Check> out;
  if (m.size() < 4) return out;
  for (int e = 0; e < m.size(); ++e) {
    const ElementSet s = ElementSet::single(e);
    const bool ok = is_3connected(si(contraction(m, s)), opt.connectivity) ||
                    is_3connected(co(deletion(m, s)), opt.connectivity);
    out.push_back(check("bixby[" + m.label(e) + "]", ok));
  }
  return out;
}

std::vector<Check> lemma_w38_cor(const Matroid& m, const RoundedOptions& opt) {
  std::vector<Check> out;
  const auto tris = triangles(m);
  const auto tds = triads(m);
  for (const auto& t : tris)
    for (const auto& ts : tds) {
      if ((t & ts).count() != 2) continue;
      const int x = (ts - t).first();
      const int y = (t - ts).first();
      const bool ok = is_3connected(si(contraction(m, ElementSet::single(x))), opt.connectivity) &&
                      is_3connected(co(deletion(m, ElementSet::single(y))), opt.connectivity);
      out.push_back(check("w38-cor[" + describe(m, t) + "," + describe(m, ts) + "]", ok));
    }
  return out;
}

std::vector<Check> lemma_costalonga(const Matroid& m, const Matroid& n, const RoundedOptions& opt) {
  std::vector<Check> out;
  const int gap = m.rank() - n.rank();
  if (gap < 1) return out;
  const int k = std::min(3, gap);
  const ElementSet cand = contract_candidates(m, n, opt);
  bool ok = false;
  for_each_subset_of_size(cand, k, [&](const ElementSet& j) {
    ok = is_independent(m, j);
    return !ok;
  });
  out.push_back(check("costalonga[k=" + std::to_string(k) + "]", ok, "candidates " + describe(m, cand)));
  return out;
}

std::vector<Check> lemma_wcomut(const Matroid& m, const Matroid& n, const RoundedOptions& opt) {
  std::vector<Check> out;
  if (m.rank() - n.rank() < 3) return out;
  const ElementSet cand = contract_candidates(m, n, opt);
  for (int x : cand) {
    bool ok = false;
    for (int y : cand) {
      if (y == x) continue;
      const Matroid r = si(contraction(m, ElementSet{x, y}));
      if (r.size() < n.size() || !is_3connected(r, opt.connectivity)) continue;
      if (found(find_minor(r, n, opt.minor), "wcomut")) {
        ok = true;
        break;
      }
    }
    out.push_back(check("wcomut[" + m.label(x) + "]", ok));
  }
  return out;
}

std::vector<Check> lemma_gap4(const Matroid& m, const Matroid& n, const RoundedOptions& opt) {
  std::vector<Check> out;
  if (m.corank() - n.corank() < 4 || co(n).size() != n.size()) return out;
  const ElementSet cand = delete_candidates(m, n, opt);
  bool a = false;
  for_each_subset_of_size(cand, 4, [&](const ElementSet& s) {
    a = is_coindependent(m, s);
    return !a;
  });
  if (a) {
    out.push_back(check("gap4", true, "(a) coindependent 4-set of delete candidates"));
    return out;
  }
  // (b): triad {b1,b2,b3} with triangles {a1,b2,b3} and {a2,b1,b3}.
  const auto tris = triangles(m);
  std::set<ElementSet> tri_set(tris.begin(), tris.end());
  bool b = false;
  std::string how;
  for (const auto& ts : triads(m)) {
    const auto v = ts.to_vector();
    for (int i = 0; i < 3 && !b; ++i) {
      const int b3 = v[i], b1 = v[(i + 1) % 3], b2 = v[(i + 2) % 3];
      for (int a1 : m.ground() - ts) {
        if (!tri_set.count(ElementSet{a1, b2, b3})) continue;
        for (int a2 : m.ground() - ts) {
          if (a2 == a1 || !tri_set.count(ElementSet{a2, b1, b3})) continue;
          const Matroid r = co(deletion(m, ts));
          if (r.size() >= n.size() && is_3connected(r, opt.connectivity) &&
              found(find_minor(r, n, opt.minor), "gap4")) {
            b = true;
            how = "(b) triad " + describe(m, ts);
          }
          break;
        }
        if (b) break;
      }
    }
    if (b) break;
  }
  out.push_back(check("gap4", b, b ? how : "neither alternative found"));
  return out;
}

}  // namespace trimat
