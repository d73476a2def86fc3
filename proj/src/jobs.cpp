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
#include "trimat/jobs.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "jobs_internal.hpp"
#include "parallel.hpp"
#include "trimat/catalog.hpp"
#include "trimat/constructions.hpp"
#include "trimat/error.hpp"
#include "trimat/minors.hpp"
#include "trimat/rounded.hpp"
#include "trimat/structure.hpp"

namespace trimat {

namespace {

const std::vector<std::pair<JobKind, std::string>>& kind_names() {
  static const std::vector<std::pair<JobKind, std::string>> names = {
      {JobKind::Thm12, "thm12"},
      {JobKind::Thm13, "thm13"},
      {JobKind::Thm14, "thm14"},
      {JobKind::Remark, "remark"},
      {JobKind::Sharpness, "sharpness"},
      {JobKind::LemmaSuite, "lemma-suite"},
      {JobKind::KernelSuite, "kernel-suite"},
      {JobKind::CatalogBuild, "catalog-build"},
      {JobKind::MinorQuery, "minor-query"},
      {JobKind::Chain, "chain"},
  };
  return names;
}

const std::vector<std::pair<Outcome, std::string>>& outcome_names() {
  static const std::vector<std::pair<Outcome, std::string>> names = {
      {Outcome::Pass, "pass"}, {Outcome::Fail, "fail"}, {Outcome::Budget, "budget"}, {Outcome::Skipped, "skipped"}};
  return names;
}

}  // namespace

std::string to_string(JobKind k) {
  for (const auto& [kind, name] : kind_names())
    if (kind == k) return name;
  return "?";
}

JobKind job_kind(std::string_view name) {
  if (name == "lemmas") return JobKind::LemmaSuite;
  if (name == "kernel") return JobKind::KernelSuite;
  for (const auto& [kind, n] : kind_names())
    if (n == name) return kind;
  throw ValidationError("unknown job '" + std::string(name) + "'");
}

std::string to_string(Outcome o) {
  for (const auto& [out, name] : outcome_names())
    if (out == o) return name;
  return "?";
}

std::string default_catalog_dir() {
  const char* env = std::getenv("TRIMAT_CATALOG_DIR");
  return env && *env ? env : "catalogs";
}

// ---------------------------------------------------------------------------
// Config

JobConfig parse_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config at /: expected an object");
  JobConfig c;
  auto positive = [&](const char* key) {
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000'000)
      throw ValidationError(std::string("config at /") + key + ": expected a positive integer");
    return v.get<int>();
  };
  auto string_at = [&](const char* key) {
    if (!j.at(key).is_string()) throw ValidationError(std::string("config at /") + key + ": expected a string");
    return j.at(key).get<std::string>();
  };
  if (!j.contains("job")) throw ValidationError("config at /job: missing");
  for (const auto& [key, value] : j.items()) {
    if (key == "job") {
      c.kind = job_kind(string_at("job"));
    } else if (key == "bound") {
      c.bound = positive("bound");
    } else if (key == "graph_bound") {
      c.graph_bound = positive("graph_bound");
    } else if (key == "workers") {
      c.workers = positive("workers");
    } else if (key == "catalog_dir") {
      c.catalog_dir = string_at("catalog_dir");
    } else if (key == "force_regen") {
      if (!value.is_boolean()) throw ValidationError("config at /force_regen: expected a boolean");
      c.force_regen = value.get<bool>();
    } else if (key == "instances") {
      if (!value.is_array()) throw ValidationError("config at /instances: expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string())
          throw ValidationError("config at /instances/" + std::to_string(i) + ": expected a string");
        c.instances.push_back(value[i].get<std::string>());
      }
    } else if (key == "expect") {
      c.expect = string_at("expect");
      if (c.expect != "present" && c.expect != "absent")
        throw ValidationError("config at /expect: expected \"present\" or \"absent\"");
    } else if (key == "node_budget") {
      c.node_budget = static_cast<std::uint64_t>(positive("node_budget"));
    } else {
      throw ValidationError("config at /" + key + ": unknown field");
    }
  }
  return c;
}

Json config_json(const JobConfig& c) {
  Json j;
  j["job"] = to_string(c.kind);
  if (c.bound) j["bound"] = c.bound;
  if (c.graph_bound) j["graph_bound"] = c.graph_bound;
  j["workers"] = c.workers;
  if (!c.catalog_dir.empty()) j["catalog_dir"] = c.catalog_dir;
  if (c.force_regen) j["force_regen"] = true;
  if (!c.instances.empty()) j["instances"] = c.instances;
  if (!c.expect.empty()) j["expect"] = c.expect;
  if (c.node_budget) j["node_budget"] = c.node_budget;
  return j;
}

// ---------------------------------------------------------------------------
// Reports

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.result) {
      case Outcome::Pass: ++s.pass; break;
      case Outcome::Fail: ++s.fail; break;
      case Outcome::Budget: ++s.budget; break;
      case Outcome::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

int exit_code(const Report& r) {
  const Summary s = r.summary();
  if (s.fail) return 1;
  if (s.budget) return 2;
  return 0;
}

namespace {

Json report_json(const Report& r) {
  Json j;
  j["job"] = r.job;
  j["config"] = r.config;
  j["reproducibility"] = r.reproducibility;
  const Summary s = r.summary();
  j["summary"] = {{"records", s.total()}, {"pass", s.pass}, {"fail", s.fail}, {"budget", s.budget}, {"skipped", s.skipped}};
  j["records"] = Json::array();
  for (const auto& rec : r.records) {
    Json x;
    x["instance"] = rec.instance;
    x["result"] = to_string(rec.result);
    x["detail"] = rec.detail;
    x["witness"] = rec.witness;
    j["records"].push_back(std::move(x));
  }
  return j;
}

std::string upper(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

std::string emit(const Report& r, ReportFormat f) {
  if (f == ReportFormat::Json) return report_json(r).dump(1) + "\n";
  std::ostringstream out;
  const Summary s = r.summary();
  out << "job " << r.job << "\n";
  std::size_t width = 8;
  for (const auto& rec : r.records) width = std::max(width, rec.instance.size());
  width = std::min<std::size_t>(width, 60);
  for (const auto& rec : r.records) {
    out << std::left << std::setw(8) << upper(to_string(rec.result)) << std::setw(static_cast<int>(width) + 2)
        << rec.instance << rec.detail;
    if (rec.seconds > 0) out << "  [" << std::fixed << std::setprecision(2) << rec.seconds << "s]";
    out << "\n";
  }
  for (const auto& rec : r.records)
    if (rec.result == Outcome::Fail && !rec.witness.is_null())
      out << "witness " << rec.instance << ": " << rec.witness.dump() << "\n";
  out << "records: " << s.total() << ", pass: " << s.pass << ", failures: " << s.fail << ", budget: " << s.budget
      << ", skipped: " << s.skipped << "\n";
  return out.str();
}

Report parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
  try {
    Report r;
    r.job = j.at("job").get<std::string>();
    r.config = j.at("config");
    r.reproducibility = j.at("reproducibility");
    for (const auto& x : j.at("records")) {
      Record rec;
      rec.instance = x.at("instance").get<std::string>();
      const auto res = x.at("result").get<std::string>();
      bool known = false;
      for (const auto& [o, name] : outcome_names())
        if (name == res) {
          rec.result = o;
          known = true;
        }
      if (!known) throw ValidationError("report: unknown result '" + res + "'");
      rec.detail = x.at("detail").get<std::string>();
      rec.witness = x.at("witness");
      r.records.push_back(std::move(rec));
    }
    if (j.at("summary").at("records").get<int>() != r.summary().total())
      throw ValidationError("report: summary does not match the records");
    return r;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Instances

Matroid resolve_instance(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return parse_matroid(buf.str());
    } catch (const ValidationError& e) {
      throw ValidationError(source + ": " + e.what());
    }
  }
  try {
    return named(source);
  } catch (const DomainError&) {
  }
  try {
    return construct(source, BundleOptions{false, false, {}}).matroid;
  } catch (const DomainError&) {
  }
  throw ValidationError("unknown instance '" + source + "' (not a file, named matroid or construction)");
}

// ---------------------------------------------------------------------------
// Jobs

namespace {

Json labels_json(const Matroid& m, const ElementSet& s) { return m.labels_of(s); }

Json minor_witness_json(const Matroid& host, const Matroid& pattern, const MinorWitness& w) {
  Json iso = Json::array();
  for (std::size_t i = 0; i < w.iso.size(); ++i)
    iso.push_back({pattern.label(static_cast<int>(i)), host.label(w.iso[i])});
  return {{"contract", labels_json(host, w.contracted)}, {"delete", labels_json(host, w.deleted)}, {"iso", iso}};
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

std::string brace(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

std::string failing(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return out;
}

Record from_checks(std::string instance, const std::vector<Check>& checks) {
  Record r{std::move(instance), Outcome::Pass, std::to_string(checks.size()) + " checks", nullptr, 0};
  if (!all_passed(checks)) {
    r.result = Outcome::Fail;
    r.detail = failing(checks);
    r.witness = checks_json(checks);
  }
  return r;
}

class Runner {
 public:
  explicit Runner(const JobConfig& c) : cfg_(c) {
    if (cfg_.workers < 1) throw ValidationError("workers must be positive");
    if (cfg_.bound < 0 || cfg_.graph_bound < 0) throw ValidationError("bounds must be positive");
    if (cfg_.catalog_dir.empty()) cfg_.catalog_dir = default_catalog_dir();
    if (cfg_.node_budget) {
      ropt_.minor.node_budget = cfg_.node_budget;
      mopt_.node_budget = cfg_.node_budget;
    }
    report_.job = to_string(cfg_.kind);
    report_.reproducibility["version"] = kVersion;
  }

  Report run() {
    switch (cfg_.kind) {
      case JobKind::Thm12: thm12(); break;
      case JobKind::Thm13: thm13(); break;
      case JobKind::Thm14: thm14(); break;
      case JobKind::Remark: bundles({"remark_graph(6,2)"}, false); break;
      case JobKind::Sharpness: bundles({"sharp_graph(14)", "sharp_affine(6)", "sharp_pg(6,4)"}, true); break;
      case JobKind::LemmaSuite: lemmas(); break;
      case JobKind::KernelSuite: report_.records = detail::kernel_suite_records(cfg_.workers); break;
      case JobKind::CatalogBuild: catalog_build(); break;
      case JobKind::MinorQuery: minor_query(); break;
      case JobKind::Chain: chain(); break;
    }
    // Only settings that can change the outcome go into the report.
    Json c = config_json(cfg_);
    c.erase("workers");
    c.erase("catalog_dir");
    c.erase("force_regen");
    report_.config = c;
    return std::move(report_);
  }

 private:
  JobConfig cfg_;
  RoundedOptions ropt_;
  MinorOptions mopt_;
  Report report_;

  int bound_or(int fallback) {
    if (!cfg_.bound) cfg_.bound = fallback;
    return cfg_.bound;
  }

  std::vector<CatalogEntry> catalog(CatalogKind kind, int bound) {
    auto entries = load_or_build(kind, bound, cfg_.catalog_dir, cfg_.force_regen, cfg_.workers);
    const std::string name = to_string(kind) + "-b" + std::to_string(bound);
    report_.reproducibility["catalogs"][name] = {{"entries", entries.size()},
                                                  {"fingerprint", fingerprint(catalog_text(kind, bound, entries))}};
    return entries;
  }

  std::vector<std::string> patterns(std::vector<std::string> fallback) {
    auto p = cfg_.instances.empty() ? fallback : cfg_.instances;
    report_.reproducibility["patterns"] = p;
    return p;
  }

  // Runs one unit of work per index; budget errors become budget records.
  template <class F>
  void sweep(std::size_t n, const std::function<std::string(std::size_t)>& name, F&& f) {
    std::vector<std::vector<Record>> parts(n);
    detail::parallel_for(n, cfg_.workers, [&](std::size_t i) {
      const auto start = std::chrono::steady_clock::now();
      try {
        f(i, parts[i]);
      } catch (const BudgetError& e) {
        parts[i].push_back(Record{name(i), Outcome::Budget, e.what(), nullptr, 0});
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (auto& r : parts[i]) r.seconds = secs / static_cast<double>(parts[i].size());
    });
    for (auto& p : parts)
      for (auto& r : p) report_.records.push_back(std::move(r));
  }

  // Runs f for every (catalog entry, pattern, triangle) where the entry has
  // an N-minor.
  void triangle_sweep(const std::function<Record(const Matroid&, const Matroid&, const ElementSet&, std::string)>& f) {
    const int bound = bound_or(10);
    const auto entries = catalog(CatalogKind::Binary3c, bound);
    const auto pats = patterns({"MK4", "F7", "F7*", "MW4"});
    std::vector<Matroid> pm;
    for (const auto& p : pats) pm.push_back(resolve_instance(p));
    const std::string prefix = to_string(CatalogKind::Binary3c) + "-b" + std::to_string(bound) + "#";
    auto name = [&](std::size_t i) {
      return prefix + std::to_string(i / pm.size()) + "/" + pats[i % pm.size()];
    };
    sweep(entries.size() * pm.size(), name, [&](std::size_t i, std::vector<Record>& out) {
      const Matroid& m = entries[i / pm.size()].matroid;
      const Matroid& n = pm[i % pm.size()];
      const auto has = find_minor(m, n, mopt_);
      if (has.status == SearchStatus::Budget) {
        out.push_back(Record{name(i), Outcome::Budget, has.note, nullptr, 0});
        return;
      }
      if (!has.found()) return;
      for (const auto& t : triangles(m)) {
        const std::string inst = name(i) + "/T=" + brace(m.labels_of(t));
        try {
          out.push_back(f(m, n, t, inst));
        } catch (const BudgetError& e) {
          out.push_back(Record{inst, Outcome::Budget, e.what(), nullptr, 0});
        }
      }
    });
  }

  void thm12() {
    triangle_sweep([&](const Matroid& m, const Matroid& n, const ElementSet& t, std::string inst) {
      const auto w = verify_thm_binary(m, n, t, ropt_);
      Record r{std::move(inst), Outcome::Fail, w.note, nullptr, 0};
      if (!w.found) {
        r.witness = {{"route", w.route}, {"note", w.note}};
        return r;
      }
      // Re-check the witness independently of the search.
      const Matroid& h = w.host;
      const ElementSet th = h.set(m.labels_of(t));
      const ElementSet outside = (w.witness.contracted | w.witness.deleted) - th;
      const Matroid np = minor(h, w.witness.contracted, w.witness.deleted);
      const bool ok = outside.empty() && is_circuit(h, th) && is_3connected(h, ropt_.connectivity) &&
                      isomorphism(n, np, mopt_).has_value();
      r.result = ok ? Outcome::Pass : Outcome::Fail;
      r.detail = "M' = M/" + brace(m.labels_of(w.contracted)) + "\\" + brace(m.labels_of(w.deleted)) + ", N' = M'/" +
                 brace(h.labels_of(w.witness.contracted)) + "\\" + brace(h.labels_of(w.witness.deleted)) + " (" +
                 w.route + ")";
      r.witness = {{"host_contract", labels_json(m, w.contracted)},
                   {"host_delete", labels_json(m, w.deleted)},
                   {"minor", minor_witness_json(h, n, w.witness)}};
      return r;
    });
  }

  void thm13() {
    triangle_sweep([&](const Matroid& m, const Matroid& n, const ElementSet& t, std::string inst) {
      const auto rep = minimal_triangle_host(m, n, t, exhaustive_oracle(), ropt_);
      std::vector<Check> all = rep.classification.checks;
      all.insert(all.end(), rep.checks.begin(), rep.checks.end());
      Record r = from_checks(std::move(inst), all);
      const std::string kase = to_string(rep.classification.kase);
      r.detail = "kase " + kase + ", host " + std::to_string(rep.host.size()) + " elements" +
                 (r.result == Outcome::Fail ? ": " + r.detail : "");
      Json w = {{"kase", kase},
                {"host_contract", labels_json(m, rep.contracted)},
                {"host_delete", labels_json(m, rep.deleted)}};
      if (rep.classification.special) w["special"] = rep.host.label(*rep.classification.special);
      if (r.result == Outcome::Fail) w["checks"] = checks_json(all);
      r.witness = std::move(w);
      return r;
    });
  }

  void thm14() {
    const int bound = bound_or(8);
    const auto entries = catalog(CatalogKind::Graphs3c, bound);
    const auto pats = patterns({"MK5"});
    if (pats.size() != 1) throw ValidationError("thm14 takes one pattern");
    const Matroid k5 = resolve_instance(pats.front());
    const std::string prefix = to_string(CatalogKind::Graphs3c) + "-b" + std::to_string(bound) + "#";
    auto name = [&](std::size_t i) { return prefix + std::to_string(i); };
    sweep(entries.size(), name, [&](std::size_t i, std::vector<Record>& out) {
      const Matroid& m = entries[i].matroid;
      const auto has = find_minor(m, k5, mopt_);
      if (has.status == SearchStatus::Budget) {
        out.push_back(Record{name(i), Outcome::Budget, has.note, nullptr, 0});
        return;
      }
      if (!has.found()) return;
      const auto tris = triangles(m);
      Json bad = Json::array();
      bool budget = false;
      for (const auto& t : tris) {
        const auto r = find_minor_using_triangle(m, k5, t, mopt_);
        if (r.found()) continue;
        budget = budget || r.status == SearchStatus::Budget;
        bad.push_back({{"triangle", labels_json(m, t)}, {"status", to_string(r.status)}, {"note", r.note}});
      }
      Record rec{name(i), Outcome::Pass, "", nullptr, 0};
      rec.detail = std::to_string(tris.size() - bad.size()) + "/" + std::to_string(tris.size()) +
                   " triangles lie in a " + pats.front() + "-minor (" + std::to_string(m.size()) + " edges)";
      if (!bad.empty()) {
        rec.result = budget ? Outcome::Budget : Outcome::Fail;
        rec.witness = {{"graph", descriptor(m)}, {"triangles", bad}};
      }
      out.push_back(std::move(rec));
    });
  }

  void bundles(std::vector<std::string> fallback, bool classify) {
    const auto names = patterns(std::move(fallback));
    sweep(names.size(), [&](std::size_t i) { return names[i]; }, [&](std::size_t i, std::vector<Record>& out) {
      BundleOptions o;
      o.classify = classify;
      o.rounded = ropt_;
      const auto b = construct(names[i], o);
      for (const auto& c : b.claims)
        out.push_back(Record{b.name + "/" + c.name, c.passed ? Outcome::Pass : Outcome::Fail, c.detail, nullptr, 0});
    });
  }

  void lemmas() {
    const int bb = bound_or(10);
    if (!cfg_.graph_bound) cfg_.graph_bound = 7;
    report_.reproducibility["patterns"] = Json::array();
    lemma_catalog(CatalogKind::Binary3c, bb);
    lemma_catalog(CatalogKind::Graphs3c, cfg_.graph_bound);
  }

  void lemma_catalog(CatalogKind kind, int bound) {
    const auto entries = catalog(kind, bound);
    const std::string prefix = to_string(kind) + "-b" + std::to_string(bound) + "#";
    sweep(entries.size(), [&](std::size_t i) { return prefix + std::to_string(i); },
          [&](std::size_t i, std::vector<Record>& out) {
            const Matroid& m = entries[i].matroid;
            out.push_back(from_checks(prefix + std::to_string(i) + "/bixby", lemma_bixby(m, ropt_)));
            out.push_back(from_checks(prefix + std::to_string(i) + "/w38-cor", lemma_w38_cor(m, ropt_)));
          });
    // Pairs N < M by element count with N a minor of M.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < entries.size(); ++a)
      for (std::size_t b = 0; b < entries.size(); ++b)
        if (entries[b].matroid.size() < entries[a].matroid.size()) pairs.emplace_back(a, b);
    auto pname = [&](std::size_t i) {
      return prefix + std::to_string(pairs[i].first) + ">" + std::to_string(pairs[i].second);
    };
    sweep(pairs.size(), pname, [&](std::size_t i, std::vector<Record>& out) {
      const Matroid& m = entries[pairs[i].first].matroid;
      const Matroid& n = entries[pairs[i].second].matroid;
      const auto has = find_minor(m, n, mopt_);
      if (has.status == SearchStatus::Budget) {
        out.push_back(Record{pname(i), Outcome::Budget, has.note, nullptr, 0});
        return;
      }
      if (!has.found()) return;
      const std::string p = pname(i);
      out.push_back(from_checks(p + "/costalonga", lemma_costalonga(m, n, ropt_)));
      out.push_back(from_checks(p + "/wcomut", lemma_wcomut(m, n, ropt_)));
      out.push_back(from_checks(p + "/gap4", lemma_gap4(m, n, ropt_)));
      out.push_back(chain_record(p + "/splitter-chain", m, n));
    });
  }

  Record chain_record(std::string inst, const Matroid& m, const Matroid& n) {
    const auto c = splitter_chain(m, n, ropt_);
    Record r{std::move(inst), Outcome::Pass, c.note, nullptr, 0};
    switch (c.status) {
      case ChainStatus::Found: {
        Json steps = Json::array();
        for (const auto& s : c.chain->steps) steps.push_back({to_string(s.op), m.label(s.element)});
        r.detail = std::to_string(c.chain->steps.size()) + " steps, every prefix 3-connected";
        r.witness = {{"steps", steps}};
        if (!all_passed(c.checks)) {
          r.result = Outcome::Fail;
          r.detail = failing(c.checks);
          r.witness["checks"] = checks_json(c.checks);
        }
        break;
      }
      case ChainStatus::Hypothesis:
        r.result = Outcome::Skipped;
        r.detail = "hypothesis not met: " + c.note;
        break;
      case ChainStatus::NotFound:
        r.result = Outcome::Fail;
        r.witness = {{"checks", checks_json(c.checks)}};
        break;
    }
    return r;
  }

  void catalog_build() {
    auto kinds = cfg_.instances.empty() ? std::vector<std::string>{"graphs3c", "binary3c"} : cfg_.instances;
    for (const auto& k : kinds) {
      if (k != "graphs3c" && k != "binary3c") throw ValidationError("unknown catalog kind '" + k + "'");
      const CatalogKind kind = k == "graphs3c" ? CatalogKind::Graphs3c : CatalogKind::Binary3c;
      const int bound = cfg_.bound ? cfg_.bound : (kind == CatalogKind::Graphs3c ? 8 : 10);
      const auto entries = catalog(kind, bound);
      std::map<int, int> counts;
      for (const auto& e : entries)
        ++counts[kind == CatalogKind::Graphs3c ? entry_graph(e).vertices : e.matroid.size()];
      Json per = Json::object();
      std::string detail = std::to_string(entries.size()) + " entries;";
      for (auto [size, count] : counts) {
        per[std::to_string(size)] = count;
        detail += " " + std::to_string(size) + ":" + std::to_string(count);
      }
      report_.records.push_back(Record{k + "-b" + std::to_string(bound), Outcome::Pass, detail,
                                       {{"by_" + std::string(kind == CatalogKind::Graphs3c ? "vertices" : "elements"), per}},
                                       0});
    }
  }

  std::pair<Matroid, Matroid> host_and_pattern() {
    if (cfg_.instances.size() != 2) throw ValidationError(to_string(cfg_.kind) + " needs a host and a pattern");
    report_.reproducibility["instances"] = cfg_.instances;
    return {resolve_instance(cfg_.instances[0]), resolve_instance(cfg_.instances[1])};
  }

  void minor_query() {
    const auto [host, pat] = host_and_pattern();
    const auto r = find_minor(host, pat, mopt_);
    Record rec{cfg_.instances[0] + ">" + cfg_.instances[1], Outcome::Pass, to_string(r.status) + " (" + r.note + ")",
               nullptr, 0};
    if (r.witness) rec.witness = minor_witness_json(host, pat, *r.witness);
    if (r.status == SearchStatus::Budget)
      rec.result = Outcome::Budget;
    else if (!cfg_.expect.empty() && (cfg_.expect == "present") != r.found())
      rec.result = Outcome::Fail;
    report_.records.push_back(std::move(rec));
  }

  void chain() {
    const auto [host, pat] = host_and_pattern();
    try {
      report_.records.push_back(chain_record(cfg_.instances[0] + ">" + cfg_.instances[1], host, pat));
    } catch (const BudgetError& e) {
      report_.records.push_back(Record{cfg_.instances[0] + ">" + cfg_.instances[1], Outcome::Budget, e.what(), nullptr, 0});
    }
  }
};

}  // namespace

Report run(const JobConfig& config) { return Runner(config).run(); }

}  // namespace trimat
