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
// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
//
//   trimat_acceptance [catalog-dir] [report-dir]

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "trimat/error.hpp"
#include "trimat/jobs.hpp"

namespace {

using trimat::JobConfig;
using trimat::JobKind;
using trimat::Outcome;
using trimat::Report;

struct Criterion {
  int id;
  std::string title;
  JobConfig config;
  // Extra conditions beyond "no failures, no budget-incomplete records".
  std::function<std::string(const Report&)> extra;
};

JobConfig job(JobKind kind, int bound = 0, std::vector<std::string> instances = {}) {
  JobConfig c;
  c.kind = kind;
  c.bound = bound;
  c.instances = std::move(instances);
  return c;
}

const trimat::Record* find(const Report& r, const std::string& instance) {
  for (const auto& rec : r.records)
    if (rec.instance == instance) return &rec;
  return nullptr;
}

std::string require_pass(const Report& r, const std::vector<std::string>& instances) {
  for (const auto& i : instances) {
    const auto* rec = find(r, i);
    if (!rec) return "missing record " + i;
    if (rec->result != Outcome::Pass) return i + ": " + rec->detail;
  }
  return {};
}

std::string verdict(const Report& r, const Criterion& c) {
  const auto s = r.summary();
  if (s.total() == 0) return "no records";
  if (s.fail) {
    for (const auto& rec : r.records)
      if (rec.result == Outcome::Fail) return std::to_string(s.fail) + " failure(s), first " + rec.instance + ": " + rec.detail;
  }
  if (s.budget) return std::to_string(s.budget) + " budget-incomplete record(s)";
  return c.extra ? c.extra(r) : std::string{};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string catalog_dir = argc > 1 ? argv[1] : trimat::default_catalog_dir();
  const std::filesystem::path report_dir = argc > 2 ? argv[2] : "acceptance-reports";
  std::filesystem::create_directories(report_dir);

  std::vector<Criterion> criteria = {
      {1, "binary sweep: E(M')-E(N') inside T, N in {M(K4),F7,F7*,M(W4)}, <= 10 elements", job(JobKind::Thm12, 10),
       [](const Report& r) {
         return r.reproducibility["catalogs"]["binary3c-b10"]["entries"] == 38 ? "" : "unexpected catalog size";
       }},
      {2, "K5 sweep: every triangle of a 3-connected simple graph (<= 8 vertices) lies in a K5-minor",
       job(JobKind::Thm14, 8),
       [](const Report& r) {
         return r.reproducibility["catalogs"]["graphs3c-b8"]["entries"] == 2545 ? "" : "unexpected catalog size";
       }},
      {3, "remark n=6: G\\xz/xy = K6 and no K6-minor uses T", job(JobKind::Remark, 0, {"remark_graph(6,2)"}),
       [](const Report& r) {
         return require_pass(r, {"remark_graph(6,2)/contract-delete-is-Kn", "remark_graph(6,2)/no-Kn-minor-uses-T"});
       }},
      {4, "R10 has no M(K5)-minor", job(JobKind::MinorQuery, 0, {"R10", "MK5"}),
       [](const Report& r) {
         const auto& d = r.records.front().detail;
         return d.rfind("absent (exhaustive", 0) == 0 ? "" : "got " + d;
       }},
      {5, "sharpness bundles: validators and Contained / CaseA / CaseB classifications",
       job(JobKind::Sharpness, 0, {"sharp_graph(14)", "sharp_affine(6)", "sharp_pg(6,4)"}),
       [](const Report& r) {
         return require_pass(r, {"sharp_graph(14)/minimal-host-contained", "sharp_affine(6)/minimal-host-caseA-N_ab",
                                 "sharp_affine(6)/minimal-host-caseA-N_T",
                                 "sharp_pg(6,4)/minimal-host-caseB-N1", "sharp_pg(6,4)/minimal-host-caseB-N2"});
       }},
      {6, "lemma suites over binary (<= 10 elements) and graph (<= 7 vertices) catalogs",
       [] {
         auto c = job(JobKind::LemmaSuite, 10);
         c.graph_bound = 7;
         return c;
       }(),
       {}},
      {7, "kernel property suite", job(JobKind::KernelSuite), {}},
  };

  bool all_ok = true;
  std::vector<std::string> first_json;
  auto run_all = [&](int workers, bool print) {
    std::vector<std::string> jsons;
    for (auto& c : criteria) {
      c.config.catalog_dir = catalog_dir;
      c.config.workers = workers;
      const auto start = std::chrono::steady_clock::now();
      std::string why;
      Report r;
      try {
        r = trimat::run(c.config);
        why = verdict(r, c);
      } catch (const std::exception& e) {
        why = std::string("error: ") + e.what();
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const std::string json = trimat::emit(r, trimat::ReportFormat::Json);
      jsons.push_back(json);
      if (!print) continue;
      std::ofstream(report_dir / ("criterion-" + std::to_string(c.id) + ".json"), std::ios::binary) << json;
      const auto s = r.summary();
      std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << s.total()
                << " records, " << s.fail << " failures, " << s.budget << " budget, " << s.skipped << " skipped, "
                << static_cast<int>(secs) << "s" << (why.empty() ? "" : "; " + why) << std::endl;
      all_ok = all_ok && why.empty();
    }
    return jsons;
  };

  first_json = run_all(1, true);
  // Criterion 8: a second run, on a different worker count, must reproduce
  // every json report byte for byte.
  const auto second = run_all(2, false);
  std::string diff;
  for (std::size_t i = 0; i < criteria.size(); ++i)
    if (first_json[i] != second[i]) diff += (diff.empty() ? "" : ",") + std::to_string(criteria[i].id);
  std::cout << (diff.empty() ? "PASS" : "FAIL") << " criterion 8 (determinism: two runs of criteria 1-7 give "
            << "byte-identical json)" << (diff.empty() ? "" : ": differs for criteria " + diff) << std::endl;
  all_ok = all_ok && diff.empty();
  return all_ok ? 0 : 1;
}
