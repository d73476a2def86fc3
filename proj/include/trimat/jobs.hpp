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
#ifndef TRIMAT_JOBS_HPP
#define TRIMAT_JOBS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "trimat/io.hpp"

namespace trimat {

enum class JobKind { Thm12, Thm13, Thm14, Remark, Sharpness, LemmaSuite, KernelSuite, CatalogBuild, MinorQuery, Chain };
std::string to_string(JobKind k);
/// Throws ValidationError for unknown names.
JobKind job_kind(std::string_view name);

struct JobConfig {
  JobKind kind = JobKind::Thm12;
  /// Catalog bound: elements for binary catalogs, vertices for graph
  /// catalogs. 0 picks the job default.
  int bound = 0;
  /// Second bound for jobs over two catalogs (lemma suite graphs).
  int graph_bound = 0;
  int workers = 1;
  std::string catalog_dir;
  bool force_regen = false;
  /// Construction names ("sharp_pg(6,4)"), named matroids or descriptor
  /// files. Minor queries and chains take host then pattern.
  std::vector<std::string> instances;
  /// Minor queries only: "present", "absent" or empty for no expectation.
  std::string expect;
  std::uint64_t node_budget = 0;
};

/// Reads a config document; errors name the offending path.
JobConfig parse_config(std::string_view text);
Json config_json(const JobConfig& c);

enum class Outcome { Pass, Fail, Budget, Skipped };
std::string to_string(Outcome o);

struct Record {
  std::string instance;
  Outcome result = Outcome::Pass;
  std::string detail;
  /// Null when there is nothing to show.
  Json witness;
  /// Wall time; text output only, so json stays reproducible.
  double seconds = 0;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int budget = 0;
  int skipped = 0;
  int total() const { return pass + fail + budget + skipped; }
};

struct Report {
  std::string job;
  Json config = Json::object();
  Json reproducibility = Json::object();
  std::vector<Record> records;
  Summary summary() const;
};

Report run(const JobConfig& config);

enum class ReportFormat { Text, Json };
std::string emit(const Report& r, ReportFormat f);
/// Inverse of emit(r, Json); timings are not kept.
Report parse_report(std::string_view text);

/// 0 all passed, 1 some failure, 2 budget-incomplete with no failure.
int exit_code(const Report& r);

/// Host or pattern source: a descriptor file, a named matroid or a
/// construction.
Matroid resolve_instance(const std::string& source);

/// Default catalog directory: $TRIMAT_CATALOG_DIR, else "catalogs".
std::string default_catalog_dir();

inline constexpr const char* kVersion = "1.0.0";

}  // namespace trimat

#endif  // TRIMAT_JOBS_HPP
