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
// trimat: command-line driver for catalogs, sweeps and single queries.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trimat/catalog.hpp"
#include "trimat/constructions.hpp"
#include "trimat/error.hpp"
#include "trimat/io.hpp"
#include "trimat/jobs.hpp"

namespace {

constexpr int kUsage = 3;

struct Common {
  int bound = 0;
  int graph_bound = 0;
  int workers = 1;
  std::string format = "text";
  std::string catalog_dir;
  bool force_regen = false;
  std::string output;
  std::uint64_t node_budget = 0;
  std::vector<std::string> patterns;
};

void add_common(CLI::App* app, Common& c, bool with_bounds) {
  if (with_bounds) {
    app->add_option("--bound", c.bound, "Catalog bound (binary elements or graph vertices)")->check(CLI::PositiveNumber);
    app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--catalog-dir", c.catalog_dir, "Catalog directory (default $TRIMAT_CATALOG_DIR or ./catalogs)");
    app->add_flag("--force-regen", c.force_regen, "Rebuild catalogs even when a cached file exists");
  }
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
  app->add_option("--node-budget", c.node_budget, "Search-node budget for minor searches")->check(CLI::PositiveNumber);
}

trimat::JobConfig config_from(const Common& c, trimat::JobKind kind) {
  trimat::JobConfig cfg;
  cfg.kind = kind;
  cfg.bound = c.bound;
  cfg.graph_bound = c.graph_bound;
  cfg.workers = c.workers;
  cfg.catalog_dir = c.catalog_dir;
  cfg.force_regen = c.force_regen;
  cfg.node_budget = c.node_budget;
  cfg.instances = c.patterns;
  return cfg;
}

int finish(const trimat::Report& r, const Common& c) {
  const std::string text = trimat::emit(r, c.format == "json" ? trimat::ReportFormat::Json : trimat::ReportFormat::Text);
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    out << text;
    if (!out) throw trimat::ValidationError("cannot write " + c.output);
  }
  return trimat::exit_code(r);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw trimat::ValidationError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid minors, triangle hosts and roundedness sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", trimat::kVersion);

  // catalog build
  Common cat;
  std::string kind = "all";
  auto* catalog = app.add_subcommand("catalog", "Catalog maintenance")->require_subcommand(1);
  auto* build = catalog->add_subcommand("build", "Generate (or load) catalogs and report their counts");
  build->add_option("--kind", kind, "Which catalog")->check(CLI::IsMember({"graphs", "binary", "all"}));
  add_common(build, cat, true);

  // verify <job>
  Common ver;
  std::string job;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("job", job, "thm12 | thm13 | thm14 | remark | sharpness | lemmas | kernel")
      ->required()
      ->check(CLI::IsMember({"thm12", "thm13", "thm14", "remark", "sharpness", "lemmas", "kernel"}));
  add_common(verify, ver, true);
  verify->add_option("--graph-bound", ver.graph_bound, "Graph catalog bound for the lemma suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--pattern,--instance", ver.patterns,
                     "Patterns for thm12/13/14, or constructions for remark/sharpness (repeatable)");

  // minor / chain
  Common mq;
  std::string host, pattern, expect;
  auto* minor = app.add_subcommand("minor", "Search for a pattern minor in a host");
  minor->add_option("host", host, "Descriptor file, named matroid or construction")->required();
  minor->add_option("pattern", pattern, "Descriptor file, named matroid or construction")->required();
  minor->add_option("--expect", expect, "Fail unless the answer matches")->check(CLI::IsMember({"present", "absent"}));
  add_common(minor, mq, false);

  Common ch;
  auto* chain = app.add_subcommand("chain", "Find a splitter chain from a host down to a pattern");
  chain->add_option("host", host, "Descriptor file, named matroid or construction")->required();
  chain->add_option("pattern", pattern, "Descriptor file, named matroid or construction")->required();
  add_common(chain, ch, false);

  // construct <name>
  Common co;
  std::string cname, write_to;
  bool classify = false, no_validate = false;
  auto* construct = app.add_subcommand("construct", "Build a named construction and check its claims");
  construct->add_option("name", cname, "remark_graph | sharp_graph | sharp_affine | sharp_pg, optionally with (args)")
      ->required();
  construct->add_flag("--classify", classify, "Also run the minimal-host classification claims");
  construct->add_flag("--no-validate", no_validate, "Skip the claim validators");
  construct->add_option("--write", write_to, "Write the matroid descriptor to this file");
  add_common(construct, co, false);

  // run <config>
  Common rc;
  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a job described by a config file");
  run->add_option("config", config_path, "Config file (json)")->required();
  run->add_option("--format", rc.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--output,-o", rc.output, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (build->parsed()) {
      auto cfg = config_from(cat, trimat::JobKind::CatalogBuild);
      if (kind != "all") cfg.instances = {kind + "3c"};
      return finish(trimat::run(cfg), cat);
    }
    if (verify->parsed()) {
      auto cfg = config_from(ver, trimat::job_kind(job));
      return finish(trimat::run(cfg), ver);
    }
    if (minor->parsed()) {
      auto cfg = config_from(mq, trimat::JobKind::MinorQuery);
      cfg.instances = {host, pattern};
      cfg.expect = expect;
      return finish(trimat::run(cfg), mq);
    }
    if (chain->parsed()) {
      auto cfg = config_from(ch, trimat::JobKind::Chain);
      cfg.instances = {host, pattern};
      return finish(trimat::run(cfg), ch);
    }
    if (construct->parsed()) {
      trimat::BundleOptions o;
      o.validate = !no_validate;
      o.classify = classify;
      const auto b = trimat::construct(cname, o);
      if (!write_to.empty()) {
        std::ofstream out(write_to, std::ios::binary);
        out << trimat::serialize(b.matroid, 1) << "\n";
        if (!out) throw trimat::ValidationError("cannot write " + write_to);
      }
      trimat::Report r;
      r.job = "construct";
      r.config = {{"name", cname}, {"validate", o.validate}, {"classify", o.classify}};
      r.reproducibility["version"] = trimat::kVersion;
      r.reproducibility["elements"] = b.matroid.size();
      r.reproducibility["rank"] = b.matroid.rank();
      for (const auto& c : b.claims)
        r.records.push_back(
            {b.name + "/" + c.name, c.passed ? trimat::Outcome::Pass : trimat::Outcome::Fail, c.detail, nullptr, 0});
      return finish(r, co);
    }
    if (run->parsed()) {
      const auto cfg = trimat::parse_config(read_file(config_path));
      return finish(trimat::run(cfg), rc);
    }
  } catch (const trimat::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const trimat::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const trimat::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  }
  return kUsage;
}
