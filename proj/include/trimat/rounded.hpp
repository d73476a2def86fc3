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

#ifndef TRIMAT_ROUNDED_HPP
#define TRIMAT_ROUNDED_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trimat/matroid.hpp"
#include "trimat/minors.hpp"
#include "trimat/structure.hpp"

namespace trimat {

/// Minor test used by the host search and the classification. The default
/// implementation is the exhaustive search of the minors module; a
/// construction can substitute a restricted exact test when the full search
/// is out of reach.
class MinorOracle {
 public:
  virtual ~MinorOracle() = default;
  virtual MinorResult find(const Matroid& host, const Matroid& pattern) const;
  /// Element i of b is sent to element map[i] of a, or none when a and b
  /// are not isomorphic.
  virtual std::optional<std::vector<int>> isomorphic(const Matroid& a, const Matroid& b) const;
  virtual std::string name() const { return "exhaustive"; }
};

const MinorOracle& exhaustive_oracle();

/// One named yes/no verification with a short evidence string.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Check>& checks);

enum class Kase { Contained, CaseA, CaseB, None };
std::string to_string(Kase k);

struct RoundedOptions {
  ConnectivityOptions connectivity;
  MinorOptions minor;
  /// Distinct minors visited by the host descent before BudgetError.
  std::size_t max_visited = 200'000;
};

/// Which alternative of the minimal-host theorem holds, with every clause
/// of that alternative checked.
struct Classification {
  Kase kase = Kase::None;
  /// x for CaseA, y for CaseB (index into the classified matroid).
  std::optional<int> special;
  /// N' = M / contracted \ deleted with the stated containment.
  std::optional<MinorWitness> witness;
  std::vector<Check> checks;
  bool ok() const { return kase != Kase::None && all_passed(checks); }
};

struct MinimalHostReport {
  Matroid host;
  /// host = M / contracted \ deleted.
  ElementSet contracted;
  ElementSet deleted;
  /// T in host indices.
  ElementSet triangle;
  Classification classification;
  /// Minimality and the numeric conclusions.
  std::vector<Check> checks;
  bool ok() const { return classification.ok() && all_passed(checks); }
};

/// True when m is 3-connected, t is a triangle of m and m has an n-minor.
bool has_triangle_property(const Matroid& m, const Matroid& n, const ElementSet& t, const MinorOracle& oracle,
                           const RoundedOptions& opt = {});

/// Descends from m through single deletions and contractions that keep the
/// property until no move keeps it, then classifies the host.
MinimalHostReport minimal_triangle_host(const Matroid& m, const Matroid& n, const ElementSet& t,
                                        const MinorOracle& oracle = exhaustive_oracle(),
                                        const RoundedOptions& opt = {});

/// Every minor-minimal host below m, in the order of first discovery.
std::vector<MinimalHostReport> all_minimal_triangle_hosts(const Matroid& m, const Matroid& n, const ElementSet& t,
                                                          const MinorOracle& oracle = exhaustive_oracle(),
                                                          const RoundedOptions& opt = {});

/// Classification of a host assumed minor-minimal; minimality is re-checked
/// and recorded among the checks.
Classification classify_minimal(const Matroid& m, const Matroid& n, const ElementSet& t,
                                const MinorOracle& oracle = exhaustive_oracle(), const RoundedOptions& opt = {});

/// Host M' (a minor of M with T inside) and an N-minor N' of M' with
/// E(M') - E(N') inside T.
struct BinaryWitness {
  bool found = false;
  Matroid host;
  ElementSet contracted;
  ElementSet deleted;
  MinorWitness witness;
  /// "host-search" or "small-pattern".
  std::string route;
  std::string note;
};

BinaryWitness verify_thm_binary(const Matroid& m, const Matroid& n, const ElementSet& t,
                                const RoundedOptions& opt = {});

struct RoundedFailure {
  std::size_t index = 0;
  ElementSet triangle;
  /// Found nothing, or gave up on the budget.
  SearchStatus status = SearchStatus::Absent;
};

/// (M, T) pairs where M has a member of the family as a minor but none of
/// them with T as a triangle.
std::vector<RoundedFailure> check_triangle_rounded(const std::vector<Matroid>& catalog,
                                                   const std::vector<Matroid>& family,
                                                   const MinorOptions& opt = {});

enum class ChainOp { Contract, Delete };
std::string to_string(ChainOp op);

struct ChainStep {
  int element = 0;
  ChainOp op = ChainOp::Delete;
};

struct ChainCertificate {
  /// Elements are indices of M.
  std::vector<ChainStep> steps;
  /// Pattern element i is sent to iso[i] in the last matroid of the chain.
  std::vector<int> iso;
};

enum class ChainStatus { Found, Hypothesis, NotFound };
std::string to_string(ChainStatus s);

struct ChainResult {
  ChainStatus status = ChainStatus::NotFound;
  std::optional<ChainCertificate> chain;
  std::vector<Check> checks;
  std::string note;
};

/// A chain of 3-connected single-element minors from m down to a copy of n
/// satisfying the independence and vertical-connectivity conditions.
ChainResult splitter_chain(const Matroid& m, const Matroid& n, const RoundedOptions& opt = {});

/// Largest k such that m has a wheel (or whirl) minor of rank k, searched
/// up to the rank of m; 0 when there is none.
int largest_wheel_minor(const Matroid& m, bool whirl, const MinorOptions& opt = {});

/// Elements x with si(M/x) 3-connected and having an n-minor.
ElementSet contract_candidates(const Matroid& m, const Matroid& n, const RoundedOptions& opt = {});
/// Elements e with co(M\e) 3-connected and having an n-minor.
ElementSet delete_candidates(const Matroid& m, const Matroid& n, const RoundedOptions& opt = {});

/// Cited-lemma property checks on one instance. Each returns one check per
/// applicable configuration (empty when the lemma does not apply).
std::vector<Check> lemma_bixby(const Matroid& m, const RoundedOptions& opt = {});
std::vector<Check> lemma_w38_cor(const Matroid& m, const RoundedOptions& opt = {});
std::vector<Check> lemma_costalonga(const Matroid& m, const Matroid& n, const RoundedOptions& opt = {});
std::vector<Check> lemma_wcomut(const Matroid& m, const Matroid& n, const RoundedOptions& opt = {});
std::vector<Check> lemma_gap4(const Matroid& m, const Matroid& n, const RoundedOptions& opt = {});

}  // namespace trimat

#endif  // TRIMAT_ROUNDED_HPP
