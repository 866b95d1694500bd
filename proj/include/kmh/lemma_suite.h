// Copyright 2026 The kmh Authors
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

// Exhaustive property suites over small triangle-free graphs, and the
// seeded random-graph sweep behind `kmh verify-lemmas` and `kmh sweep`.

#ifndef KMH_LEMMA_SUITE_H_
#define KMH_LEMMA_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kmh/fermat_weber.h"
#include "kmh/reduction.h"

namespace kmh {

struct RunConfig {
  double tolerance = 1e-6;
  double weiszfeld_tol = 1e-12;
  int max_iter = 100000;
  double delta = 0.01;
  double beta = 1.0;
  std::uint64_t seed = 1;
  std::size_t brute_force_ceiling = kDefaultBruteForceCeiling;

  void Validate() const;  // throws kConfigError
  WeiszfeldOptions weiszfeld() const { return {weiszfeld_tol, max_iter}; }
};

struct SuiteResult {
  std::string id;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool skipped() const { return checked == 0; }
  bool passed() const { return failures == 0; }
};

struct LemmaReport {
  int max_edges = 0;
  std::size_t graphs = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

// Suites over graphs come from EnumerateTriangleFree(max_edges, true); the
// closed-form suites do not depend on max_edges.
LemmaReport VerifyLemmas(int max_edges, const RunConfig& config);

enum class KPolicy { kMinVc, kMaxMatch };
std::string_view KPolicyName(KPolicy policy);
KPolicy ParseKPolicy(std::string_view name);

struct SweepConfig {
  int n = 8;
  int max_degree = 4;
  int trials = 50;
  KPolicy policy = KPolicy::kMinVc;
  Objective objective = Objective::kMedian;
  std::size_t max_edges = 12;  // oracle limit
};

struct SweepRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::size_t m = 0;
  int max_degree = 0;
  int k = 0;
  std::size_t min_vc = 0;
  int k_beta = 0;
  double opt_k = 0;
  double opt_k_beta = 0;
  double yes_cost = 0;
  double no_cost_lower = 0;
  std::size_t cover_size = 0;
  bool cover_valid = false;
  double ledger_bound = 0;
  std::string procedures_path;
  bool cost_qualifies = false;  // clustering cost <= no-instance threshold
  double predicted_ceiling = 0;
  bool auto_no = false;
  bool completeness = false;  // opt_k <= yes_cost
  bool monotone = false;      // opt_k_beta <= opt_k
  bool cover_within_ceiling = false;
};

std::uint64_t TrialSeed(std::uint64_t seed, int trial);
std::vector<SweepRow> RunSweep(const SweepConfig& sweep,
                               const RunConfig& config);
std::string SweepCsv(const SweepConfig& sweep, const std::vector<SweepRow>& rows);

}  // namespace kmh

#endif  // KMH_LEMMA_SUITE_H_
