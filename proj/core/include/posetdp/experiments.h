// Copyright 2026 The posetdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded batch experiments comparing poset-ball noise with l_inf noise.
//
// Every trial draws from its own child stream, so results do not depend on
// the thread count, and means are formed with pairwise summation.

#ifndef POSETDP_EXPERIMENTS_H_
#define POSETDP_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetdp/bipartition.h"
#include "posetdp/poset.h"
#include "posetdp/rng.h"

namespace posetdp {

struct RatioOptions {
  std::uint64_t trials = 100;
  // Replace the Monte Carlo l_inf denominator by d / 3.
  bool analytic_denominator = false;
  std::optional<MaximalPolicy> policy;  // DefaultPolicy(d) when unset
  int exact_cap = kDefaultExactCap;
  int threads = 1;
};

struct RatioRecord {
  std::string poset_hash;
  int d = 0;
  int depth = 0;
  int reduced_edge_count = 0;
  std::uint64_t trials = 0;
  double poset_ball_mean_sq = 0.0;
  double linf_mean_sq = 0.0;
  double ratio = 0.0;
};

// Mean squared l_2 norm of root-dropped uniform poset-ball samples over the
// same for uniform samples of [-1, 1]^d. Throws ValidationError for d = 0.
RatioRecord RatioExperiment(const Poset& poset, const RatioOptions& options,
                            const Stream& rng);

struct LpCurveRow {
  int d = 0;
  double p = 0.0;
  double scaled_expected = 0.0;
};
// The exponent grid {1, 1.5, 2, 3, 5, 10, inf}.
std::vector<double> DefaultExponentGrid();
std::vector<LpCurveRow> LpCurve(const std::vector<int>& dims,
                                const std::vector<double>& exponents);

struct SweepOptions {
  std::vector<int> dims = {2, 5, 10, 15, 20, 25, 30, 35, 40};
  int posets_per_d = 100;
  // Moves of the DAG chain; DefaultDagSteps(d) when unset.
  std::optional<std::uint64_t> dag_steps;
  RatioOptions ratio;
};

struct SweepRow {
  int d = 0;
  double mean_ratio = 0.0;
  double standard_error = 0.0;
  int n_posets = 0;
};

std::vector<SweepRow> RandomRatioSweep(const SweepOptions& options,
                                       std::uint64_t seed);

struct StructureOptions {
  int d = 10;
  int total_posets = 5000;
  int min_bucket = 100;
  std::optional<std::uint64_t> dag_steps;
  RatioOptions ratio;
};

struct StructureRow {
  std::string metric;  // "depth" or "edges"
  int bucket = 0;
  double mean_ratio = 0.0;
  int n = 0;
};

struct StructureResult {
  std::vector<StructureRow> rows;  // retained buckets only
  std::vector<RatioRecord> records;
  // Spearman correlation of per-poset ratio with each metric.
  double spearman_depth = 0.0;
  double spearman_edges = 0.0;
};

StructureResult StructureSweep(const StructureOptions& options,
                               std::uint64_t seed);

// Bundled reconstructions of the survey question posets.
std::string DefaultDataDir();
std::string NhisPosetPath(int sections, const std::string& data_dir);
Poset LoadNhisPoset(int sections, const std::string& data_dir);

// Exact-small sampling with the hard cap covers every bundled poset.
RatioOptions DefaultNhisOptions();

RatioRecord NhisExperiment(int sections, const RatioOptions& options,
                           std::uint64_t seed, const std::string& data_dir);

}  // namespace posetdp

#endif  // POSETDP_EXPERIMENTS_H_
