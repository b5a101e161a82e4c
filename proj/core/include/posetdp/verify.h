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

// Property suites with JSON reports, and the histogram machinery they share
// with the acceptance tests.

#ifndef POSETDP_VERIFY_H_
#define POSETDP_VERIFY_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdp/analysis.h"
#include "posetdp/bipartition.h"
#include "posetdp/poset.h"
#include "posetdp/rng.h"
#include "posetdp/triangulation.h"

namespace posetdp {

// Finds the triangulation simplex containing a point of the poset ball.
// Simplices are indexed in EnumerateBipartitions order.
class SimplexLocator {
 public:
  explicit SimplexLocator(const RootedPoset& rooted,
                          int cap = kDefaultEnumerationCap);

  int size() const { return static_cast<int>(bipartitions_.size()); }
  const std::vector<ExtendedBipartition>& bipartitions() const {
    return bipartitions_;
  }
  // Index of `eb`, or -1.
  int IndexOf(const ExtendedBipartition& eb) const;
  // Index of the first simplex whose barycentric coordinates are all
  // >= -tolerance, or -1 when the point lies outside the ball.
  int Locate(std::span<const double> point, double tolerance = 1e-12) const;

 private:
  int d_;
  std::vector<ExtendedBipartition> bipartitions_;
  // Per simplex, the inverse of the (d+1) x (d+1) matrix whose columns are
  // the homogenised vertices (1, v_k), row-major.
  std::vector<std::vector<double>> inverses_;
};

// Histogram over the simplices of the bipartitions drawn by `policy`.
std::vector<std::uint64_t> SamplerHistogram(const SimplexLocator& locator,
                                            const Poset& stripped,
                                            MaximalPolicy policy,
                                            std::uint64_t draws,
                                            const Stream& rng);

// Histogram over the simplices of `accepted` rejection samples from
// [-1, 1]^d. Also reports the number of proposals used.
std::vector<std::uint64_t> RejectionHistogram(const SimplexLocator& locator,
                                              BallFamily family, int d,
                                              std::uint64_t accepted,
                                              const Stream& rng,
                                              std::uint64_t* proposals);

// The three-element poset c <= v with w incomparable to both; sixteen
// extended bipartitions.
Poset CounterexamplePoset();

struct PolicyUniformity {
  MaximalPolicy policy;
  std::vector<std::uint64_t> histogram;  // EnumerateBipartitions order
  TestResult test;
  double max_over_min = 0.0;
};
std::vector<PolicyUniformity> CounterexampleStudy(std::uint64_t draws,
                                                  std::uint64_t seed);
std::string CounterexampleReportJson(std::uint64_t draws, std::uint64_t seed);

struct Check {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, double>> stats;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<Check> checks;
  bool passed() const;
  std::string ToJson() const;
};

std::vector<std::string> SuiteNames();
// `trials` scales the suite's sample sizes; 0 selects the defaults.
// Throws ValidationError for an unknown suite.
SuiteReport RunSuite(std::string_view suite, std::uint64_t seed,
                     std::uint64_t trials = 0);

}  // namespace posetdp

#endif  // POSETDP_VERIFY_H_
