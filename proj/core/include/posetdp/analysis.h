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

// Closed forms, membership oracles and statistical tests.

#ifndef POSETDP_ANALYSIS_H_
#define POSETDP_ANALYSIS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetdp/ball.h"
#include "posetdp/int128.h"
#include "posetdp/poset.h"
#include "posetdp/rng.h"

namespace posetdp {

// ---------------------------------------------------------------------------
// l_p ball moments.

// Expected squared l_2 norm of a uniform point of the unit l_p ball in d
// dimensions. Evaluated with log-gamma; p = kInfinity returns d / 3.
double ExpectedSqNormLp(int d, double p);

// d^(2/p) * ExpectedSqNormLp(d, p): the moment of the smallest l_p ball
// containing every binary vector.
double ScaledExpected(int d, double p);

struct NormStats {
  int d = 0;
  double p = 0.0;
  double expected_sq_norm = 0.0;
  double min_enclosing_radius = 0.0;
  double scaled_expected = 0.0;
};
NormStats ComputeNormStats(int d, double p);

// The exponent in `grid` minimising ScaledExpected(d, p).
double ArgminScaledExpected(int d, std::span<const double> grid);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  double expected = 0.0;
  // |mean - expected| <= 3 * standard_error.
  bool WithinThreeSigma() const;
};

// Uniform samples of B_p^{d1} (+) B_p^{d2} formed by concatenation; the
// expectation is the sum of the two closed forms. d2 may be 0.
MonteCarloEstimate DirectSumAdditivityCheck(const LpBall& first, int d2,
                                            double p2, std::uint64_t trials,
                                            Stream& rng);

// ---------------------------------------------------------------------------
// Membership for the two poset families with closed-form balls. The rooted
// dimension is y.size(); coordinate 0 is the root.

enum class BallFamily {
  kRootedAntichain,  // root above an antichain of d - 1 elements
  kTotalOrder,       // root >= p_1 >= ... >= p_{d-1}
};

std::string_view FamilyName(BallFamily family);
// Accepts "antichain" and "chain". Throws ValidationError otherwise.
BallFamily ParseFamily(std::string_view name);
// The rooted poset of the family in dimension d. The total order uses
// descending labels: rooted index k covers rooted index k + 1.
RootedPoset FamilyPoset(BallFamily family, int d);
// The family of a rooted poset, if it belongs to one with the labeling of
// FamilyPoset. d = 1 and d = 2 are both families; the antichain is reported
// first.
std::optional<BallFamily> DetectFamily(const RootedPoset& rooted);

// Antichain: |y_0| <= 1 and -(1 - y_0)/2 <= y_i <= (1 + y_0)/2.
// Total order: sum_i |y_i - y_{i+1}| + |y_{d-1}| <= 1.
bool InFamilyBall(BallFamily family, std::span<const double> y,
                  double tolerance = 0.0);
// Poset-ball norm for the two families (the gauge of the ball).
double FamilyNorm(BallFamily family, std::span<const double> y);

struct RejectionResult {
  std::uint64_t proposals = 0;
  std::uint64_t hits = 0;
  double rate = 0.0;            // hits / proposals
  double standard_error = 0.0;  // binomial
  // With zero hits, `rate` is replaced by the 95% upper bound 3 / proposals.
  bool upper_bound_only = false;
};

// Proposes uniformly from [-1, 1]^d and counts membership hits.
RejectionResult RejectionExperiment(BallFamily family, int d, Stream& rng,
                                    std::uint64_t budget);

// Volume of the poset ball from the triangulation: #bipartitions * 2 / d!.
struct VolumeIdentity {
  Uint128 bipartitions = 0;
  int d = 0;
  double volume = 0.0;
  // 2 for a root over an antichain, 2^d / d! for a total order.
  std::optional<double> reference;
};
VolumeIdentity EbVolumeIdentity(const RootedPoset& rooted);

// ---------------------------------------------------------------------------
// Statistical tests.

struct TestResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

// Pearson goodness of fit against the uniform law over the categories.
// Throws ValidationError if any expected count is below 5.
TestResult ChiSquareUniformity(std::span<const std::uint64_t> observed);
// Pearson goodness of fit against explicit expected counts.
TestResult ChiSquareGoodnessOfFit(std::span<const std::uint64_t> observed,
                                  std::span<const double> expected);
// Two-sample homogeneity test on matching histograms; cells empty in both
// samples are ignored.
TestResult ChiSquareHomogeneity(std::span<const std::uint64_t> first,
                                std::span<const std::uint64_t> second);
// Upper tail of the chi-square law.
double ChiSquareSurvival(double statistic, double dof);

// One-sample Kolmogorov-Smirnov test; p-value from the asymptotic
// Kolmogorov law with the Stephens small-sample correction.
TestResult KolmogorovSmirnov(std::vector<double> samples,
                             const std::function<double(double)>& cdf);

double LaplaceCdf(double x, double scale);
double GammaCdf(double x, double shape, double scale);

// Spearman rank correlation (average ranks for ties).
double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y);

// Order-independent pairwise summation; used wherever trial results are
// aggregated so that outputs do not depend on accumulation order.
double PairwiseSum(std::span<const double> values);
double Mean(std::span<const double> values);
// Standard error of the mean.
double StandardError(std::span<const double> values);

}  // namespace posetdp

#endif  // POSETDP_ANALYSIS_H_
