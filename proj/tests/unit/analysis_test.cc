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

#include "posetdp/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "posetdp/ball.h"
#include "posetdp/error.h"
#include "posetdp/rng.h"

namespace posetdp {
namespace {

TEST(AnalysisTest, CubeMomentIsExact) {
  for (int d = 1; d <= 60; ++d) EXPECT_EQ(ExpectedSqNormLp(d, kInfinity), d / 3.0);
}

TEST(AnalysisTest, EuclideanMoment) {
  for (int d = 1; d <= 60; ++d) {
    EXPECT_NEAR(ExpectedSqNormLp(d, 2.0), d / (d + 2.0), 1e-12) << d;
  }
  EXPECT_NEAR(ExpectedSqNormLp(3, 2.0), 0.6, 1e-12);
}

TEST(AnalysisTest, OneDimensionIsAlwaysOneThird) {
  for (double p : {1.0, 1.5, 2.0, 7.0, 100.0}) {
    EXPECT_NEAR(ExpectedSqNormLp(1, p), 1.0 / 3.0, 1e-12) << p;
  }
}

TEST(AnalysisTest, CrossPolytopeMoment) {
  // Uniform point of the unit l_1 ball: E|x|^2 = 2d / ((d+1)(d+2)).
  for (int d = 1; d <= 50; ++d) {
    EXPECT_NEAR(ExpectedSqNormLp(d, 1.0), 2.0 * d / ((d + 1.0) * (d + 2.0)),
                1e-12);
  }
}

TEST(AnalysisTest, LargeExponentApproachesCube) {
  for (int d : {1, 2, 10, 50}) {
    EXPECT_NEAR(ExpectedSqNormLp(d, 1e6) / (d / 3.0), 1.0, 1e-6) << d;
  }
}

TEST(AnalysisTest, NoOverflowAtLargeDimension) {
  const double v = ExpectedSqNormLp(5000, 1.5);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0.0);
}

TEST(AnalysisTest, ScaledExpectedExamples) {
  EXPECT_EQ(ScaledExpected(7, kInfinity), 7 / 3.0);
  EXPECT_NEAR(ScaledExpected(2, 1.0), 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(ScaledExpected(2, 1.0) / ScaledExpected(2, kInfinity), 2.0,
              1e-12);
  const double d = 50;
  EXPECT_NEAR(ScaledExpected(50, 1.0) / ScaledExpected(50, kInfinity),
              6 * d * d / ((d + 1) * (d + 2)), 1e-10);
  const NormStats s = ComputeNormStats(4, 2.0);
  EXPECT_NEAR(s.min_enclosing_radius, 2.0, 1e-15);
  EXPECT_NEAR(s.scaled_expected,
              s.min_enclosing_radius * s.min_enclosing_radius *
                  s.expected_sq_norm,
              1e-12);
}

TEST(AnalysisTest, CubeWinsOnTheGrid) {
  const std::vector<double> grid = {1, 1.5, 2, 3, 5, 10, kInfinity};
  for (int d = 2; d <= 50; ++d) {
    EXPECT_EQ(ArgminScaledExpected(d, grid), kInfinity) << d;
  }
}

TEST(AnalysisTest, MonteCarloMomentGrid) {
  Stream rng(1);
  for (int d : {2, 5, 10, 50}) {
    for (double p : {1.0, 2.0, 3.0, kInfinity}) {
      const LpBall ball{d, p, 1.0};
      std::vector<double> sq(100000);
      for (double& v : sq) v = SquaredNorm(SampleLpBall(ball, rng));
      EXPECT_LE(std::abs(Mean(sq) - ExpectedSqNormLp(d, p)),
                3 * StandardError(sq))
          << "d=" << d << " p=" << p;
    }
  }
}

TEST(AnalysisTest, DirectSumAdditivity) {
  Stream rng(2);
  const auto cube = DirectSumAdditivityCheck({2, kInfinity, 1.0}, 3, kInfinity,
                                             200000, rng);
  EXPECT_NEAR(cube.expected, 5.0 / 3.0, 1e-12);
  EXPECT_TRUE(cube.WithinThreeSigma());
  const auto disc =
      DirectSumAdditivityCheck({2, 2.0, 1.0}, 2, 2.0, 200000, rng);
  EXPECT_NEAR(disc.expected, 1.0, 1e-12);
  EXPECT_TRUE(disc.WithinThreeSigma());
  const auto alone =
      DirectSumAdditivityCheck({3, 2.0, 1.0}, 0, 2.0, 200000, rng);
  EXPECT_NEAR(alone.expected, 0.6, 1e-12);
  EXPECT_TRUE(alone.WithinThreeSigma());
}

TEST(AnalysisTest, MembershipExamples) {
  using V = std::vector<double>;
  EXPECT_TRUE(InFamilyBall(BallFamily::kRootedAntichain, V{1, 1}));
  EXPECT_FALSE(InFamilyBall(BallFamily::kRootedAntichain, V{1, -0.01}));
  EXPECT_TRUE(InFamilyBall(BallFamily::kTotalOrder, V{1, 1}));
  EXPECT_FALSE(InFamilyBall(BallFamily::kTotalOrder, V{1, -0.5}));
  for (int d = 1; d <= 6; ++d) {
    EXPECT_TRUE(InFamilyBall(BallFamily::kRootedAntichain, V(d, 0.0)));
    EXPECT_TRUE(InFamilyBall(BallFamily::kTotalOrder, V(d, 0.0)));
  }
}

TEST(AnalysisTest, NormIsGaugeOfBall) {
  Stream rng(3);
  for (BallFamily family :
       {BallFamily::kRootedAntichain, BallFamily::kTotalOrder}) {
    for (int t = 0; t < 5000; ++t) {
      std::vector<double> y(4);
      for (double& v : y) v = 2.0 * rng.Uniform() - 1.0;
      const double n = FamilyNorm(family, y);
      if (std::abs(n - 1.0) > 1e-9) {
        EXPECT_EQ(InFamilyBall(family, y), n <= 1.0);
      }
      std::vector<double> neg = y, twice = y;
      for (double& v : neg) v = -v;
      for (double& v : twice) v *= 2.0;
      EXPECT_NEAR(FamilyNorm(family, neg), n, 1e-12);
      EXPECT_NEAR(FamilyNorm(family, twice), 2.0 * n, 1e-12);
    }
  }
}

TEST(AnalysisTest, FamilyPosetsAndDetection) {
  for (int d = 1; d <= 6; ++d) {
    const RootedPoset anti = FamilyPoset(BallFamily::kRootedAntichain, d);
    EXPECT_EQ(anti.dimension(), d);
    EXPECT_TRUE(IsAntichain(anti.stripped()));
    EXPECT_EQ(DetectFamily(anti), BallFamily::kRootedAntichain);
    const RootedPoset chain = FamilyPoset(BallFamily::kTotalOrder, d);
    EXPECT_TRUE(IsTotalOrder(chain.poset()));
    if (d >= 3) {
      EXPECT_EQ(DetectFamily(chain), BallFamily::kTotalOrder);
    }
  }
  EXPECT_EQ(DetectFamily(AugmentRoot(::posetdp::Poset::FromRelations(
                3, std::vector<Relation>{{0, 1}}))),
            std::nullopt);
  EXPECT_EQ(ParseFamily("chain"), BallFamily::kTotalOrder);
  EXPECT_EQ(ParseFamily(FamilyName(BallFamily::kRootedAntichain)),
            BallFamily::kRootedAntichain);
  EXPECT_THROW(ParseFamily("tree"), ValidationError);
}

TEST(AnalysisTest, RejectionRates) {
  Stream rng(4);
  const auto one = RejectionExperiment(BallFamily::kRootedAntichain, 1, rng, 1000);
  EXPECT_EQ(one.rate, 1.0);
  for (int d : {3, 6, 10}) {
    const std::uint64_t n = 2000000;
    const auto r = RejectionExperiment(BallFamily::kRootedAntichain, d, rng, n);
    const double want = 2.0 / std::ldexp(1.0, d);
    const double sigma = std::sqrt(want * (1 - want) / n);
    EXPECT_LE(std::abs(r.rate - want), 3 * sigma) << d;
    EXPECT_EQ(r.proposals, n);
  }
  const auto none = RejectionExperiment(BallFamily::kRootedAntichain, 40, rng, 1000);
  EXPECT_TRUE(none.upper_bound_only);
  EXPECT_EQ(none.hits, 0u);
  EXPECT_NEAR(none.rate, 3.0 / 1000, 1e-15);
}

TEST(AnalysisTest, VolumeIdentityExamples) {
  const auto anti = EbVolumeIdentity(FamilyPoset(BallFamily::kRootedAntichain, 4));
  EXPECT_EQ(anti.bipartitions, 24);
  EXPECT_DOUBLE_EQ(anti.volume, 2.0);
  const auto chain = EbVolumeIdentity(FamilyPoset(BallFamily::kTotalOrder, 3));
  EXPECT_EQ(chain.bipartitions, 4);
  EXPECT_DOUBLE_EQ(chain.volume, 4.0 / 3.0);
  ASSERT_TRUE(chain.reference.has_value());
  EXPECT_DOUBLE_EQ(*chain.reference, 8.0 / 6.0);
  const auto point = EbVolumeIdentity(AugmentRoot(Poset()));
  EXPECT_EQ(point.bipartitions, 1);
  EXPECT_DOUBLE_EQ(point.volume, 2.0);
}

TEST(AnalysisTest, MonteCarloVolumeMatchesIdentity) {
  Stream rng(5);
  for (BallFamily family :
       {BallFamily::kRootedAntichain, BallFamily::kTotalOrder}) {
    for (int d = 2; d <= 6; ++d) {
      const auto id = EbVolumeIdentity(FamilyPoset(family, d));
      const auto r = RejectionExperiment(family, d, rng, 1000000);
      const double cube = std::ldexp(1.0, d);
      EXPECT_LE(std::abs(r.rate * cube - id.volume), 3 * r.standard_error * cube)
          << FamilyName(family) << " d=" << d;
    }
  }
}

// Independent closed forms of the chi-square upper tail for 2 and 3
// degrees of freedom.
double Survival2(double x) { return std::exp(-x / 2); }
double Survival3(double x) {
  return std::erfc(std::sqrt(x / 2)) +
         std::sqrt(2 * x / std::numbers::pi) * std::exp(-x / 2);
}

TEST(AnalysisTest, ChiSquareHandExample) {
  const std::vector<std::uint64_t> obs = {18, 12, 15, 15};
  const TestResult r = ChiSquareUniformity(obs);
  EXPECT_NEAR(r.statistic, 1.2, 1e-12);
  EXPECT_EQ(r.dof, 3);
  EXPECT_NEAR(r.p_value, Survival3(1.2), 1e-12);
  for (double x : {0.1, 1.0, 4.5, 20.0}) {
    EXPECT_NEAR(ChiSquareSurvival(x, 2), Survival2(x), 1e-12);
    EXPECT_NEAR(ChiSquareSurvival(x, 3), Survival3(x), 1e-12);
  }
}

TEST(AnalysisTest, ChiSquareEdgeCases) {
  const std::vector<std::uint64_t> flat = {20, 20, 20};
  EXPECT_EQ(ChiSquareUniformity(flat).statistic, 0.0);
  EXPECT_EQ(ChiSquareUniformity(flat).p_value, 1.0);
  const std::vector<std::uint64_t> hole = {5000, 5000, 0, 5000};
  EXPECT_LT(ChiSquareUniformity(hole).p_value, 1e-6);
  const std::vector<std::uint64_t> sparse = {3, 4, 2};
  EXPECT_THROW(ChiSquareUniformity(sparse), ValidationError);
  const std::vector<std::uint64_t> obs = {30, 70};
  const std::vector<double> exp = {50, 50};
  EXPECT_NEAR(ChiSquareGoodnessOfFit(obs, exp).statistic, 16.0, 1e-12);
}

TEST(AnalysisTest, ChiSquareHomogeneity) {
  const std::vector<std::uint64_t> a = {100, 200, 0, 300};
  const std::vector<std::uint64_t> b = {200, 400, 0, 600};
  const TestResult same = ChiSquareHomogeneity(a, b);
  EXPECT_NEAR(same.statistic, 0.0, 1e-9);
  EXPECT_EQ(same.dof, 2);
  const std::vector<std::uint64_t> c = {300, 200, 0, 100};
  EXPECT_LT(ChiSquareHomogeneity(a, c).p_value, 1e-6);
}

TEST(AnalysisTest, KolmogorovSmirnov) {
  Stream rng(6);
  std::vector<double> u(20000), skew(20000);
  for (double& v : u) v = rng.Uniform();
  for (double& v : skew) v = rng.Uniform() * rng.Uniform();
  const auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_GT(KolmogorovSmirnov(u, cdf).p_value, 0.01);
  EXPECT_LT(KolmogorovSmirnov(skew, cdf).p_value, 1e-6);
  // One sample at 0.5: D = 0.5.
  EXPECT_NEAR(KolmogorovSmirnov({0.5}, cdf).statistic, 0.5, 1e-15);
}

TEST(AnalysisTest, DistributionFunctions) {
  EXPECT_DOUBLE_EQ(LaplaceCdf(0.0, 2.0), 0.5);
  EXPECT_NEAR(LaplaceCdf(2.0, 2.0), 1 - 0.5 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(LaplaceCdf(-2.0, 2.0), 0.5 * std::exp(-1.0), 1e-15);
  // Gamma(1, s) is exponential; Gamma(2, s) has cdf 1 - (1 + x/s) e^{-x/s}.
  EXPECT_NEAR(GammaCdf(3.0, 1.0, 2.0), 1 - std::exp(-1.5), 1e-14);
  EXPECT_NEAR(GammaCdf(3.0, 2.0, 2.0), 1 - 2.5 * std::exp(-1.5), 1e-14);
  EXPECT_EQ(GammaCdf(-1.0, 2.0, 1.0), 0.0);
}

TEST(AnalysisTest, SpearmanCorrelation) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  const std::vector<double> up = {2, 4, 5, 9, 10};
  const std::vector<double> down = {10, 9, 5, 4, 2};
  EXPECT_NEAR(SpearmanCorrelation(x, up), 1.0, 1e-12);
  EXPECT_NEAR(SpearmanCorrelation(x, down), -1.0, 1e-12);
  // Ranks with ties: y ranks (1.5, 1.5, 3, 4); Pearson of ranks.
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {7, 7, 8, 9};
  const double rx[] = {1, 2, 3, 4}, ry[] = {1.5, 1.5, 3, 4};
  double mx = 2.5, my = 2.5, sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < 4; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  EXPECT_NEAR(SpearmanCorrelation(a, b), sxy / std::sqrt(sxx * syy), 1e-12);
}

TEST(AnalysisTest, PairwiseSumAndMoments) {
  std::vector<double> v(1000);
  for (int i = 0; i < 1000; ++i) v[i] = i + 1;
  EXPECT_EQ(PairwiseSum(v), 500500.0);
  EXPECT_EQ(Mean(v), 500.5);
  const std::vector<double> w = {1, 3};
  EXPECT_NEAR(StandardError(w), 1.0, 1e-15);  // sd sqrt(2), n = 2
  EXPECT_EQ(PairwiseSum(std::vector<double>{}), 0.0);
}

}  // namespace
}  // namespace posetdp
