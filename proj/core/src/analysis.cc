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
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "posetdp/bipartition.h"
#include "posetdp/error.h"

namespace posetdp {

double ExpectedSqNormLp(int d, double p) {
  if (d < 1) throw ValidationError("dimension must be >= 1");
  if (!(p >= 1.0)) throw ValidationError("p must be >= 1");
  const double dd = d;
  if (std::isinf(p)) return dd / 3.0;
  const double log_ratio = std::lgamma(dd / p) + std::lgamma(3.0 / p) -
                           std::lgamma(1.0 / p) - std::lgamma((dd + 2.0) / p);
  return (dd / 3.0) * (3.0 * dd / (dd + 2.0)) * std::exp(log_ratio);
}

double ScaledExpected(int d, double p) {
  if (std::isinf(p)) return ExpectedSqNormLp(d, p);
  return std::pow(static_cast<double>(d), 2.0 / p) * ExpectedSqNormLp(d, p);
}

NormStats ComputeNormStats(int d, double p) {
  NormStats s;
  s.d = d;
  s.p = p;
  s.expected_sq_norm = ExpectedSqNormLp(d, p);
  s.min_enclosing_radius =
      std::isinf(p) ? 1.0 : std::pow(static_cast<double>(d), 1.0 / p);
  s.scaled_expected =
      s.min_enclosing_radius * s.min_enclosing_radius * s.expected_sq_norm;
  return s;
}

double ArgminScaledExpected(int d, std::span<const double> grid) {
  if (grid.empty()) throw ValidationError("empty exponent grid");
  double best_p = grid.front();
  double best = ScaledExpected(d, best_p);
  for (double p : grid.subspan(1)) {
    const double v = ScaledExpected(d, p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  }
  return best_p;
}

bool MonteCarloEstimate::WithinThreeSigma() const {
  return std::abs(mean - expected) <= 3.0 * standard_error;
}

MonteCarloEstimate DirectSumAdditivityCheck(const LpBall& first, int d2,
                                            double p2, std::uint64_t trials,
                                            Stream& rng) {
  ValidateLpBall(first);
  if (d2 < 0) throw ValidationError("second dimension must be >= 0");
  if (trials < 2) throw ValidationError("need at least two trials");
  const LpBall second{std::max(d2, 1), p2, 1.0};
  std::vector<double> x(first.dimension);
  std::vector<double> y(second.dimension);
  std::vector<double> values(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    SampleLpBall(first, rng, x);
    double s = SquaredNorm(x);
    if (d2 > 0) {
      SampleLpBall(second, rng, y);
      s += SquaredNorm(y);
    }
    values[t] = s;
  }
  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = Mean(values);
  est.standard_error = StandardError(values);
  est.expected = first.radius * first.radius *
                     ExpectedSqNormLp(first.dimension, first.p) +
                 (d2 > 0 ? ExpectedSqNormLp(d2, p2) : 0.0);
  return est;
}

std::string_view FamilyName(BallFamily family) {
  return family == BallFamily::kRootedAntichain ? "antichain" : "chain";
}

BallFamily ParseFamily(std::string_view name) {
  if (name == "antichain") return BallFamily::kRootedAntichain;
  if (name == "chain") return BallFamily::kTotalOrder;
  throw ValidationError("unsupported poset family '" + std::string(name) +
                        "' (expected antichain or chain)");
}

RootedPoset FamilyPoset(BallFamily family, int d) {
  if (d < 1) throw ValidationError("dimension must be >= 1");
  if (family == BallFamily::kRootedAntichain) {
    return AugmentRoot(Poset::Antichain(d - 1));
  }
  // Descending labels: element k covers element k + 1.
  std::vector<Relation> relations;
  for (int k = 0; k + 1 < d - 1; ++k) relations.emplace_back(k + 1, k);
  return AugmentRoot(Poset::FromRelations(d - 1, relations));
}

namespace {

bool IsDescendingChain(const Poset& poset) {
  if (!IsTotalOrder(poset)) return false;
  for (int k = 0; k + 1 < poset.size(); ++k) {
    if (!poset.Leq(k + 1, k)) return false;
  }
  return true;
}

}  // namespace

std::optional<BallFamily> DetectFamily(const RootedPoset& rooted) {
  if (IsAntichain(rooted.stripped())) return BallFamily::kRootedAntichain;
  if (IsDescendingChain(rooted.stripped())) return BallFamily::kTotalOrder;
  return std::nullopt;
}

double FamilyNorm(BallFamily family, std::span<const double> y) {
  const std::size_t d = y.size();
  if (d == 0) return 0.0;
  if (family == BallFamily::kRootedAntichain) {
    double norm = std::abs(y[0]);
    for (std::size_t i = 1; i < d; ++i) {
      norm = std::max(norm, std::abs(2.0 * y[i] - y[0]));
    }
    return norm;
  }
  // Total order: index 1 lies directly below the root, index d-1 lowest.
  // Vertex (1,..,1,0,..,0) with k ones maps to the k-th unit vector under
  // successive differences, so the norm is l_1 of the differences.
  double norm = std::abs(y[d - 1]);
  for (std::size_t i = 0; i + 1 < d; ++i) norm += std::abs(y[i] - y[i + 1]);
  return norm;
}

bool InFamilyBall(BallFamily family, std::span<const double> y,
                  double tolerance) {
  return FamilyNorm(family, y) <= 1.0 + tolerance;
}

RejectionResult RejectionExperiment(BallFamily family, int d, Stream& rng,
                                    std::uint64_t budget) {
  if (d < 1) throw ValidationError("dimension must be >= 1");
  if (budget == 0) throw ValidationError("budget must be positive");
  std::vector<double> y(d);
  RejectionResult r;
  for (std::uint64_t t = 0; t < budget; ++t) {
    for (double& v : y) v = 2.0 * rng.Uniform() - 1.0;
    if (InFamilyBall(family, y)) ++r.hits;
  }
  r.proposals = budget;
  const double n = static_cast<double>(budget);
  r.rate = static_cast<double>(r.hits) / n;
  r.standard_error = std::sqrt(r.rate * (1.0 - r.rate) / n);
  if (r.hits == 0) {
    r.upper_bound_only = true;
    r.rate = 3.0 / n;
  }
  return r;
}

VolumeIdentity EbVolumeIdentity(const RootedPoset& rooted) {
  VolumeIdentity v;
  v.d = rooted.dimension();
  v.bipartitions = CountExtendedBipartitions(rooted.stripped());
  // 2 * count / d! evaluated in log space to stay finite for large d.
  v.volume = std::exp(std::log(2.0) +
                      std::log(static_cast<double>(v.bipartitions)) -
                      std::lgamma(v.d + 1.0));
  if (const auto family = DetectFamily(rooted)) {
    v.reference = *family == BallFamily::kRootedAntichain
                      ? 2.0
                      : std::exp(v.d * std::log(2.0) - std::lgamma(v.d + 1.0));
  }
  return v;
}

double ChiSquareSurvival(double statistic, double dof) {
  if (dof <= 0) return 1.0;
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

TestResult ChiSquareGoodnessOfFit(std::span<const std::uint64_t> observed,
                                  std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2) {
    throw ValidationError("need matching observed/expected with >= 2 cells");
  }
  TestResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] < 5.0) {
      throw ValidationError("category " + std::to_string(i) +
                            " is undersampled (expected count < 5)");
    }
    const double diff = static_cast<double>(observed[i]) - expected[i];
    r.statistic += diff * diff / expected[i];
  }
  r.dof = static_cast<double>(observed.size() - 1);
  r.p_value = ChiSquareSurvival(r.statistic, r.dof);
  return r;
}

TestResult ChiSquareUniformity(std::span<const std::uint64_t> observed) {
  const double total =
      static_cast<double>(std::accumulate(observed.begin(), observed.end(),
                                          std::uint64_t{0}));
  std::vector<double> expected(observed.size(),
                               total / static_cast<double>(observed.size()));
  return ChiSquareGoodnessOfFit(observed, expected);
}

TestResult ChiSquareHomogeneity(std::span<const std::uint64_t> first,
                                std::span<const std::uint64_t> second) {
  if (first.size() != second.size()) {
    throw ValidationError("histograms have different numbers of cells");
  }
  double n1 = 0;
  double n2 = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    n1 += static_cast<double>(first[i]);
    n2 += static_cast<double>(second[i]);
  }
  if (n1 == 0 || n2 == 0) throw ValidationError("empty histogram");
  const double k1 = std::sqrt(n2 / n1);
  const double k2 = std::sqrt(n1 / n2);
  TestResult r;
  int cells = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const double a = static_cast<double>(first[i]);
    const double b = static_cast<double>(second[i]);
    if (a + b == 0) continue;
    const double diff = k1 * a - k2 * b;
    r.statistic += diff * diff / (a + b);
    ++cells;
  }
  r.dof = cells - 1;
  r.p_value = ChiSquareSurvival(r.statistic, r.dof);
  return r;
}

namespace {

// P(K > t) for the Kolmogorov distribution.
double KolmogorovSurvival(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

TestResult KolmogorovSmirnov(std::vector<double> samples,
                             const std::function<double(double)>& cdf) {
  if (samples.empty()) throw ValidationError("no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::max(f - i / n, (i + 1) / n - f));
  }
  const double sn = std::sqrt(n);
  TestResult r;
  r.statistic = d;
  r.dof = n;
  r.p_value = KolmogorovSurvival(d * (sn + 0.12 + 0.11 / sn));
  return r;
}

double LaplaceCdf(double x, double scale) {
  return x < 0 ? 0.5 * std::exp(x / scale) : 1.0 - 0.5 * std::exp(-x / scale);
}

double GammaCdf(double x, double shape, double scale) {
  if (x <= 0) return 0.0;
  return boost::math::gamma_p(shape, x / scale);
}

namespace {

std::vector<double> Ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ValidationError("need two equally long samples of size >= 2");
  }
  const std::vector<double> rx = Ranks(x);
  const std::vector<double> ry = Ranks(y);
  const double mx = Mean(rx);
  const double my = Mean(ry);
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return PairwiseSum(values) / static_cast<double>(values.size());
}

double StandardError(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double m = Mean(values);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = (values[i] - m) * (values[i] - m);
  const double var = PairwiseSum(sq) / static_cast<double>(n - 1);
  return std::sqrt(var / static_cast<double>(n));
}

}  // namespace posetdp
