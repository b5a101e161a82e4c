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

#include "posetdp/verify.h"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "posetdp/ball.h"
#include "posetdp/error.h"
#include "posetdp/io.h"
#include "posetdp/mechanism.h"

namespace posetdp {
namespace {

using Json = nlohmann::json;

// Inverse of an n x n row-major matrix by Gauss-Jordan with partial
// pivoting.
std::vector<double> Invert(std::vector<double> a, int n) {
  std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == 0.0) {
      throw std::logic_error("degenerate simplex");
    }
    if (pivot != col) {
      for (int k = 0; k < n; ++k) {
        std::swap(a[pivot * n + k], a[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    }
    const double scale = 1.0 / a[col * n + col];
    for (int k = 0; k < n; ++k) {
      a[col * n + k] *= scale;
      inv[col * n + k] *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col];
      if (f == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

}  // namespace

SimplexLocator::SimplexLocator(const RootedPoset& rooted, int cap)
    : d_(rooted.dimension()),
      bipartitions_(EnumerateBipartitions(rooted.stripped(), cap)) {
  const int n = d_ + 1;
  inverses_.reserve(bipartitions_.size());
  for (const ExtendedBipartition& eb : bipartitions_) {
    const Simplex s = ChainsToSimplex(
        rooted, BipartitionToChainsUnchecked(rooted.stripped(), eb));
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
      m[k] = 1.0;
      const auto v = s.vertex(k);
      for (int j = 0; j < d_; ++j) m[(j + 1) * n + k] = v[j];
    }
    inverses_.push_back(Invert(std::move(m), n));
  }
}

int SimplexLocator::IndexOf(const ExtendedBipartition& eb) const {
  const auto it =
      std::lower_bound(bipartitions_.begin(), bipartitions_.end(), eb);
  if (it == bipartitions_.end() || !(*it == eb)) return -1;
  return static_cast<int>(it - bipartitions_.begin());
}

int SimplexLocator::Locate(std::span<const double> point,
                           double tolerance) const {
  const int n = d_ + 1;
  for (std::size_t s = 0; s < inverses_.size(); ++s) {
    const double* inv = inverses_[s].data();
    bool inside = true;
    for (int r = 0; r < n && inside; ++r) {
      double lambda = inv[r * n];
      for (int j = 0; j < d_; ++j) lambda += inv[r * n + j + 1] * point[j];
      inside = lambda >= -tolerance;
    }
    if (inside) return static_cast<int>(s);
  }
  return -1;
}

std::vector<std::uint64_t> SamplerHistogram(const SimplexLocator& locator,
                                            const Poset& stripped,
                                            MaximalPolicy policy,
                                            std::uint64_t draws,
                                            const Stream& rng) {
  const BipartitionSampler sampler(stripped, policy, kMaxExactSize);
  std::vector<std::uint64_t> hist(locator.size(), 0);
  Stream s = rng;
  for (std::uint64_t t = 0; t < draws; ++t) {
    const int idx = locator.IndexOf(sampler.Sample(s));
    if (idx < 0) throw std::logic_error("sampler produced an invalid draw");
    ++hist[idx];
  }
  return hist;
}

std::vector<std::uint64_t> RejectionHistogram(const SimplexLocator& locator,
                                              BallFamily family, int d,
                                              std::uint64_t accepted,
                                              const Stream& rng,
                                              std::uint64_t* proposals) {
  std::vector<std::uint64_t> hist(locator.size(), 0);
  std::vector<double> y(d);
  Stream s = rng;
  std::uint64_t hits = 0;
  std::uint64_t tries = 0;
  while (hits < accepted) {
    ++tries;
    for (double& v : y) v = 2.0 * s.Uniform() - 1.0;
    if (!InFamilyBall(family, y)) continue;
    const int idx = locator.Locate(y, 1e-9);
    if (idx < 0) throw std::logic_error("ball point outside every simplex");
    ++hist[idx];
    ++hits;
  }
  if (proposals != nullptr) *proposals = tries;
  return hist;
}

Poset CounterexamplePoset() {
  const std::vector<Relation> relations = {{0, 1}};
  return Poset::FromRelations(3, relations, {"c", "v", "w"});
}

std::vector<PolicyUniformity> CounterexampleStudy(std::uint64_t draws,
                                                  std::uint64_t seed) {
  const RootedPoset rooted = AugmentRoot(CounterexamplePoset());
  const SimplexLocator locator(rooted);
  std::vector<PolicyUniformity> out;
  std::uint64_t index = 0;
  for (MaximalPolicy policy :
       {MaximalPolicy::kFirstFound, MaximalPolicy::kChildlessPreferred,
        MaximalPolicy::kRandomMaximal, MaximalPolicy::kExactSmall}) {
    PolicyUniformity u;
    u.policy = policy;
    u.histogram = SamplerHistogram(locator, rooted.stripped(), policy, draws,
                                   Stream(seed, index++));
    u.test = ChiSquareUniformity(u.histogram);
    const auto [lo, hi] =
        std::minmax_element(u.histogram.begin(), u.histogram.end());
    u.max_over_min = *lo == 0 ? std::numeric_limits<double>::infinity()
                              : static_cast<double>(*hi) / *lo;
    out.push_back(std::move(u));
  }
  return out;
}

std::string CounterexampleReportJson(std::uint64_t draws, std::uint64_t seed) {
  const Poset poset = CounterexamplePoset();
  const std::vector<ExtendedBipartition> ebs = EnumerateBipartitions(poset);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["poset"] = Json::parse(PosetToJson(poset));
  doc["poset_hash"] = poset.HashHex();
  doc["seed"] = seed;
  doc["draws"] = draws;
  Json names = Json::array();
  for (const ExtendedBipartition& eb : ebs) names.push_back(FormatBipartition(eb));
  doc["bipartitions"] = names;
  Json policies = Json::array();
  for (const PolicyUniformity& u : CounterexampleStudy(draws, seed)) {
    Json p;
    p["policy"] = std::string(PolicyName(u.policy));
    p["histogram"] = u.histogram;
    p["chi_square"] = u.test.statistic;
    p["dof"] = u.test.dof;
    p["p_value"] = u.test.p_value;
    p["max_over_min"] = std::isinf(u.max_over_min) ? Json(nullptr)
                                                   : Json(u.max_over_min);
    p["uniform_at_0.001"] = u.test.p_value >= 1e-3;
    policies.push_back(std::move(p));
  }
  doc["policies"] = std::move(policies);
  return doc.dump(2) + "\n";
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

std::string SuiteReport::ToJson() const {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["passed"] = passed();
  Json arr = Json::array();
  for (const Check& c : checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    Json stats = Json::object();
    for (const auto& [k, v] : c.stats) {
      stats[k] = std::isfinite(v) ? Json(v) : Json(nullptr);
    }
    j["stats"] = std::move(stats);
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  doc["checks"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::vector<std::string> SuiteNames() {
  return {"uniformity", "volume", "lp", "simplex", "mechanism"};
}

namespace {

std::string Tag(BallFamily family, int d) {
  return std::string(FamilyName(family)) + "_d" + std::to_string(d);
}

void UniformitySuite(SuiteReport& report, std::uint64_t n) {
  std::uint64_t index = 0;
  for (BallFamily family :
       {BallFamily::kRootedAntichain, BallFamily::kTotalOrder}) {
    for (int d = 2; d <= 4; ++d) {
      const RootedPoset rooted = FamilyPoset(family, d);
      const SimplexLocator locator(rooted);
      std::uint64_t proposals = 0;
      const auto reference = RejectionHistogram(
          locator, family, d, n, Stream(report.seed, index++), &proposals);
      for (MaximalPolicy policy :
           {MaximalPolicy::kExactSmall, MaximalPolicy::kChildlessPreferred}) {
        const auto hist = SamplerHistogram(locator, rooted.stripped(), policy,
                                           n, Stream(report.seed, index++));
        const TestResult t = ChiSquareHomogeneity(hist, reference);
        report.checks.push_back(
            {"rejection_match_" + std::string(PolicyName(policy)) + "_" +
                 Tag(family, d),
             t.p_value >= 1e-3,
             {{"chi_square", t.statistic},
              {"dof", t.dof},
              {"p_value", t.p_value},
              {"simplices", static_cast<double>(locator.size())},
              {"proposals", static_cast<double>(proposals)}},
             ""});
      }
    }
  }
  for (const PolicyUniformity& u : CounterexampleStudy(n, report.seed)) {
    report.checks.push_back(
        {"counterexample_" + std::string(PolicyName(u.policy)), true,
         {{"chi_square", u.test.statistic},
          {"p_value", u.test.p_value},
          {"max_over_min", u.max_over_min}},
         "informational"});
  }
}

void VolumeSuite(SuiteReport& report, std::uint64_t n) {
  std::uint64_t index = 0;
  for (BallFamily family :
       {BallFamily::kRootedAntichain, BallFamily::kTotalOrder}) {
    for (int d = 1; d <= 7; ++d) {
      const RootedPoset rooted = FamilyPoset(family, d);
      const VolumeIdentity v = EbVolumeIdentity(rooted);
      report.checks.push_back(
          {"eb_volume_" + Tag(family, d),
           v.reference && std::abs(v.volume - *v.reference) <= 1e-12 * *v.reference,
           {{"bipartitions", static_cast<double>(v.bipartitions)},
            {"volume", v.volume},
            {"reference", v.reference.value_or(0.0)}},
           ""});
    }
    for (int d = 2; d <= 5; ++d) {
      const RootedPoset rooted = FamilyPoset(family, d);
      bool unimodular = true;
      for (const ExtendedBipartition& eb :
           EnumerateBipartitions(rooted.stripped())) {
        const Simplex s = ChainsToSimplex(
            rooted, BipartitionToChains(rooted.stripped(), eb));
        unimodular = unimodular && SimplexAbsDeterminant(s) == 2;
      }
      report.checks.push_back(
          {"simplex_determinants_" + Tag(family, d), unimodular, {}, ""});

      Stream rng(report.seed, index++);
      const RejectionResult r = RejectionExperiment(family, d, rng, n);
      const double scale = std::ldexp(1.0, d);
      const double estimate = r.rate * scale;
      const double sigma = r.standard_error * scale;
      const double expected = EbVolumeIdentity(rooted).volume;
      report.checks.push_back(
          {"monte_carlo_volume_" + Tag(family, d),
           std::abs(estimate - expected) <= 3.0 * sigma,
           {{"estimate", estimate}, {"sigma", sigma}, {"expected", expected}},
           ""});
    }
  }
}

void LpSuite(SuiteReport& report, std::uint64_t n) {
  bool exact_inf = true;
  double worst_p2 = 0.0;
  for (int d = 1; d <= 50; ++d) {
    exact_inf = exact_inf && ExpectedSqNormLp(d, kInfinity) == d / 3.0;
    worst_p2 = std::max(worst_p2,
                        std::abs(ExpectedSqNormLp(d, 2.0) - d / (d + 2.0)));
  }
  report.checks.push_back({"p_inf_is_d_over_3", exact_inf, {}, ""});
  report.checks.push_back(
      {"p2_is_d_over_d_plus_2", worst_p2 <= 1e-12, {{"max_error", worst_p2}}, ""});

  std::uint64_t index = 0;
  for (int d : {2, 5, 10, 50}) {
    for (double p : {1.0, 2.0, 3.0, kInfinity}) {
      Stream rng(report.seed, index++);
      const MonteCarloEstimate e =
          DirectSumAdditivityCheck(LpBall{d, p, 1.0}, 0, p, n, rng);
      report.checks.push_back(
          {"monte_carlo_d" + std::to_string(d) + "_p" +
               (std::isinf(p) ? std::string("inf") : FormatDouble(p)),
           e.WithinThreeSigma(),
           {{"mean", e.mean}, {"se", e.standard_error}, {"expected", e.expected}},
           ""});
    }
  }

  const std::vector<double> grid = {1.0, 1.5, 2.0, 3.0, 5.0, 10.0, kInfinity};
  bool argmin_inf = true;
  for (int d = 2; d <= 50; ++d) {
    argmin_inf = argmin_inf && std::isinf(ArgminScaledExpected(d, grid));
  }
  report.checks.push_back({"argmin_is_p_inf", argmin_inf, {}, ""});

  const double r2 = ScaledExpected(2, 1.0) / ScaledExpected(2, kInfinity);
  const double r50 = ScaledExpected(50, 1.0) / ScaledExpected(50, kInfinity);
  report.checks.push_back({"l1_over_linf_d2",
                           std::abs(r2 - 2.0) <= 1e-12,
                           {{"ratio_d2", r2}, {"ratio_d50", r50}},
                           ""});
}

void SimplexSuite(SuiteReport& report, std::uint64_t n) {
  std::vector<std::pair<std::string, Poset>> posets = {
      {"antichain3", Poset::Antichain(3)},
      {"chain3", Poset::Chain(3)},
      {"counterexample", CounterexamplePoset()}};
  std::uint64_t index = 0;
  for (const auto& [name, poset] : posets) {
    const RootedPoset rooted = AugmentRoot(poset);
    bool round_trip = true;
    for (const ExtendedBipartition& eb : EnumerateBipartitions(poset)) {
      round_trip = round_trip &&
                   ChainsToBipartition(poset, BipartitionToChains(poset, eb)) == eb;
    }
    report.checks.push_back({"round_trip_" + name, round_trip, {}, ""});

    const PosetBallSampler sampler(rooted, MaximalPolicy::kExactSmall);
    Stream rng(report.seed, index++);
    double worst = 0.0;
    const std::optional<BallFamily> family = DetectFamily(rooted);
    bool in_ball = true;
    const std::uint64_t draws = std::max<std::uint64_t>(n / 100, 100);
    for (std::uint64_t t = 0; t < draws; ++t) {
      const PosetBallSampler::Trace trace = sampler.SampleWithTrace(rng);
      const std::vector<double> lambda =
          BarycentricCoordinates(trace.simplex, trace.point);
      double sum = 0.0;
      for (double l : lambda) {
        worst = std::max(worst, -l);
        sum += l;
      }
      worst = std::max(worst, std::abs(sum - 1.0));
      if (family) in_ball = in_ball && InFamilyBall(*family, trace.point, 1e-12);
    }
    report.checks.push_back({"barycentric_" + name, worst <= 1e-9,
                             {{"max_violation", worst}}, ""});
    if (family) report.checks.push_back({"membership_" + name, in_ball, {}, ""});
  }
}

void MechanismSuite(SuiteReport& report, std::uint64_t n) {
  MechanismConfig config;
  config.epsilon = 1.0;
  const PosetMechanism mechanism(Poset::Antichain(0), config);
  {
    // A single root coordinate: the mechanism on the empty poset degenerates
    // to the interval ball, so its rooted noise is Laplace(1 / epsilon).
    Stream rng(report.seed, 0);
    std::vector<double> samples(n);
    for (double& x : samples) x = mechanism.RootedNoise(rng)[0];
    const TestResult t = KolmogorovSmirnov(
        samples, [&](double x) { return LaplaceCdf(x, 1.0 / config.epsilon); });
    report.checks.push_back({"one_dimensional_laplace_ks", t.p_value >= 0.01,
                             {{"ks_statistic", t.statistic},
                              {"p_value", t.p_value}},
                             ""});
  }
  {
    const Poset poset = CounterexamplePoset();
    MechanismConfig doubled = config;
    doubled.epsilon = 2.0 * config.epsilon;
    const PosetMechanism a(poset, config);
    const PosetMechanism b(poset, doubled);
    bool exact = true;
    for (std::uint64_t t = 0; t < 1000; ++t) {
      Stream s1(report.seed, 1000 + t);
      Stream s2(report.seed, 1000 + t);
      const std::vector<double> x = a.Noise(s1);
      const std::vector<double> y = b.Noise(s2);
      for (std::size_t i = 0; i < x.size(); ++i) exact = exact && x[i] == 2.0 * y[i];
    }
    report.checks.push_back({"epsilon_scaling_pathwise", exact, {}, ""});
  }
  std::uint64_t index = 1;
  for (BallFamily family :
       {BallFamily::kRootedAntichain, BallFamily::kTotalOrder}) {
    const int d = 4;
    const RootedPoset rooted = FamilyPoset(family, d);
    const PosetMechanism mech(rooted.stripped(), config);
    Stream rng(report.seed, index++);
    const std::uint64_t draws = std::max<std::uint64_t>(n / 10, 1000);
    std::vector<double> norms(draws);
    for (double& r : norms) r = FamilyNorm(family, mech.RootedNoise(rng));
    const TestResult t = KolmogorovSmirnov(norms, [&](double x) {
      return GammaCdf(x, d, config.sensitivity / config.epsilon);
    });
    report.checks.push_back({"radial_law_" + Tag(family, d), t.p_value >= 0.01,
                             {{"ks_statistic", t.statistic},
                              {"p_value", t.p_value},
                              {"mean_norm", Mean(norms)}},
                             ""});
  }
}

}  // namespace

SuiteReport RunSuite(std::string_view suite, std::uint64_t seed,
                     std::uint64_t trials) {
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  report.trials = trials == 0 ? 100'000 : trials;
  if (suite == "uniformity") {
    UniformitySuite(report, report.trials);
  } else if (suite == "volume") {
    VolumeSuite(report, report.trials);
  } else if (suite == "lp") {
    LpSuite(report, report.trials);
  } else if (suite == "simplex") {
    SimplexSuite(report, report.trials);
  } else if (suite == "mechanism") {
    MechanismSuite(report, report.trials);
  } else {
    throw ValidationError("unknown suite '" + std::string(suite) + "'");
  }
  return report;
}

}  // namespace posetdp
