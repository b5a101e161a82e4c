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

#include "posetdp/ball.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "posetdp/error.h"

namespace posetdp {

void SampleSimplex(const Simplex& simplex, Stream& rng, std::span<double> out) {
  const int d = simplex.dimension();
  std::vector<double> cuts(d + 2);
  cuts[0] = 0.0;
  for (int i = 1; i <= d; ++i) cuts[i] = rng.Uniform();
  cuts[d + 1] = 1.0;
  std::sort(cuts.begin() + 1, cuts.begin() + d + 1);
  std::fill(out.begin(), out.end(), 0.0);
  for (int k = 0; k <= d; ++k) {
    const double w = cuts[k + 1] - cuts[k];
    if (w == 0.0) continue;
    const std::int8_t* v = simplex.data().data() + static_cast<std::size_t>(k) * d;
    for (int j = 0; j < d; ++j) out[j] += w * v[j];
  }
}

std::vector<double> SampleSimplex(const Simplex& simplex, Stream& rng) {
  std::vector<double> out(simplex.dimension());
  SampleSimplex(simplex, rng, out);
  return out;
}

PosetBallSampler::PosetBallSampler(const RootedPoset& rooted,
                                   MaximalPolicy policy, int exact_cap)
    : rooted_(rooted), bipartitions_(rooted_.stripped(), policy, exact_cap) {}

PosetBallSampler::Trace PosetBallSampler::SampleWithTrace(Stream& rng) const {
  ExtendedBipartition eb = bipartitions_.Sample(rng);
  Simplex simplex = ChainsToSimplex(
      rooted_, BipartitionToChainsUnchecked(rooted_.stripped(), eb));
  std::vector<double> point = SampleSimplex(simplex, rng);
  return {std::move(eb), std::move(simplex), std::move(point)};
}

void PosetBallSampler::Sample(Stream& rng, std::span<double> out) const {
  if (static_cast<int>(out.size()) != dimension()) {
    throw ValidationError("output span has the wrong dimension");
  }
  const ExtendedBipartition eb = bipartitions_.Sample(rng);
  const Simplex simplex = ChainsToSimplex(
      rooted_, BipartitionToChainsUnchecked(rooted_.stripped(), eb));
  SampleSimplex(simplex, rng, out);
}

std::vector<double> PosetBallSampler::Sample(Stream& rng) const {
  std::vector<double> out(dimension());
  Sample(rng, out);
  return out;
}

BallSample PosetBallSampler::SampleTagged(Stream& rng) const {
  BallSample s;
  s.source = BallSource::kPosetBall;
  s.seed = rng.seed();
  s.stream_index = rng.stream_index();
  s.draw_index = rng.draws();
  s.point = Sample(rng);
  return s;
}

std::vector<double> SamplePosetBall(const RootedPoset& rooted, Stream& rng,
                                    MaximalPolicy policy) {
  return PosetBallSampler(rooted, policy).Sample(rng);
}

void ValidateLpBall(const LpBall& ball) {
  if (ball.dimension < 1) throw ValidationError("ball dimension must be >= 1");
  if (!(ball.p >= 1.0)) throw ValidationError("ball exponent p must be >= 1");
  if (!(ball.radius > 0.0) || !std::isfinite(ball.radius)) {
    throw ValidationError("ball radius must be positive and finite");
  }
}

void SampleLpBall(const LpBall& ball, Stream& rng, std::span<double> out) {
  ValidateLpBall(ball);
  if (static_cast<int>(out.size()) != ball.dimension) {
    throw ValidationError("output span has the wrong dimension");
  }
  if (std::isinf(ball.p)) {
    for (double& x : out) x = ball.radius * (2.0 * rng.Uniform() - 1.0);
    return;
  }
  const double p = ball.p;
  double sum = 0.0;
  for (double& x : out) {
    // |g|^p ~ Gamma(1/p), so |g| = Gamma(1/p)^(1/p).
    const double gp = rng.StandardGamma(1.0 / p);
    sum += gp;
    const double magnitude = std::pow(gp, 1.0 / p);
    x = rng.Coin() ? magnitude : -magnitude;
  }
  sum += rng.StandardExponential();
  const double scale = ball.radius / std::pow(sum, 1.0 / p);
  for (double& x : out) x *= scale;
}

std::vector<double> SampleLpBall(const LpBall& ball, Stream& rng) {
  std::vector<double> out(ball.dimension);
  SampleLpBall(ball, rng, out);
  return out;
}

BallSample SampleLpBallTagged(const LpBall& ball, Stream& rng) {
  BallSample s;
  s.source = BallSource::kLpBall;
  s.seed = rng.seed();
  s.stream_index = rng.stream_index();
  s.draw_index = rng.draws();
  s.point = SampleLpBall(ball, rng);
  return s;
}

double LpNorm(std::span<const double> x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

double SquaredNorm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace posetdp
