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

// Uniform samplers for simplices, the poset ball and l_p balls.

#ifndef POSETDP_BALL_H_
#define POSETDP_BALL_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "posetdp/bipartition.h"
#include "posetdp/poset.h"
#include "posetdp/rng.h"
#include "posetdp/triangulation.h"

namespace posetdp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class BallSource { kPosetBall, kLpBall };

struct BallSample {
  std::vector<double> point;
  BallSource source = BallSource::kPosetBall;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
  std::uint64_t draw_index = 0;  // stream position before the draw
};

// Uniform point of the simplex: the d + 1 spacings of d sorted uniforms are
// used as barycentric weights. `out` must have length simplex.dimension().
void SampleSimplex(const Simplex& simplex, Stream& rng, std::span<double> out);
std::vector<double> SampleSimplex(const Simplex& simplex, Stream& rng);

// Uniform sampler for the poset ball of a rooted poset: bipartition of the
// stripped poset, then chains, then simplex, then a point of the simplex.
class PosetBallSampler {
 public:
  PosetBallSampler(const RootedPoset& rooted, MaximalPolicy policy,
                   int exact_cap = kDefaultExactCap);

  int dimension() const { return rooted_.dimension(); }
  MaximalPolicy policy() const { return bipartitions_.policy(); }
  const RootedPoset& rooted() const { return rooted_; }

  void Sample(Stream& rng, std::span<double> out) const;
  std::vector<double> Sample(Stream& rng) const;
  BallSample SampleTagged(Stream& rng) const;

  struct Trace {
    ExtendedBipartition bipartition;
    Simplex simplex;
    std::vector<double> point;
  };
  // Same draw as Sample, also returning the intermediate objects.
  Trace SampleWithTrace(Stream& rng) const;

 private:
  RootedPoset rooted_;
  BipartitionSampler bipartitions_;
};

// One-shot convenience wrapper around PosetBallSampler.
std::vector<double> SamplePosetBall(const RootedPoset& rooted, Stream& rng,
                                    MaximalPolicy policy);

struct LpBall {
  int dimension = 1;
  double p = 2.0;  // in [1, inf]; kInfinity selects the cube
  double radius = 1.0;
};

// Throws ValidationError if dimension < 1, p < 1 or radius <= 0.
void ValidateLpBall(const LpBall& ball);

// Finite p: coordinates with density proportional to exp(-|t|^p), divided by
// (sum |g_i|^p + E)^(1/p) with E ~ Exp(1). p = inf: independent uniforms.
void SampleLpBall(const LpBall& ball, Stream& rng, std::span<double> out);
std::vector<double> SampleLpBall(const LpBall& ball, Stream& rng);
BallSample SampleLpBallTagged(const LpBall& ball, Stream& rng);

// l_p norm; p = kInfinity gives the max norm.
double LpNorm(std::span<const double> x, double p);
double SquaredNorm(std::span<const double> x);

}  // namespace posetdp

#endif  // POSETDP_BALL_H_
