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

// K-norm mechanisms for counting partially ordered binary records.
//
// K-norm noise with norm ball K has density proportional to
// exp(-epsilon * ||y||_K / sensitivity). It is drawn as r * z with z uniform
// on K and r ~ Gamma(n + 1, sensitivity / epsilon), n the dimension.

#ifndef POSETDP_MECHANISM_H_
#define POSETDP_MECHANISM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "posetdp/ball.h"
#include "posetdp/bipartition.h"
#include "posetdp/poset.h"
#include "posetdp/rng.h"

namespace posetdp {

struct MechanismConfig {
  double epsilon = 1.0;
  // Multiplier on the norm sensitivity. The poset-ball norm and the l_inf
  // norm have sensitivity 1 for binary records and l_1 has sensitivity d;
  // this value scales all of them.
  double sensitivity = 1.0;
  std::optional<MaximalPolicy> policy;  // DefaultPolicy(n) when unset
  std::uint64_t seed = kDefaultSeed;
};

// Throws ValidationError unless epsilon > 0 and sensitivity > 0 (finite).
void ValidateConfig(const MechanismConfig& config);

struct CountVector {
  std::vector<std::int64_t> counts;
  std::int64_t record_count = 0;
  friend bool operator==(const CountVector&, const CountVector&) = default;
};

// Coordinate-wise sum. Throws RecordError carrying the index of the first
// record that is not a partially ordered binary vector.
CountVector Aggregate(const Poset& poset,
                      std::span<const std::vector<std::uint8_t>> records);

// Throws RecordError with the offending coordinate index if the counts are
// negative, exceed record_count, or decrease along a relation.
void ValidateCounts(const Poset& poset, const CountVector& counts);

// Writes a uniform sample of the unit norm ball into the span.
using BallSamplerFn = std::function<void(Stream&, std::span<double>)>;

// r * z with z from `ball` and r ~ Gamma(dimension + 1) * sensitivity /
// epsilon. Coupled streams give noise that scales exactly as 1 / epsilon.
std::vector<double> KNormNoise(int dimension, const BallSamplerFn& ball,
                               const MechanismConfig& config, Stream& rng);

// The poset-ball mechanism. The poset is augmented with a root whose
// coordinate carries the record count; that coordinate is dropped from the
// release.
class PosetMechanism {
 public:
  PosetMechanism(const Poset& poset, MechanismConfig config);

  int dimension() const { return poset_.size(); }
  const MechanismConfig& config() const { return config_; }
  MaximalPolicy policy() const { return ball_.policy(); }

  // (d + 1)-dimensional noise, root coordinate first.
  std::vector<double> RootedNoise(Stream& rng) const;
  // d-dimensional noise with the root coordinate dropped.
  std::vector<double> Noise(Stream& rng) const;
  // counts + noise (root dropped). Validates the counts first.
  std::vector<double> Release(const CountVector& counts, Stream& rng) const;

 private:
  Poset poset_;
  MechanismConfig config_;
  PosetBallSampler ball_;
};

// Release with a stream derived from config.seed.
std::vector<double> PrivateCount(const Poset& poset, const CountVector& counts,
                                 const MechanismConfig& config);

// Baselines: K-norm with the l_inf ball (sensitivity 1) and with the l_1
// ball (sensitivity d, i.e. Laplace noise).
std::vector<double> LinfNoise(int dimension, const MechanismConfig& config,
                              Stream& rng);
std::vector<double> LaplaceNoise(int dimension, const MechanismConfig& config,
                                 Stream& rng);
std::vector<double> LinfMechanism(std::span<const double> counts,
                                  const MechanismConfig& config, Stream& rng);
std::vector<double> LaplaceMechanism(std::span<const double> counts,
                                     const MechanismConfig& config,
                                     Stream& rng);

}  // namespace posetdp

#endif  // POSETDP_MECHANISM_H_
