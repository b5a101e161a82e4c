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

#include "posetdp/mechanism.h"

#include <cmath>
#include <string>

#include "posetdp/error.h"

namespace posetdp {

void ValidateConfig(const MechanismConfig& config) {
  if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) {
    throw ValidationError("epsilon must be positive and finite");
  }
  if (!(config.sensitivity > 0.0) || !std::isfinite(config.sensitivity)) {
    throw ValidationError("sensitivity must be positive and finite");
  }
}

CountVector Aggregate(const Poset& poset,
                      std::span<const std::vector<std::uint8_t>> records) {
  CountVector out;
  out.counts.assign(poset.size(), 0);
  for (std::size_t r = 0; r < records.size(); ++r) {
    bool ok = false;
    try {
      ok = IsPartiallyOrderedVector(poset, records[r]);
    } catch (const ValidationError& e) {
      throw RecordError(r, "record " + std::to_string(r) + ": " + e.what());
    }
    if (!ok) {
      throw RecordError(r, "record " + std::to_string(r) +
                               " violates the partial order");
    }
    for (int i = 0; i < poset.size(); ++i) out.counts[i] += records[r][i];
  }
  out.record_count = static_cast<std::int64_t>(records.size());
  return out;
}

void ValidateCounts(const Poset& poset, const CountVector& counts) {
  const int d = poset.size();
  if (static_cast<int>(counts.counts.size()) != d) {
    throw ValidationError("count vector has length " +
                          std::to_string(counts.counts.size()) +
                          ", poset has " + std::to_string(d) + " elements");
  }
  for (int i = 0; i < d; ++i) {
    const std::int64_t c = counts.counts[i];
    if (c < 0 || c > counts.record_count) {
      throw RecordError(i, "count " + std::to_string(i) +
                               " is outside [0, record_count]");
    }
    poset.UpSet(i).ForEach([&](int j) {
      if (counts.counts[j] < c) {
        throw RecordError(i, "count " + std::to_string(i) + " exceeds count " +
                                 std::to_string(j) + " above it");
      }
    });
  }
}

std::vector<double> KNormNoise(int dimension, const BallSamplerFn& ball,
                               const MechanismConfig& config, Stream& rng) {
  ValidateConfig(config);
  // Multiplying g by (sensitivity / epsilon) last keeps epsilon -> 2 epsilon
  // an exact halving of every coordinate.
  const double radius =
      rng.StandardGamma(dimension + 1.0) * (config.sensitivity / config.epsilon);
  std::vector<double> z(dimension);
  ball(rng, z);
  for (double& v : z) v = radius * v;
  return z;
}

PosetMechanism::PosetMechanism(const Poset& poset, MechanismConfig config)
    : poset_(poset),
      config_(config),
      ball_(AugmentRoot(poset),
            config.policy.value_or(DefaultPolicy(poset.size()))) {
  ValidateConfig(config_);
}

std::vector<double> PosetMechanism::RootedNoise(Stream& rng) const {
  return KNormNoise(
      ball_.dimension(),
      [this](Stream& s, std::span<double> out) { ball_.Sample(s, out); },
      config_, rng);
}

std::vector<double> PosetMechanism::Noise(Stream& rng) const {
  std::vector<double> rooted = RootedNoise(rng);
  return {rooted.begin() + 1, rooted.end()};
}

std::vector<double> PosetMechanism::Release(const CountVector& counts,
                                            Stream& rng) const {
  ValidateCounts(poset_, counts);
  // The root coordinate would carry record_count; it is dropped after
  // noising, so only the d question coordinates are formed here.
  std::vector<double> noise = Noise(rng);
  for (int i = 0; i < dimension(); ++i) {
    noise[i] += static_cast<double>(counts.counts[i]);
  }
  return noise;
}

std::vector<double> PrivateCount(const Poset& poset, const CountVector& counts,
                                 const MechanismConfig& config) {
  Stream rng(config.seed);
  return PosetMechanism(poset, config).Release(counts, rng);
}

std::vector<double> LinfNoise(int dimension, const MechanismConfig& config,
                              Stream& rng) {
  const LpBall cube{dimension, kInfinity, 1.0};
  return KNormNoise(
      dimension,
      [&cube](Stream& s, std::span<double> out) { SampleLpBall(cube, s, out); },
      config, rng);
}

std::vector<double> LaplaceNoise(int dimension, const MechanismConfig& config,
                                 Stream& rng) {
  const LpBall cross{dimension, 1.0, 1.0};
  MechanismConfig l1 = config;
  l1.sensitivity = config.sensitivity * dimension;
  return KNormNoise(
      dimension,
      [&cross](Stream& s, std::span<double> out) {
        SampleLpBall(cross, s, out);
      },
      l1, rng);
}

namespace {

std::vector<double> AddNoise(std::span<const double> counts,
                             std::vector<double> noise) {
  for (std::size_t i = 0; i < noise.size(); ++i) noise[i] += counts[i];
  return noise;
}

}  // namespace

std::vector<double> LinfMechanism(std::span<const double> counts,
                                  const MechanismConfig& config, Stream& rng) {
  return AddNoise(counts,
                  LinfNoise(static_cast<int>(counts.size()), config, rng));
}

std::vector<double> LaplaceMechanism(std::span<const double> counts,
                                     const MechanismConfig& config,
                                     Stream& rng) {
  return AddNoise(counts,
                  LaplaceNoise(static_cast<int>(counts.size()), config, rng));
}

}  // namespace posetdp
