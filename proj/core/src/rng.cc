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

#include "posetdp/rng.h"

#include <cmath>

namespace posetdp {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Odd increment with enough bit transitions, as in SplittableRandom.
std::uint64_t MixGamma(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
  z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
  z = (z ^ (z >> 33)) | 1ULL;
  const int transitions = __builtin_popcountll(z ^ (z >> 1));
  return transitions < 24 ? z ^ 0xAAAAAAAAAAAAAAAAULL : z;
}

}  // namespace

std::uint64_t Stream::Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  const std::uint64_t h = Mix(seed ^ Mix(stream_index + kGolden));
  key_ = Mix(h + 0x632BE59BD9B4E019ULL);
  gamma_ = MixGamma(h + kGolden);
}

Stream Stream::Split(std::uint64_t child_index) const {
  return Stream(Mix(key_ ^ gamma_), child_index);
}

std::uint64_t Stream::UniformInt(std::uint64_t n) {
  // Lemire's multiply-shift with rejection of the biased low region.
  std::uint64_t x = (*this)();
  Uint128 m = static_cast<Uint128>(x) * n;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<Uint128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Uint128 Stream::UniformInt128(Uint128 n) {
  if ((n >> 64) == 0) return UniformInt(static_cast<std::uint64_t>(n));
  // Mask-and-reject on the bit length of n - 1.
  const Uint128 top = n - 1;
  const int high_bits = 64 - __builtin_clzll(static_cast<std::uint64_t>(top >> 64));
  const std::uint64_t high_mask =
      high_bits == 64 ? ~0ULL : ((1ULL << high_bits) - 1);
  while (true) {
    const Uint128 hi = (*this)() & high_mask;
    const Uint128 v = (hi << 64) | (*this)();
    if (v < n) return v;
  }
}

double Stream::StandardNormal() {
  // Marsaglia polar method; the spare value is discarded so each call
  // consumes a whole number of draws and streams stay easy to reason about.
  while (true) {
    const double u = 2.0 * Uniform() - 1.0;
    const double v = 2.0 * Uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double Stream::StandardExponential() { return -std::log(UniformOpen()); }

double Stream::StandardGamma(double shape) {
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a + 1) * U^(1/a).
    const double g = StandardGamma(shape + 1.0);
    return g * std::pow(UniformOpen(), 1.0 / shape);
  }
  // Marsaglia and Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x;
    double v;
    do {
      x = StandardNormal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = UniformOpen();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace posetdp
