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

// Random streams and the handful of variates the samplers need.
//
// A Stream is keyed by (seed, stream index) and produces its n-th output as a
// pure function of the key and n, so parallel trials that each own a stream
// reproduce bit-for-bit regardless of scheduling. All distributions here are
// implemented locally rather than through <random> so outputs do not depend
// on the standard library vendor.

#ifndef POSETDP_RNG_H_
#define POSETDP_RNG_H_

#include <cstdint>
#include <limits>

#include "posetdp/int128.h"

namespace posetdp {

// Fixed default seed used when the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED'2026'0001ULL;

class Stream {
 public:
  using result_type = std::uint64_t;

  Stream(std::uint64_t seed, std::uint64_t stream_index);
  explicit Stream(std::uint64_t seed) : Stream(seed, 0) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  // Next raw 64-bit output.
  result_type operator()() {
    const std::uint64_t z = key_ + (++counter_) * gamma_;
    return Mix(z);
  }

  // Child stream; independent of this stream's position.
  Stream Split(std::uint64_t child_index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }
  std::uint64_t draws() const { return counter_; }

  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1); safe for logarithms.
  double UniformOpen() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }
  // Uniform integer in [0, n). Requires n > 0.
  std::uint64_t UniformInt(std::uint64_t n);
  // Uniform 128-bit integer in [0, n). Requires n > 0.
  Uint128 UniformInt128(Uint128 n);
  bool Coin() { return ((*this)() >> 63) != 0; }

  double StandardNormal();
  double StandardExponential();
  // Gamma(shape, scale = 1) for any shape > 0.
  double StandardGamma(double shape);

  static std::uint64_t Mix(std::uint64_t z);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
  std::uint64_t gamma_;
  std::uint64_t counter_ = 0;
};

}  // namespace posetdp

#endif  // POSETDP_RNG_H_
