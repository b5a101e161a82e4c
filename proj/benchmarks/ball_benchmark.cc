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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "posetdp/ball.h"
#include "posetdp/bipartition.h"
#include "posetdp/randposet.h"
#include "posetdp/rng.h"

namespace posetdp {
namespace {

Poset GraphOrder(int d) {
  Stream rng(kDefaultSeed, d);
  return RandomGraphOrder(d, 0.05, rng);
}

void BM_PosetBallSample(benchmark::State& state) {
  const RootedPoset rooted = AugmentRoot(GraphOrder(static_cast<int>(state.range(0))));
  const PosetBallSampler sampler(rooted, MaximalPolicy::kChildlessPreferred);
  std::vector<double> out(rooted.dimension());
  Stream rng(1);
  for (auto _ : state) {
    sampler.Sample(rng, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PosetBallSample)
    ->RangeMultiplier(2)
    ->Range(125, 2000)
    ->Unit(benchmark::kMicrosecond)
    ->Complexity(benchmark::oNSquared);

void BM_BipartitionSample(benchmark::State& state) {
  const Poset p = GraphOrder(static_cast<int>(state.range(0)));
  const auto policy = static_cast<MaximalPolicy>(state.range(1));
  const BipartitionSampler sampler(p, policy);
  Stream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.Sample(rng));
}
BENCHMARK(BM_BipartitionSample)
    ->ArgsProduct({{100, 400},
                   {static_cast<int>(MaximalPolicy::kFirstFound),
                    static_cast<int>(MaximalPolicy::kChildlessPreferred),
                    static_cast<int>(MaximalPolicy::kRandomMaximal)}})
    ->Unit(benchmark::kMicrosecond);

void BM_ExactSmallSample(benchmark::State& state) {
  const Poset p = GraphOrder(static_cast<int>(state.range(0)));
  const BipartitionSampler sampler(p, MaximalPolicy::kExactSmall,
                                   kMaxExactSize);
  Stream rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.Sample(rng));
}
BENCHMARK(BM_ExactSmallSample)->Arg(10)->Arg(15)->Arg(20);

void BM_LpBallSample(benchmark::State& state) {
  const LpBall ball{static_cast<int>(state.range(0)), 1.5, 1.0};
  std::vector<double> out(ball.dimension);
  Stream rng(4);
  for (auto _ : state) {
    SampleLpBall(ball, rng, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_LpBallSample)->Arg(10)->Arg(1000);

}  // namespace
}  // namespace posetdp
