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

#include "benchmark/benchmark.h"
#include "posetdp/randposet.h"
#include "posetdp/rng.h"

namespace posetdp {
namespace {

void BM_DagChainStep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  DagChain chain(d);
  Stream rng(5);
  chain.Run(rng, DefaultDagSteps(d) / 10);  // start near stationarity
  for (auto _ : state) chain.Step(rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DagChainStep)->Arg(10)->Arg(20)->Arg(40);

void BM_DagToPoset(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Stream rng(6);
  const BitMatrix arcs = RandomDag(d, rng, 100'000);
  for (auto _ : state) benchmark::DoNotOptimize(DagToPoset(arcs));
}
BENCHMARK(BM_DagToPoset)->Arg(40);

}  // namespace
}  // namespace posetdp
