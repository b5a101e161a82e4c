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

#include "posetdp/randposet.h"

#include <algorithm>
#include <utility>

#include "posetdp/error.h"

namespace posetdp {

std::uint64_t DefaultDagSteps(int d) {
  const std::uint64_t n = d < 1 ? 1 : static_cast<std::uint64_t>(d);
  return 10 * n * n * n * n;
}

DagChain::DagChain(int d) {
  if (d < 0) throw ValidationError("negative vertex count");
  arcs_.assign(d, Bitset(d));
  reach_ = IdentityMatrix(d);
  anc_ = IdentityMatrix(d);
  weight_.assign(d, 1);
  scratch_ = Bitset(d);
  removed_ = Bitset(d);
}

void DagChain::AddArc(int x, int y) {
  arcs_[x].set(y);
  if (reach_[x].test(y)) return;  // already implied
  // New paths are exactly u ~> x -> y ~> w.
  // Neither row is written below: y is not an ancestor of x and x is not a
  // descendant of y.
  const Bitset& down = reach_[y];
  const Bitset& up = anc_[x];
  up.ForEach([&](int u) {
    reach_[u] |= down;
    weight_[u] = reach_[u].count();
  });
  down.ForEach([&](int w) { anc_[w] |= up; });
}

void DagChain::RemoveArc(int x, int y) {
  arcs_[x].reset(y);
  // Another path x ~> y reroutes every path that used the arc.
  if (arcs_[x].Intersects(anc_[y])) return;
  // Recompute the ancestors of x, descendants first. A strict descendant
  // has a strictly smaller reachable set, so the old sizes give the order.
  order_ = anc_[x].ToIndices();
  std::sort(order_.begin(), order_.end(), [this](int a, int b) {
    return weight_[a] != weight_[b] ? weight_[a] < weight_[b] : a < b;
  });
  for (int u : order_) {
    scratch_.clear();
    scratch_.set(u);
    arcs_[u].ForEach([&](int w) { scratch_ |= reach_[w]; });
    removed_ = reach_[u];
    removed_.Subtract(scratch_);
    removed_.ForEach([&](int v) { anc_[v].reset(u); });
    std::swap(reach_[u], scratch_);
  }
  for (int u : order_) weight_[u] = reach_[u].count();
}

void DagChain::Step(Stream& rng) {
  ++steps_;
  const int d = size();
  if (d < 2) return;
  const int i = static_cast<int>(rng.UniformInt(d));
  int j = static_cast<int>(rng.UniformInt(d - 1));
  if (j >= i) ++j;
  if (arcs_[i].test(j)) {
    RemoveArc(i, j);
  } else if (!reach_[j].test(i)) {
    AddArc(i, j);
  }
}

void DagChain::Run(Stream& rng, std::uint64_t steps) {
  for (std::uint64_t s = 0; s < steps; ++s) Step(rng);
}

BitMatrix RandomDag(int d, Stream& rng, std::uint64_t steps) {
  if (steps < 1) throw ValidationError("steps must be >= 1");
  DagChain chain(d);
  chain.Run(rng, steps);
  return chain.arcs();
}

Poset DagToPoset(const BitMatrix& arcs) {
  const int d = static_cast<int>(arcs.size());
  BitMatrix relations = IdentityMatrix(d);
  for (int i = 0; i < d; ++i) {
    if (arcs[i].size() != d) {
      throw ValidationError("arc matrix is not square");
    }
    relations[i] |= arcs[i];
  }
  return Poset::FromClosure(TransitiveClosure(std::move(relations)));
}

Poset RandomGraphOrder(int d, double edge_probability, Stream& rng) {
  if (d < 0) throw ValidationError("negative element count");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw ValidationError("edge probability must lie in [0, 1]");
  }
  BitMatrix relations = IdentityMatrix(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (rng.Uniform() < edge_probability) relations[i].set(j);
    }
  }
  return Poset::FromClosure(TransitiveClosure(std::move(relations)));
}

}  // namespace posetdp
