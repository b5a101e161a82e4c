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

// Random posets: a Markov chain on labeled DAGs and a random graph order.

#ifndef POSETDP_RANDPOSET_H_
#define POSETDP_RANDPOSET_H_

#include <cstdint>

#include "posetdp/poset.h"
#include "posetdp/rng.h"

namespace posetdp {

// 10 * d^4 moves.
std::uint64_t DefaultDagSteps(int d);

// Arc matrix of a labeled DAG; arcs[i].test(j) means i -> j, read as
// p_i <= p_j.
class DagChain {
 public:
  explicit DagChain(int d);

  int size() const { return static_cast<int>(arcs_.size()); }
  const BitMatrix& arcs() const { return arcs_; }
  std::uint64_t steps() const { return steps_; }

  // One move: pick an ordered pair (i, j), i != j, uniformly. Remove i -> j
  // if present, otherwise add it unless j already reaches i.
  void Step(Stream& rng);
  void Run(Stream& rng, std::uint64_t steps);

 private:
  void AddArc(int x, int y);
  void RemoveArc(int x, int y);

  BitMatrix arcs_;
  // Reflexive reachability and its transpose, maintained incrementally so
  // the cycle test is a single bit lookup.
  BitMatrix reach_;
  BitMatrix anc_;
  std::uint64_t steps_ = 0;
  std::vector<int> order_;
  std::vector<int> weight_;
  Bitset scratch_;
  Bitset removed_;
};

// State of the chain after `steps` moves from the empty graph.
BitMatrix RandomDag(int d, Stream& rng, std::uint64_t steps);
inline BitMatrix RandomDag(int d, Stream& rng) {
  return RandomDag(d, rng, DefaultDagSteps(d));
}

// Reflexive-transitive closure of the arcs. Throws CycleError on a cycle.
Poset DagToPoset(const BitMatrix& arcs);

// Random graph order: each pair i < j gets the arc i -> j independently
// with probability `edge_probability`, then the closure is taken.
Poset RandomGraphOrder(int d, double edge_probability, Stream& rng);

}  // namespace posetdp

#endif  // POSETDP_RANDPOSET_H_
