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

// The triangulation of the poset ball indexed by extended bipartitions.
//
// A bipartition (A, B) of the root-stripped poset maps to two chains of
// filters: the plus chain starts at the empty filter and grows by the
// up-closure of A's elements read right to left, likewise the minus chain
// from B. Each filter J in the plus chain contributes the vertex
// (+1, 1_J) and each one in the minus chain contributes (-1, -1_J), with the
// root coordinate first. The n + 2 vertices span a simplex of volume 2/d!
// in the d = n + 1 dimensional ball.

#ifndef POSETDP_TRIANGULATION_H_
#define POSETDP_TRIANGULATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "posetdp/bipartition.h"
#include "posetdp/bitset.h"
#include "posetdp/int128.h"
#include "posetdp/poset.h"

namespace posetdp {

// Filters strictly increasing by inclusion, first one empty.
struct FilterChain {
  std::vector<Bitset> filters;
  friend bool operator==(const FilterChain&, const FilterChain&) = default;
};

struct FilterChainPair {
  FilterChain plus;
  FilterChain minus;
  friend bool operator==(const FilterChainPair&,
                         const FilterChainPair&) = default;
};

// Checks every FilterChain/FilterChainPair invariant: upward closure, strict
// growth from the empty filter, single-element steps of the minimal sets,
// non-interference and total length n + 2. Throws ValidationError naming the
// first violation.
void ValidateChainPair(const Poset& poset, const FilterChainPair& pair);
bool IsValidChainPair(const Poset& poset, const FilterChainPair& pair);

// O(n^2 / 64) with word-packed filters. Throws ValidationError if `eb` is
// not a valid bipartition of `poset`.
FilterChainPair BipartitionToChains(const Poset& poset,
                                    const ExtendedBipartition& eb);
// Skips validation of `eb`; used on the sampling path.
FilterChainPair BipartitionToChainsUnchecked(const Poset& poset,
                                             const ExtendedBipartition& eb);

// Inverse of BipartitionToChains. Throws ValidationError on an invalid pair.
ExtendedBipartition ChainsToBipartition(const Poset& poset,
                                        const FilterChainPair& pair);

// d + 1 integer vertices in {-1, 0, 1}^d, stored row-major.
class Simplex {
 public:
  Simplex(int dimension, std::vector<std::int8_t> vertices);

  int dimension() const { return dimension_; }
  int vertex_count() const { return dimension_ + 1; }
  std::span<const std::int8_t> vertex(int k) const {
    return {vertices_.data() + static_cast<std::size_t>(k) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }
  const std::vector<std::int8_t>& data() const { return vertices_; }

 private:
  int dimension_;
  std::vector<std::int8_t> vertices_;
};

// Vertices of the simplex for a pair built on rooted.stripped(): plus-chain
// vertices first, then minus-chain vertices, in chain order.
Simplex ChainsToSimplex(const RootedPoset& rooted, const FilterChainPair& pair);

// Exact |det| of the d difference vectors v_k - v_0, by fraction-free
// (Bareiss) elimination in 128-bit integers.
Int128 SimplexAbsDeterminant(const Simplex& simplex);

// Barycentric coordinates of `point` with respect to the simplex, by
// Gaussian elimination with partial pivoting.
std::vector<double> BarycentricCoordinates(const Simplex& simplex,
                                           std::span<const double> point);

}  // namespace posetdp

#endif  // POSETDP_TRIANGULATION_H_
