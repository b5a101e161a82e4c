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

// Finite posets stored as reflexive, transitively closed relation matrices.
//
// Row i of the closure is the up-set {j : p_i <= p_j}; a transposed copy
// holds the down-sets. Both are kept so that "parents of v" and "children of
// v" are O(d / 64) word scans.

#ifndef POSETDP_POSET_H_
#define POSETDP_POSET_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetdp/bitset.h"

namespace posetdp {

// A relation p_first <= p_second.
using Relation = std::pair<int, int>;
// Square binary matrix as one Bitset per row.
using BitMatrix = std::vector<Bitset>;

BitMatrix IdentityMatrix(int d);

// Reflexive-transitive closure of `relations` (row i, column j set means
// i <= j). Throws CycleError if two distinct elements end up mutually related.
BitMatrix TransitiveClosure(BitMatrix relations);

class Poset {
 public:
  Poset() = default;

  // Closes `relations` and validates indices and labels. `labels` may be
  // empty; otherwise it must have d distinct entries.
  static Poset FromRelations(int d, std::span<const Relation> relations,
                             std::vector<std::string> labels = {});
  // `closure` must already be reflexive and transitive; it is validated.
  static Poset FromClosure(BitMatrix closure,
                           std::vector<std::string> labels = {});

  static Poset Antichain(int n);
  // Total order 0 <= 1 <= ... <= n-1.
  static Poset Chain(int n);

  int size() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }

  // p_i <= p_j.
  bool Leq(int i, int j) const { return up_[i].test(j); }
  bool Less(int i, int j) const { return i != j && up_[i].test(j); }
  bool Comparable(int i, int j) const { return Leq(i, j) || Leq(j, i); }

  // {j : p_i <= p_j}, including i.
  const Bitset& UpSet(int i) const { return up_[i]; }
  // {j : p_j <= p_i}, including i.
  const Bitset& DownSet(int i) const { return down_[i]; }
  const BitMatrix& closure() const { return up_; }

  const std::vector<std::string>& labels() const { return labels_; }
  // Label if present, else the decimal index.
  std::string Label(int i) const;

  // Induced subposet on `keep`, reindexed 0..k-1 in increasing order.
  Poset Induced(std::span<const int> keep) const;

  // Stable 64-bit FNV-1a digest of (d, closure); labels are ignored.
  std::uint64_t Hash() const;
  std::string HashHex() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.up_ == b.up_;
  }

 private:
  void Validate() const;
  void BuildDown();

  BitMatrix up_;
  BitMatrix down_;
  std::vector<std::string> labels_;
};

// A poset with an element above every other one, always at index 0.
class RootedPoset {
 public:
  // Throws ValidationError unless every element is <= element 0.
  explicit RootedPoset(Poset poset);

  int dimension() const { return poset_.size(); }
  const Poset& poset() const { return poset_; }
  // The poset with the root removed; element i here is element i + 1 above.
  const Poset& stripped() const { return stripped_; }

 private:
  Poset poset_;
  Poset stripped_;
};

// Adds a new maximum at index 0 and shifts the original elements to 1..d.
// A root is added even when the input already has a unique maximum.
RootedPoset AugmentRoot(const Poset& poset);

// Strict covering relations (Hasse diagram edges) of the poset.
BitMatrix TransitiveReduction(const Poset& poset);
std::vector<Relation> ReductionEdges(const Poset& poset);

struct PosetMetrics {
  int depth = 0;               // edges on the longest chain
  int reduced_edge_count = 0;  // edges of the transitive reduction
};
PosetMetrics ComputeMetrics(const Poset& poset);

// x has length d with 0/1 entries; true iff p_i <= p_j implies x_i <= x_j.
// Throws ValidationError on a length mismatch.
bool IsPartiallyOrderedVector(const Poset& poset,
                              std::span<const std::uint8_t> x);

// Elements with no strict parent.
std::vector<int> MaximalElements(const Poset& poset);
// Elements with no strict child.
std::vector<int> MinimalElements(const Poset& poset);
// All elements >= some member of `s`.
Bitset UpClosure(const Poset& poset, const Bitset& s);
// Members of `s` with no strictly smaller member of `s`.
Bitset MinimalOf(const Poset& poset, const Bitset& s);
// True if `s` equals its own up-closure.
bool IsFilter(const Poset& poset, const Bitset& s);

bool IsAntichain(const Poset& poset);
bool IsTotalOrder(const Poset& poset);

}  // namespace posetdp

#endif  // POSETDP_POSET_H_
