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

// Extended bipartitions: a split of the ground set into two parts, each
// listed in the order of some linear extension of its induced subposet.
//
// Two samplers live here. The recursive sampler removes a maximal element,
// samples the rest, and reinserts the element at a uniformly chosen valid
// placement; it runs in O(d^2) but its output law depends on which maximal
// element is removed whenever the number of placements varies. The exact
// sampler draws from the true uniform law using subset dynamic programming
// and is limited to small posets.

#ifndef POSETDP_BIPARTITION_H_
#define POSETDP_BIPARTITION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetdp/int128.h"
#include "posetdp/poset.h"
#include "posetdp/rng.h"

namespace posetdp {

struct ExtendedBipartition {
  std::vector<int> a;  // linear extension of the induced subposet on A
  std::vector<int> b;  // linear extension of the induced subposet on B

  friend bool operator==(const ExtendedBipartition&,
                         const ExtendedBipartition&) = default;
  friend auto operator<=>(const ExtendedBipartition&,
                          const ExtendedBipartition&) = default;
};

// True if a and b partition the ground set and each respects the order.
bool IsValidBipartition(const Poset& poset, const ExtendedBipartition& eb);

// "A: i,j | B: k" with element indices.
std::string FormatBipartition(const ExtendedBipartition& eb);

enum class MaximalPolicy {
  kFirstFound,          // walk up from the lowest-index remaining element
  kChildlessPreferred,  // a maximal element with no children, if any
  kRandomMaximal,       // uniform over the current maximal elements
  kExactSmall,          // exact uniform draw (small posets only)
};

std::string_view PolicyName(MaximalPolicy policy);
// Accepts "first-found", "childless-preferred", "random-maximal",
// "exact-small". Throws ValidationError otherwise.
MaximalPolicy ParsePolicy(std::string_view name);

// Largest poset for which kExactSmall is chosen automatically.
inline constexpr int kDefaultExactCap = 10;
// Hard limit of the exact sampler's subset tables.
inline constexpr int kMaxExactSize = 20;

// kExactSmall when n <= kDefaultExactCap, else kChildlessPreferred.
MaximalPolicy DefaultPolicy(int n);

// Where to put a new element: side 0 is A, side 1 is B; `position` is the
// index the element occupies after insertion.
struct Placement {
  int side = 0;
  int position = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
};

// All valid placements of maximal element v into `eb`, a bipartition of
// poset - v (indices refer to `poset`; v must not appear in eb). Positions
// lie strictly right of the extension-largest child of v on each side, or
// anywhere on a side without children. Throws ValidationError if v is not
// maximal.
std::vector<Placement> ValidPlacements(const Poset& poset,
                                       const ExtendedBipartition& eb, int v);

ExtendedBipartition ApplyPlacement(const ExtendedBipartition& eb, int v,
                                   const Placement& placement);

// Number of linear extensions, via subset dynamic programming.
// Requires n <= kMaxExactSize.
Uint128 CountLinearExtensions(const Poset& poset);
// Number of extended bipartitions. Requires n <= kMaxExactSize.
Uint128 CountExtendedBipartitions(const Poset& poset);

inline constexpr int kDefaultEnumerationCap = 12;
inline constexpr std::uint64_t kMaxEnumerated = 20'000'000;

// Every extended bipartition exactly once, sorted. Throws CapExceededError
// if poset.size() > cap or the count exceeds kMaxEnumerated.
std::vector<ExtendedBipartition> EnumerateBipartitions(
    const Poset& poset, int cap = kDefaultEnumerationCap);

// Exact uniform sampler backed by tables over all 2^n subsets.
class ExactBipartitionSampler {
 public:
  // Throws CapExceededError if poset.size() > cap (cap <= kMaxExactSize).
  explicit ExactBipartitionSampler(const Poset& poset,
                                   int cap = kDefaultExactCap);

  ExtendedBipartition Sample(Stream& rng) const;
  Uint128 total() const { return total_; }

 private:
  void SampleExtension(std::uint32_t mask, Stream& rng,
                       std::vector<int>& out) const;

  int n_;
  std::vector<std::uint32_t> up_mask_;       // strict up-set per element
  std::vector<Uint128> extensions_;  // per subset
  std::vector<Uint128> cumulative_;  // over subsets taken as A
  Uint128 total_ = 0;
};

// Samples extended bipartitions of a fixed poset. Holds the per-poset
// preprocessing so repeated draws cost O(d^2) each (or the exact table
// lookup). The empty poset yields the single bipartition ((), ()).
class BipartitionSampler {
 public:
  BipartitionSampler(const Poset& poset, MaximalPolicy policy,
                     int exact_cap = kDefaultExactCap);

  ExtendedBipartition Sample(Stream& rng) const;

  MaximalPolicy policy() const { return policy_; }
  const Poset& poset() const { return *poset_; }

 private:
  ExtendedBipartition SampleRecursive(Stream& rng) const;
  int SelectMaximal(const std::vector<int>& parents_left,
                    const std::vector<std::uint8_t>& alive, int lowest_alive,
                    Stream& rng, std::vector<int>& scratch) const;

  std::shared_ptr<const Poset> poset_;
  MaximalPolicy policy_;
  std::vector<int> strict_parent_count_;
  std::vector<std::uint8_t> has_children_;
  std::optional<ExactBipartitionSampler> exact_;
};

// One-shot convenience wrapper. Throws ValidationError on an empty poset.
ExtendedBipartition SampleBipartition(const Poset& poset, Stream& rng,
                                      MaximalPolicy policy);

}  // namespace posetdp

#endif  // POSETDP_BIPARTITION_H_
