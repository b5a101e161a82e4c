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

#include "posetdp/bipartition.h"

#include <algorithm>
#include <bit>

#include "posetdp/error.h"

namespace posetdp {
namespace {

using Mask = std::uint32_t;

// Strict up-sets (or down-sets) as 32-bit masks; requires n <= 32.
std::vector<Mask> StrictMasks(const Poset& poset, bool up) {
  const int n = poset.size();
  std::vector<Mask> masks(n, 0);
  for (int i = 0; i < n; ++i) {
    const Bitset& row = up ? poset.UpSet(i) : poset.DownSet(i);
    row.ForEach([&](int j) {
      if (j != i) masks[i] |= Mask{1} << j;
    });
  }
  return masks;
}

// e(S) = number of linear extensions of the subposet induced on S, for every
// subset S. An element m is a valid last element of S when nothing else in S
// lies above it.
std::vector<Uint128> ExtensionTable(const std::vector<Mask>& up_mask) {
  const int n = static_cast<int>(up_mask.size());
  std::vector<Uint128> table(std::size_t{1} << n, 0);
  table[0] = 1;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    Uint128 sum = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int m = std::countr_zero(rest);
      if ((up_mask[m] & s) == 0) sum += table[s ^ (Mask{1} << m)];
    }
    table[s] = sum;
  }
  return table;
}

void CheckTableSize(int n, int cap, const char* what) {
  if (n > cap || n > kMaxExactSize) {
    throw CapExceededError(std::string(what) + ": poset has " +
                           std::to_string(n) + " elements, cap is " +
                           std::to_string(std::min(cap, kMaxExactSize)));
  }
}

void EnumerateExtensions(const std::vector<Mask>& down_mask, Mask subset,
                         Mask placed, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (placed == subset) {
    out.push_back(prefix);
    return;
  }
  for (Mask rest = subset & ~placed; rest != 0; rest &= rest - 1) {
    const int m = std::countr_zero(rest);
    // All of m's children inside the subset must already be placed.
    if ((down_mask[m] & subset & ~placed) != 0) continue;
    prefix.push_back(m);
    EnumerateExtensions(down_mask, subset, placed | (Mask{1} << m), prefix,
                        out);
    prefix.pop_back();
  }
}

}  // namespace

bool IsValidBipartition(const Poset& poset, const ExtendedBipartition& eb) {
  const int n = poset.size();
  if (static_cast<int>(eb.a.size() + eb.b.size()) != n) return false;
  std::vector<int> seen(n, 0);
  for (const auto* side : {&eb.a, &eb.b}) {
    for (int x : *side) {
      if (x < 0 || x >= n || seen[x]++) return false;
    }
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        // A later element may never lie strictly below an earlier one.
        if (poset.Less((*side)[j], (*side)[i])) return false;
      }
    }
  }
  return true;
}

std::string FormatBipartition(const ExtendedBipartition& eb) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "A: " + join(eb.a) + " | B: " + join(eb.b);
}

std::string_view PolicyName(MaximalPolicy policy) {
  switch (policy) {
    case MaximalPolicy::kFirstFound:
      return "first-found";
    case MaximalPolicy::kChildlessPreferred:
      return "childless-preferred";
    case MaximalPolicy::kRandomMaximal:
      return "random-maximal";
    case MaximalPolicy::kExactSmall:
      return "exact-small";
  }
  return "unknown";
}

MaximalPolicy ParsePolicy(std::string_view name) {
  for (MaximalPolicy p :
       {MaximalPolicy::kFirstFound, MaximalPolicy::kChildlessPreferred,
        MaximalPolicy::kRandomMaximal, MaximalPolicy::kExactSmall}) {
    if (PolicyName(p) == name) return p;
  }
  throw ValidationError("unknown maximal-selection policy '" +
                        std::string(name) + "'");
}

MaximalPolicy DefaultPolicy(int n) {
  return n <= kDefaultExactCap ? MaximalPolicy::kExactSmall
                               : MaximalPolicy::kChildlessPreferred;
}

std::vector<Placement> ValidPlacements(const Poset& poset,
                                       const ExtendedBipartition& eb, int v) {
  if (v < 0 || v >= poset.size()) {
    throw ValidationError("element index out of range");
  }
  auto in_eb = [&](int x) {
    return std::find(eb.a.begin(), eb.a.end(), x) != eb.a.end() ||
           std::find(eb.b.begin(), eb.b.end(), x) != eb.b.end();
  };
  if (in_eb(v)) throw ValidationError("element already placed");
  bool maximal = true;
  poset.UpSet(v).ForEach([&](int p) { maximal = maximal && (p == v || !in_eb(p)); });
  if (!maximal) {
    throw ValidationError("element " + std::to_string(v) +
                          " is not maximal in the remaining poset");
  }
  std::vector<Placement> out;
  const std::vector<int>* sides[2] = {&eb.a, &eb.b};
  for (int s = 0; s < 2; ++s) {
    const std::vector<int>& order = *sides[s];
    int last_child = -1;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (poset.Less(order[i], v)) {
        last_child = i;
        break;
      }
    }
    for (int pos = last_child + 1; pos <= static_cast<int>(order.size());
         ++pos) {
      out.push_back({s, pos});
    }
  }
  return out;
}

ExtendedBipartition ApplyPlacement(const ExtendedBipartition& eb, int v,
                                   const Placement& placement) {
  ExtendedBipartition out = eb;
  std::vector<int>& side = placement.side == 0 ? out.a : out.b;
  side.insert(side.begin() + placement.position, v);
  return out;
}

Uint128 CountLinearExtensions(const Poset& poset) {
  CheckTableSize(poset.size(), kMaxExactSize, "CountLinearExtensions");
  const auto table = ExtensionTable(StrictMasks(poset, /*up=*/true));
  return table.back();
}

Uint128 CountExtendedBipartitions(const Poset& poset) {
  const int n = poset.size();
  CheckTableSize(n, kMaxExactSize, "CountExtendedBipartitions");
  const auto table = ExtensionTable(StrictMasks(poset, /*up=*/true));
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  Uint128 total = 0;
  for (Mask a = 0;; ++a) {
    total += table[a] * table[full ^ a];
    if (a == full) break;
  }
  return total;
}

std::vector<ExtendedBipartition> EnumerateBipartitions(const Poset& poset,
                                                       int cap) {
  const int n = poset.size();
  CheckTableSize(n, cap, "EnumerateBipartitions");
  const Uint128 count = CountExtendedBipartitions(poset);
  if (count > kMaxEnumerated) {
    throw CapExceededError("EnumerateBipartitions: too many bipartitions (" +
                           std::to_string(static_cast<std::uint64_t>(count)) +
                           ")");
  }
  const std::vector<Mask> down = StrictMasks(poset, /*up=*/false);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<ExtendedBipartition> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> prefix;
  for (Mask a = 0;; ++a) {
    std::vector<std::vector<int>> ext_a;
    std::vector<std::vector<int>> ext_b;
    EnumerateExtensions(down, a, 0, prefix, ext_a);
    EnumerateExtensions(down, full ^ a, 0, prefix, ext_b);
    for (const auto& x : ext_a) {
      for (const auto& y : ext_b) out.push_back({x, y});
    }
    if (a == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactBipartitionSampler::ExactBipartitionSampler(const Poset& poset, int cap)
    : n_(poset.size()) {
  CheckTableSize(n_, cap, "ExactBipartitionSampler");
  up_mask_ = StrictMasks(poset, /*up=*/true);
  extensions_ = ExtensionTable(up_mask_);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n_) - 1);
  cumulative_.resize(extensions_.size());
  for (Mask a = 0;; ++a) {
    total_ += extensions_[a] * extensions_[full ^ a];
    cumulative_[a] = total_;
    if (a == full) break;
  }
}

void ExactBipartitionSampler::SampleExtension(Mask mask, Stream& rng,
                                              std::vector<int>& out) const {
  out.assign(std::popcount(mask), -1);
  // Choose the last element with probability e(S - m) / e(S), then recurse.
  for (int pos = static_cast<int>(out.size()) - 1; pos >= 0; --pos) {
    Uint128 r = rng.UniformInt128(extensions_[mask]);
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      const int m = std::countr_zero(rest);
      if ((up_mask_[m] & mask) != 0) continue;
      const Uint128 weight = extensions_[mask ^ (Mask{1} << m)];
      if (r < weight) {
        out[pos] = m;
        mask ^= Mask{1} << m;
        break;
      }
      r -= weight;
    }
  }
}

ExtendedBipartition ExactBipartitionSampler::Sample(Stream& rng) const {
  const Uint128 u = rng.UniformInt128(total_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const Mask a = static_cast<Mask>(it - cumulative_.begin());
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n_) - 1);
  ExtendedBipartition eb;
  SampleExtension(a, rng, eb.a);
  SampleExtension(full ^ a, rng, eb.b);
  return eb;
}

BipartitionSampler::BipartitionSampler(const Poset& poset, MaximalPolicy policy,
                                       int exact_cap)
    : poset_(std::make_shared<const Poset>(poset)), policy_(policy) {
  const int n = poset.size();
  if (policy == MaximalPolicy::kExactSmall) {
    exact_.emplace(poset, exact_cap);
    return;
  }
  strict_parent_count_.resize(n);
  has_children_.resize(n);
  for (int i = 0; i < n; ++i) {
    strict_parent_count_[i] = poset.UpSet(i).count() - 1;
    has_children_[i] = poset.DownSet(i).count() > 1;
  }
}

ExtendedBipartition BipartitionSampler::Sample(Stream& rng) const {
  if (exact_) return exact_->Sample(rng);
  return SampleRecursive(rng);
}

int BipartitionSampler::SelectMaximal(const std::vector<int>& parents_left,
                                      const std::vector<std::uint8_t>& alive,
                                      int lowest_alive, Stream& rng,
                                      std::vector<int>& scratch) const {
  const int n = poset_->size();
  auto first_found = [&]() {
    const int u = lowest_alive;
    if (parents_left[u] == 0) return u;
    // The closure row of u holds every ancestor, so the first ancestor with
    // no remaining parent is the end of a parent-pointer walk from u.
    int found = -1;
    const auto& words = poset_->UpSet(u).words();
    for (std::size_t k = 0; k < words.size() && found < 0; ++k) {
      for (Bitset::Word w = words[k]; w != 0; w &= w - 1) {
        const int j = static_cast<int>(k) * Bitset::kWordBits +
                      std::countr_zero(w);
        if (alive[j] && parents_left[j] == 0) {
          found = j;
          break;
        }
      }
    }
    return found;
  };
  switch (policy_) {
    case MaximalPolicy::kFirstFound:
      return first_found();
    case MaximalPolicy::kChildlessPreferred:
      for (int i = lowest_alive; i < n; ++i) {
        if (alive[i] && parents_left[i] == 0 && !has_children_[i]) return i;
      }
      return first_found();
    case MaximalPolicy::kRandomMaximal:
      scratch.clear();
      for (int i = lowest_alive; i < n; ++i) {
        if (alive[i] && parents_left[i] == 0) scratch.push_back(i);
      }
      return scratch[rng.UniformInt(scratch.size())];
    case MaximalPolicy::kExactSmall:
      break;
  }
  return -1;
}

ExtendedBipartition BipartitionSampler::SampleRecursive(Stream& rng) const {
  const Poset& poset = *poset_;
  const int n = poset.size();

  // Removal phase: repeatedly strip a maximal element.
  std::vector<int> removal;
  removal.reserve(n);
  {
    std::vector<int> parents_left = strict_parent_count_;
    std::vector<std::uint8_t> alive(n, 1);
    std::vector<int> scratch;
    int lowest_alive = 0;
    for (int step = 0; step < n; ++step) {
      while (!alive[lowest_alive]) ++lowest_alive;
      const int v =
          SelectMaximal(parents_left, alive, lowest_alive, rng, scratch);
      alive[v] = 0;
      removal.push_back(v);
      poset.DownSet(v).ForEach([&](int c) {
        if (c != v) --parents_left[c];
      });
    }
  }

  // Insertion phase, last removed first. Each side is a doubly linked list
  // threaded through prev/next so that insertion after a node is O(1).
  std::vector<int> prev(n, -1);
  std::vector<int> next(n, -1);
  int head[2] = {-1, -1};
  int tail[2] = {-1, -1};
  int size[2] = {0, 0};
  for (int k = n - 1; k >= 0; --k) {
    const int v = removal[k];
    // Placements on a side: every slot right of the last child of v.
    int slots[2];
    for (int s = 0; s < 2; ++s) {
      int steps = 0;
      for (int w = tail[s]; w != -1 && !poset.Leq(w, v); w = prev[w]) ++steps;
      slots[s] = steps + 1;
    }
    std::uint64_t t = rng.UniformInt(slots[0] + slots[1]);
    int s = 0;
    if (t >= static_cast<std::uint64_t>(slots[0])) {
      t -= slots[0];
      s = 1;
    }
    // t = 0 appends at the tail; each increment moves one slot left.
    int anchor = tail[s];
    for (std::uint64_t i = 0; i < t; ++i) anchor = prev[anchor];
    if (anchor == -1) {
      next[v] = head[s];
      prev[v] = -1;
      if (head[s] != -1) {
        prev[head[s]] = v;
      } else {
        tail[s] = v;
      }
      head[s] = v;
    } else {
      const int after = next[anchor];
      next[anchor] = v;
      prev[v] = anchor;
      next[v] = after;
      if (after != -1) {
        prev[after] = v;
      } else {
        tail[s] = v;
      }
    }
    ++size[s];
  }

  ExtendedBipartition eb;
  eb.a.reserve(size[0]);
  eb.b.reserve(size[1]);
  for (int w = head[0]; w != -1; w = next[w]) eb.a.push_back(w);
  for (int w = head[1]; w != -1; w = next[w]) eb.b.push_back(w);
  return eb;
}

ExtendedBipartition SampleBipartition(const Poset& poset, Stream& rng,
                                      MaximalPolicy policy) {
  if (poset.empty()) {
    throw ValidationError("cannot sample a bipartition of an empty poset");
  }
  return BipartitionSampler(poset, policy).Sample(rng);
}

}  // namespace posetdp
