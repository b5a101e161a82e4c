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

#include "posetdp/poset.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

#include "posetdp/error.h"

namespace posetdp {

BitMatrix IdentityMatrix(int d) {
  BitMatrix m(d, Bitset(d));
  for (int i = 0; i < d; ++i) m[i].set(i);
  return m;
}

BitMatrix TransitiveClosure(BitMatrix relations) {
  const int d = static_cast<int>(relations.size());
  for (int i = 0; i < d; ++i) {
    if (relations[i].size() != d) {
      throw ValidationError("relation matrix is not square");
    }
    relations[i].set(i);
  }
  // Warshall sweep on word-packed rows.
  for (int k = 0; k < d; ++k) {
    const Bitset row_k = relations[k];
    for (int i = 0; i < d; ++i) {
      if (i != k && relations[i].test(k)) relations[i] |= row_k;
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (relations[i].test(j) && relations[j].test(i)) {
        throw CycleError("relations contain a cycle through elements " +
                         std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  return relations;
}

Poset Poset::FromRelations(int d, std::span<const Relation> relations,
                           std::vector<std::string> labels) {
  if (d < 0) throw ValidationError("poset size must be nonnegative");
  BitMatrix m = IdentityMatrix(d);
  for (const auto& [lo, hi] : relations) {
    if (lo < 0 || lo >= d || hi < 0 || hi >= d) {
      throw ValidationError("relation [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] has an index out of range");
    }
    m[lo].set(hi);
  }
  return FromClosure(TransitiveClosure(std::move(m)), std::move(labels));
}

Poset Poset::FromClosure(BitMatrix closure, std::vector<std::string> labels) {
  Poset p;
  p.up_ = std::move(closure);
  p.labels_ = std::move(labels);
  p.Validate();
  p.BuildDown();
  return p;
}

Poset Poset::Antichain(int n) { return FromClosure(IdentityMatrix(n)); }

Poset Poset::Chain(int n) {
  BitMatrix m(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m[i].set(j);
  }
  return FromClosure(std::move(m));
}

void Poset::Validate() const {
  const int d = size();
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != d) {
      throw ValidationError("expected " + std::to_string(d) + " labels, got " +
                            std::to_string(labels_.size()));
    }
    std::set<std::string> seen;
    for (const auto& label : labels_) {
      if (!seen.insert(label).second) {
        throw ValidationError("duplicate element label '" + label + "'");
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    if (up_[i].size() != d) throw ValidationError("closure is not square");
    if (!up_[i].test(i)) throw ValidationError("closure is not reflexive");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j || !up_[i].test(j)) continue;
      if (up_[j].test(i)) throw CycleError("closure is not antisymmetric");
      // Transitivity: up(j) must be contained in up(i).
      if (!up_[j].IsSubsetOf(up_[i])) {
        throw ValidationError("closure is not transitive");
      }
    }
  }
}

void Poset::BuildDown() {
  const int d = size();
  down_.assign(d, Bitset(d));
  for (int i = 0; i < d; ++i) {
    up_[i].ForEach([&](int j) { down_[j].set(i); });
  }
}

std::string Poset::Label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

Poset Poset::Induced(std::span<const int> keep) const {
  const int k = static_cast<int>(keep.size());
  BitMatrix m(k, Bitset(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (Leq(keep[a], keep[b])) m[a].set(b);
    }
  }
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    for (int i : keep) labels.push_back(labels_[i]);
  }
  Poset p;
  p.up_ = std::move(m);
  p.labels_ = std::move(labels);
  p.BuildDown();
  return p;
}

std::uint64_t Poset::Hash() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xFF;
      h *= 0x100000001B3ULL;
    }
  };
  feed(static_cast<std::uint64_t>(size()));
  for (const Bitset& row : up_) {
    for (Bitset::Word w : row.words()) feed(w);
  }
  return h;
}

std::string Poset::HashHex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Hash()));
  return buf;
}

RootedPoset::RootedPoset(Poset poset) : poset_(std::move(poset)) {
  const int d = poset_.size();
  if (d == 0) throw ValidationError("a rooted poset needs at least one element");
  for (int i = 0; i < d; ++i) {
    if (!poset_.Leq(i, 0)) {
      throw ValidationError("element " + std::to_string(i) +
                            " is not below the root at index 0");
    }
  }
  std::vector<int> rest(d - 1);
  for (int i = 1; i < d; ++i) rest[i - 1] = i;
  stripped_ = poset_.Induced(rest);
}

RootedPoset AugmentRoot(const Poset& poset) {
  const int d = poset.size();
  BitMatrix m(d + 1, Bitset(d + 1));
  m[0].set(0);
  for (int i = 0; i < d; ++i) {
    m[i + 1].set(0);
    poset.UpSet(i).ForEach([&](int j) { m[i + 1].set(j + 1); });
  }
  std::vector<std::string> labels;
  if (!poset.labels().empty()) {
    std::string root = "root";
    while (std::find(poset.labels().begin(), poset.labels().end(), root) !=
           poset.labels().end()) {
      root += "_";
    }
    labels.push_back(root);
    labels.insert(labels.end(), poset.labels().begin(), poset.labels().end());
  }
  return RootedPoset(Poset::FromClosure(std::move(m), std::move(labels)));
}

BitMatrix TransitiveReduction(const Poset& poset) {
  const int d = poset.size();
  BitMatrix cover(d, Bitset(d));
  for (int i = 0; i < d; ++i) {
    Bitset strict_up = poset.UpSet(i);
    strict_up.reset(i);
    strict_up.ForEach([&](int j) {
      // i < j is a cover iff nothing lies strictly between.
      Bitset between = strict_up;
      between &= poset.DownSet(j);
      between.reset(j);
      if (between.none()) cover[i].set(j);
    });
  }
  return cover;
}

std::vector<Relation> ReductionEdges(const Poset& poset) {
  std::vector<Relation> edges;
  const BitMatrix cover = TransitiveReduction(poset);
  for (int i = 0; i < poset.size(); ++i) {
    cover[i].ForEach([&](int j) { edges.emplace_back(i, j); });
  }
  return edges;
}

PosetMetrics ComputeMetrics(const Poset& poset) {
  const int d = poset.size();
  const BitMatrix cover = TransitiveReduction(poset);
  PosetMetrics metrics;
  for (const Bitset& row : cover) metrics.reduced_edge_count += row.count();
  // Elements sorted by down-set size form a linear extension.
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return poset.DownSet(a).count() < poset.DownSet(b).count();
  });
  std::vector<int> longest(d, 0);  // edges on the longest chain ending here
  for (int v : order) {
    cover[v].ForEach(
        [&](int w) { longest[w] = std::max(longest[w], longest[v] + 1); });
    metrics.depth = std::max(metrics.depth, longest[v]);
  }
  return metrics;
}

bool IsPartiallyOrderedVector(const Poset& poset,
                              std::span<const std::uint8_t> x) {
  const int d = poset.size();
  if (static_cast<int>(x.size()) != d) {
    throw ValidationError("vector has length " + std::to_string(x.size()) +
                          ", poset has " + std::to_string(d) + " elements");
  }
  for (int i = 0; i < d; ++i) {
    if (x[i] > 1) throw ValidationError("vector entries must be 0 or 1");
  }
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    bool ok = true;
    poset.UpSet(i).ForEach([&](int j) { ok = ok && x[j] == 1; });
    if (!ok) return false;
  }
  return true;
}

std::vector<int> MaximalElements(const Poset& poset) {
  std::vector<int> out;
  for (int i = 0; i < poset.size(); ++i) {
    if (poset.UpSet(i).count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<int> MinimalElements(const Poset& poset) {
  std::vector<int> out;
  for (int i = 0; i < poset.size(); ++i) {
    if (poset.DownSet(i).count() == 1) out.push_back(i);
  }
  return out;
}

Bitset UpClosure(const Poset& poset, const Bitset& s) {
  Bitset out(poset.size());
  s.ForEach([&](int i) { out |= poset.UpSet(i); });
  return out;
}

Bitset MinimalOf(const Poset& poset, const Bitset& s) {
  Bitset out(poset.size());
  s.ForEach([&](int i) {
    Bitset below = poset.DownSet(i);
    below &= s;
    if (below.count() == 1) out.set(i);
  });
  return out;
}

bool IsFilter(const Poset& poset, const Bitset& s) {
  return UpClosure(poset, s) == s;
}

bool IsAntichain(const Poset& poset) {
  for (int i = 0; i < poset.size(); ++i) {
    if (poset.UpSet(i).count() != 1) return false;
  }
  return true;
}

bool IsTotalOrder(const Poset& poset) {
  const int d = poset.size();
  for (int i = 0; i < d; ++i) {
    if (poset.UpSet(i).count() + poset.DownSet(i).count() != d + 1) {
      return false;
    }
  }
  return true;
}

}  // namespace posetdp
