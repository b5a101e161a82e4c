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

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "posetdp/error.h"
#include "posetdp/rng.h"
#include "test_util.h"

namespace posetdp {
namespace {

using ::posetdp::testing::BoolMatrix;
using ::posetdp::testing::BruteCovers;
using ::posetdp::testing::BruteDepth;
using ::posetdp::testing::BruteReach;
using ::posetdp::testing::SmallCorpus;
using ::posetdp::testing::ToBool;

std::vector<Relation> Rel(std::initializer_list<Relation> r) { return r; }

TEST(PosetTest, ForkClosure) {
  const Poset p = Poset::FromRelations(3, Rel({{0, 2}, {1, 2}}));
  const BoolMatrix want = {{true, false, true},
                           {false, true, true},
                           {false, false, true}};
  EXPECT_EQ(ToBool(p), want);
}

TEST(PosetTest, TwoCycleIsRejected) {
  EXPECT_THROW(Poset::FromRelations(2, Rel({{0, 1}, {1, 0}})), CycleError);
}

TEST(PosetTest, LongCycleIsRejected) {
  EXPECT_THROW(Poset::FromRelations(4, Rel({{0, 1}, {1, 2}, {2, 3}, {3, 1}})),
               CycleError);
}

TEST(PosetTest, SelfLoopIsAllowed) {
  const Poset p = Poset::FromRelations(2, Rel({{0, 0}, {0, 1}}));
  EXPECT_TRUE(p.Less(0, 1));
}

TEST(PosetTest, IndexOutOfRange) {
  EXPECT_THROW(Poset::FromRelations(2, Rel({{0, 2}})), ValidationError);
  EXPECT_THROW(Poset::FromRelations(2, Rel({{-1, 0}})), ValidationError);
}

TEST(PosetTest, DuplicateLabels) {
  EXPECT_THROW(Poset::FromRelations(2, {}, {"a", "a"}), ValidationError);
  EXPECT_THROW(Poset::FromRelations(2, {}, {"a"}), ValidationError);
  const Poset p = Poset::FromRelations(2, {}, {"a", "b"});
  EXPECT_EQ(p.Label(1), "b");
}

TEST(PosetTest, PairClosure) {
  const Poset p = Poset::FromRelations(2, Rel({{0, 1}}));
  EXPECT_TRUE(p.Leq(0, 1));
  EXPECT_FALSE(p.Leq(1, 0));
}

TEST(PosetTest, ChainEdgesAreClosed) {
  const Poset p = Poset::FromRelations(3, Rel({{0, 1}, {1, 2}}));
  EXPECT_TRUE(p.Leq(0, 2));
  EXPECT_EQ(p, Poset::Chain(3));
}

TEST(PosetTest, EmptyRelationsGiveIdentity) {
  const Poset p = Poset::FromRelations(3, {});
  EXPECT_EQ(p.closure(), IdentityMatrix(3));
}

TEST(PosetTest, FourChainStaircaseMatchesReachability) {
  const auto rel = Rel({{0, 1}, {1, 2}, {2, 3}});
  const Poset p = Poset::FromRelations(4, rel);
  EXPECT_EQ(ToBool(p), BruteReach(4, rel));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(p.Leq(i, j), i <= j);
  }
}

TEST(PosetTest, ClosureMatchesReachabilityOnRandomRelations) {
  Stream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng.UniformInt(9));
    // Arcs only from lower to higher index, then relabelled, so acyclic.
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    for (int i = d - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.UniformInt(i + 1)]);
    }
    std::vector<Relation> rel;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (rng.Uniform() < 0.3) rel.emplace_back(perm[i], perm[j]);
      }
    }
    const Poset p = Poset::FromRelations(d, rel);
    EXPECT_EQ(ToBool(p), BruteReach(d, rel));
  }
}

TEST(PosetTest, ReductionOfChain) {
  EXPECT_EQ(ReductionEdges(Poset::Chain(3)), Rel({{0, 1}, {1, 2}}));
}

TEST(PosetTest, ForkIsAlreadyReduced) {
  const Poset p = Poset::FromRelations(3, Rel({{0, 2}, {1, 2}}));
  EXPECT_EQ(ReductionEdges(p), Rel({{0, 2}, {1, 2}}));
}

TEST(PosetTest, ReductionDropsImpliedEdge) {
  const Poset p =
      Poset::FromRelations(4, Rel({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}));
  const auto edges = ReductionEdges(p);
  EXPECT_EQ(edges, Rel({{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  // Minimality: no proper subset of the edges has the same closure.
  for (std::uint32_t mask = 0; mask + 1 < (1u << edges.size()); ++mask) {
    std::vector<Relation> subset;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1u) subset.push_back(edges[e]);
    }
    EXPECT_NE(BruteReach(4, subset), ToBool(p));
  }
}

TEST(PosetTest, ReductionMatchesCoverDefinition) {
  for (const auto& [name, p] : SmallCorpus()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(ReductionEdges(p), BruteCovers(p));
  }
}

TEST(PosetTest, ReductionRoundTrip) {
  for (const auto& [name, p] : SmallCorpus()) {
    SCOPED_TRACE(name);
    const auto edges = ReductionEdges(p);
    EXPECT_EQ(Poset::FromRelations(p.size(), edges), p);
    EXPECT_EQ(TransitiveClosure(TransitiveReduction(p)), p.closure());
  }
}

TEST(PosetTest, AugmentRootOfEmpty) {
  const RootedPoset r = AugmentRoot(Poset());
  EXPECT_EQ(r.dimension(), 1);
  EXPECT_EQ(r.stripped().size(), 0);
}

TEST(PosetTest, AugmentRootOfAntichainIsFork) {
  const RootedPoset r = AugmentRoot(Poset::Antichain(2));
  EXPECT_EQ(r.poset(), Poset::FromRelations(3, Rel({{1, 0}, {2, 0}})));
}

TEST(PosetTest, AugmentRootAlwaysAddsRoot) {
  const Poset chain = Poset::Chain(3);  // already has a unique maximum
  const RootedPoset r = AugmentRoot(chain);
  EXPECT_EQ(r.dimension(), 4);
  EXPECT_EQ(r.stripped(), chain);
  for (const auto& [name, p] : SmallCorpus()) {
    const RootedPoset rp = AugmentRoot(p);
    ASSERT_EQ(rp.dimension(), p.size() + 1);
    for (int i = 0; i < rp.dimension(); ++i) EXPECT_TRUE(rp.poset().Leq(i, 0));
    for (int i = 0; i < p.size(); ++i) {
      for (int j = 0; j < p.size(); ++j) {
        EXPECT_EQ(rp.poset().Leq(i + 1, j + 1), p.Leq(i, j));
      }
    }
  }
}

TEST(PosetTest, RootedPosetRequiresRoot) {
  EXPECT_THROW(RootedPoset(Poset::Antichain(2)), ValidationError);
}

TEST(PosetTest, PartiallyOrderedVectorExamples) {
  const Poset chain = Poset::Chain(2);
  const std::vector<std::uint8_t> ones = {1, 1}, bad = {1, 0}, zero = {0, 0};
  EXPECT_TRUE(IsPartiallyOrderedVector(chain, ones));
  EXPECT_FALSE(IsPartiallyOrderedVector(chain, bad));
  EXPECT_TRUE(IsPartiallyOrderedVector(chain, zero));
  const std::vector<std::uint8_t> short_x = {1};
  EXPECT_THROW(IsPartiallyOrderedVector(chain, short_x), ValidationError);
}

TEST(PosetTest, PartiallyOrderedVectorMatchesRelationCheck) {
  for (const auto& [name, p] : SmallCorpus()) {
    if (p.size() > 6) continue;
    const auto strict = ::posetdp::testing::StrictPairs(p);
    for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
      std::vector<std::uint8_t> x(p.size());
      for (int i = 0; i < p.size(); ++i) x[i] = (mask >> i) & 1u;
      bool want = true;
      for (const auto& [i, j] : strict) want = want && x[i] <= x[j];
      EXPECT_EQ(IsPartiallyOrderedVector(p, x), want) << name << " " << mask;
    }
  }
}

TEST(PosetTest, MetricsExamples) {
  const auto m0 = ComputeMetrics(Poset::Antichain(5));
  EXPECT_EQ(m0.depth, 0);
  EXPECT_EQ(m0.reduced_edge_count, 0);
  const auto m1 = ComputeMetrics(Poset::Chain(4));
  EXPECT_EQ(m1.depth, 3);
  EXPECT_EQ(m1.reduced_edge_count, 3);
  const auto m2 = ComputeMetrics(Poset::FromRelations(3, Rel({{0, 2}, {1, 2}})));
  EXPECT_EQ(m2.depth, 1);
  EXPECT_EQ(m2.reduced_edge_count, 2);
}

TEST(PosetTest, MetricsMatchBruteForce) {
  for (const auto& [name, p] : SmallCorpus()) {
    SCOPED_TRACE(name);
    const auto m = ComputeMetrics(p);
    EXPECT_EQ(m.depth, BruteDepth(p));
    EXPECT_EQ(m.reduced_edge_count, static_cast<int>(BruteCovers(p).size()));
  }
}

TEST(PosetTest, MaximalAndUpClosure) {
  const Poset chain = Poset::Chain(3);
  EXPECT_EQ(MaximalElements(chain), std::vector<int>({2}));
  EXPECT_EQ(MinimalElements(chain), std::vector<int>({0}));
  Bitset s(3);
  s.set(0);
  EXPECT_EQ(UpClosure(chain, s).ToIndices(), std::vector<int>({0, 1, 2}));

  const Poset anti = Poset::Antichain(3);
  EXPECT_EQ(MaximalElements(anti), std::vector<int>({0, 1, 2}));
  Bitset t(3);
  t.set(1);
  EXPECT_EQ(UpClosure(anti, t).ToIndices(), std::vector<int>({1}));

  const Poset fork = Poset::FromRelations(3, Rel({{0, 2}, {1, 2}}));
  EXPECT_EQ(UpClosure(fork, s).ToIndices(), std::vector<int>({0, 2}));
  EXPECT_TRUE(IsFilter(fork, UpClosure(fork, s)));
  EXPECT_FALSE(IsFilter(fork, s));
  Bitset all(3);
  for (int i = 0; i < 3; ++i) all.set(i);
  EXPECT_EQ(MinimalOf(fork, all).ToIndices(), std::vector<int>({0, 1}));
}

TEST(PosetTest, FamilyPredicates) {
  EXPECT_TRUE(IsAntichain(Poset::Antichain(4)));
  EXPECT_FALSE(IsAntichain(Poset::Chain(2)));
  EXPECT_TRUE(IsTotalOrder(Poset::Chain(4)));
  EXPECT_FALSE(IsTotalOrder(Poset::Antichain(2)));
}

TEST(PosetTest, HashIgnoresLabelsAndSeesOrder) {
  const Poset a = Poset::FromRelations(2, Rel({{0, 1}}), {"x", "y"});
  const Poset b = Poset::FromRelations(2, Rel({{0, 1}}));
  const Poset c = Poset::FromRelations(2, Rel({{1, 0}}));
  EXPECT_EQ(a.Hash(), b.Hash());
  EXPECT_NE(a.Hash(), c.Hash());
  EXPECT_EQ(a.HashHex().size(), 16u);
}

TEST(PosetTest, InducedSubposet) {
  const Poset chain = Poset::Chain(4);
  const std::vector<int> keep = {1, 3};
  EXPECT_EQ(chain.Induced(keep), Poset::Chain(2));
}

}  // namespace
}  // namespace posetdp
