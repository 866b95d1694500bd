// Copyright 2026 The kmh Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kmh/vc_extraction.h"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "kmh/error.h"
#include "kmh/oracle.h"
#include "test_util.h"

namespace kmh {
namespace {

using testing::BruteMinVc;

TEST(CoverMatchingTwoTest, Examples) {
  const CoverResult a2 = CoverMatchingTwo(testing::An(2));
  EXPECT_TRUE(a2.valid);
  EXPECT_EQ(a2.size(), 2u);
  EXPECT_EQ(a2.size(), BruteMinVc(testing::An(2)));
  const CoverResult c5 = CoverMatchingTwo(testing::Cycle(5));
  EXPECT_EQ(c5.size(), 3u);
  EXPECT_EQ(c5.bound_kind, "matching_two_c5");
  const Graph l22 = testing::Bridge(2, 2);
  const CoverResult b = CoverMatchingTwo(l22);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.size(), BruteMinVc(l22));
}

TEST(CoverMatchingTwoTest, BoundUsesDelta) {
  const CoverResult c = CoverMatchingTwo(testing::An(2));
  EXPECT_DOUBLE_EQ(c.bound_const, 1.62);
  EXPECT_NEAR(c.delta_used, AnMedianCost(2) - std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(c.bound_value, 1.62 + (std::sqrt(2.0) + 1) * c.delta_used, 1e-12);
}

TEST(CoverMatchingTwoTest, Preconditions) {
  EXPECT_THROW(CoverMatchingTwo(testing::Disjoint(3)), Error);
  EXPECT_THROW(CoverMatchingTwo(testing::Star(3)), Error);
}

TEST(CoverGeneralTest, SizeBoundOnRandomGraphs) {
  int tested = 0;
  for (std::uint64_t seed = 1; seed < 400 && tested < 40; ++seed) {
    const Graph g = RandomTriangleFree(8, 3, seed, 7);
    if (!IsNonStar(g)) continue;
    const Matching m = MaximumMatching(g);
    if (m.size() < 3) continue;
    const Matching l = SecondMaximumMatching(g, m);
    if (l.empty()) continue;
    const CoverResult c = CoverGeneral(g, m, l);
    EXPECT_TRUE(IsVertexCover(g, c.cover));
    EXPECT_LE(c.size(), m.size() + l.size() - 1);
    EXPECT_GE(c.size(), BruteMinVc(g));
    ++tested;
  }
  EXPECT_GT(tested, 10);
}

TEST(CoverGeneralTest, Preconditions) {
  const Graph g = testing::Path(5);
  const Matching m = MaximumMatching(g);
  const Matching not_max{{0}};
  EXPECT_THROW(CoverGeneral(g, not_max, SecondMaximumMatching(g, m)), Error);
  EXPECT_THROW(CoverGeneral(testing::Disjoint(3), MaximumMatching(testing::Disjoint(3)),
                            Matching{}),
               Error);
}

TEST(CoverCaseDispatchTest, ThreeP2UsesMatchingSize) {
  const CoverResult c = CoverCaseDispatch(testing::Disjoint(3));
  EXPECT_EQ(c.bound_kind, "L0");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_NEAR(c.bound_value, 0.551 + (std::sqrt(2.0) + 1) * c.delta_used, 1e-12);
}

TEST(CoverCaseDispatchTest, SecondMatchingOfSizeOne) {
  // Three disjoint edges with one edge joining two of them.
  const Graph g(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}});
  const CoverResult c = CoverCaseDispatch(g);
  EXPECT_EQ(c.bound_kind, "L1");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(c.valid);
}

TEST(CoverCaseDispatchTest, Preconditions) {
  EXPECT_THROW(CoverCaseDispatch(testing::Cycle(5)), Error);
  EXPECT_THROW(CoverCaseDispatch(testing::Star(4)), Error);
}

TEST(CoverNonstarMeansTest, Examples) {
  const CoverResult two = CoverNonstarMeans(testing::Disjoint(2));
  EXPECT_EQ(two.size(), 2u);
  EXPECT_DOUBLE_EQ(two.delta_used, 1.0);
  EXPECT_DOUBLE_EQ(two.bound_value, 3.5);
  const CoverResult c5 = CoverNonstarMeans(testing::Cycle(5));
  EXPECT_EQ(c5.size(), 3u);
  EXPECT_LE(c5.size(), 1 + 2.5 * c5.delta_used);
  const CoverResult a2 = CoverNonstarMeans(testing::An(2));
  EXPECT_LE(a2.size(), 2 + a2.delta_used);
  EXPECT_THROW(CoverNonstarMeans(testing::Star(2)), Error);
}

TEST(SingleEdgeTest, NoSingles) {
  const Graph g = testing::Star(3);
  const Vertex vc[] = {0};
  const SingleEdgeResult r = CoverSingleEdgeClusters(g, {}, vc, 1, 0.01);
  EXPECT_EQ(r.which, SingleEdgeCase::kCaseI);
  EXPECT_TRUE(r.cover.empty());
  EXPECT_TRUE(r.valid);
}

TEST(SingleEdgeTest, OneEdge) {
  const Graph g(2, {{0, 1}});
  const EdgeId singles[] = {0};
  const SingleEdgeResult r = CoverSingleEdgeClusters(g, singles, {}, 1, 0.01);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.cover.size(), 1u);
}

TEST(SingleEdgeTest, LargeMatchingRunsProcedures) {
  const Graph g = testing::Path(20);
  std::vector<EdgeId> singles(20);
  for (EdgeId i = 0; i < 20; ++i) singles[i] = i;
  const int k = 10;
  const double delta = 0.01;
  const SingleEdgeResult r = CoverSingleEdgeClusters(g, singles, {}, k, delta);
  EXPECT_EQ(r.which, SingleEdgeCase::kCaseII);
  EXPECT_TRUE(r.full_graph);
  EXPECT_TRUE(IsVertexCover(g, r.cover));
  EXPECT_LE(static_cast<double>(r.cover.size()), 2 * k - 2 * delta * k);
  EXPECT_TRUE(r.hard_regime);
}

TEST(SingleEdgeTest, SmallMatchingCoversSingles) {
  // Star of 8 edges split into singles: the center alone survives pruning.
  const Graph g = testing::Star(8);
  std::vector<EdgeId> singles(8);
  for (EdgeId i = 0; i < 8; ++i) singles[i] = i;
  const SingleEdgeResult r = CoverSingleEdgeClusters(g, singles, {}, 8, 0.01);
  EXPECT_EQ(r.which, SingleEdgeCase::kCaseI);
  EXPECT_EQ(r.mp_size, 1u);
  EXPECT_EQ(r.cover, (VertexSet{0}));
  EXPECT_LE(static_cast<double>(r.cover.size()), r.bound);
}

TEST(SingleEdgeTest, Preconditions) {
  const Graph g = testing::Path(2);
  const EdgeId singles[] = {0};
  // Edge 1 is neither single nor covered.
  EXPECT_THROW(CoverSingleEdgeClusters(g, singles, {}, 1, 0.01), Error);
  const Vertex vc[] = {1};
  // Edge 0 is already covered by vc_prime.
  EXPECT_THROW(CoverSingleEdgeClusters(g, singles, vc, 1, 0.01), Error);
}

TEST(SoundnessTest, StarPartitionUsesOneVertexPerStar) {
  const Graph c4 = testing::Cycle(4);  // cover {0, 2}
  std::vector<std::vector<EdgeId>> blocks = {{}, {}};
  for (EdgeId i = 0; i < c4.num_edges(); ++i) {
    blocks[c4.edge(i).Touches(0) ? 0 : 1].push_back(i);
  }
  SoundnessConfig cfg;
  cfg.k = 2;
  const SoundnessReport r = SoundnessAssemble(c4, blocks, cfg);
  EXPECT_TRUE(r.cover_valid);
  EXPECT_LE(r.total_cover_size, 2u);
  EXPECT_EQ(r.t2, 2u);
  EXPECT_EQ(r.procedures_path, "direct");
}

TEST(SoundnessTest, EveryClusteringOfC5GivesValidCover) {
  const Graph c5 = testing::Cycle(5);
  SoundnessConfig cfg;
  cfg.k = 2;
  int count = 0;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<std::vector<EdgeId>> blocks(2);
    for (EdgeId i = 0; i < 5; ++i) blocks[mask >> i & 1].push_back(i);
    const SoundnessReport r = SoundnessAssemble(c5, blocks, cfg);
    EXPECT_TRUE(r.cover_valid) << mask;
    EXPECT_EQ(r.t1 + r.t2 + r.t3 + r.t4, r.blocks);
    ++count;
  }
  EXPECT_EQ(count, 32);
}

TEST(SoundnessTest, MeansLedger) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = RandomTriangleFree(9, 3, 100 + trial, 12);
    const int k = 3;
    std::vector<std::vector<EdgeId>> blocks(k);
    for (EdgeId i = 0; i < g.num_edges(); ++i) blocks[UniformIndex(rng, k)].push_back(i);
    SoundnessConfig cfg;
    cfg.k = k;
    cfg.objective = Objective::kMeans;
    const SoundnessReport r = SoundnessAssemble(g, blocks, cfg);
    EXPECT_TRUE(r.cover_valid);
    EXPECT_LE(static_cast<double>(r.total_cover_size), r.ledger_bound + 1e-9);
  }
}

TEST(SoundnessTest, InvalidPartitions) {
  const Graph g = testing::Path(3);
  SoundnessConfig cfg;
  cfg.k = 2;
  auto code = [&](const std::vector<std::vector<EdgeId>>& blocks) {
    try {
      SoundnessAssemble(g, blocks, cfg);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kStuck;
  };
  EXPECT_EQ(code({{0, 1}}), ErrorCode::kInvalidPartition);
  EXPECT_EQ(code({{0, 1}, {1, 2}}), ErrorCode::kInvalidPartition);
  EXPECT_EQ(code({{0}, {1}, {2}}), ErrorCode::kInvalidPartition);
  EXPECT_EQ(code({{0, 7}, {1, 2}}), ErrorCode::kInvalidPartition);
  cfg.beta = 1.5;  // ceil(1.5 * 2) = 3 blocks allowed
  EXPECT_EQ(SoundnessAssemble(g, {{0}, {1}, {2}}, cfg).allowed_blocks, 3u);
}

TEST(SoundnessTest, Epsilon) {
  EXPECT_NEAR(MedianEpsilon(1.0, 0.0), 0.05, 1e-15);
  EXPECT_LT(MedianEpsilon(1.0, 0.01), 0.0);
  EXPECT_GT(MedianEpsilon(1.0, 0.001), 0.0);
  EXPECT_NEAR(MeansEpsilon(1.0, 0.1, 2.0), 0.75, 1e-15);
}

}  // namespace
}  // namespace kmh
