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

#include "kmh/graph.h"

#include <sstream>

#include <gtest/gtest.h>

#include "kmh/error.h"
#include "test_util.h"

namespace kmh {
namespace {

using testing::Bridge;
using testing::BruteMaxMatching;
using testing::BruteMinVc;
using testing::Cycle;
using testing::Disjoint;
using testing::Path;
using testing::Star;

TEST(GraphTest, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
  try {
    Graph(2, {{0, 0}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGraph);
  }
}

TEST(GraphTest, NormalizesEndpointOrder) {
  const Graph g(3, {{2, 0}});
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_EQ(g.edge(0).v, 2);
}

TEST(GraphTest, TriangleFree) {
  EXPECT_TRUE(IsTriangleFree(Path(2)));
  EXPECT_FALSE(IsTriangleFree(Cycle(3)));
  EXPECT_TRUE(IsTriangleFree(Cycle(5)));
}

TEST(GraphTest, MaxDegree) {
  EXPECT_EQ(MaxDegree(Star(1)), 1);
  EXPECT_EQ(MaxDegree(Star(4)), 4);
  EXPECT_EQ(MaxDegree(Cycle(5)), 2);
}

TEST(GraphTest, GreedyMatching) {
  EXPECT_TRUE(MaximalMatchingGreedy(Graph(3, {})).empty());
  const Matching s = MaximalMatchingGreedy(Star(3));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.edge_ids[0], 0u);
  EXPECT_EQ(MaximalMatchingGreedy(Disjoint(2)).size(), 2u);
  const Graph p = Path(3);
  const std::vector<EdgeId> order = {1, 0, 2};
  const Matching m = MaximalMatchingGreedy(p, order);
  EXPECT_EQ(m.edge_ids, std::vector<EdgeId>{1});
  EXPECT_TRUE(IsMaximalMatching(p, m));
}

TEST(GraphTest, MaximumMatching) {
  EXPECT_EQ(MaximumMatching(Cycle(5)).size(), 2u);
  EXPECT_EQ(MaximumMatching(Disjoint(3)).size(), 3u);
  const Graph l22 = Bridge(2, 2);
  EXPECT_EQ(l22.num_edges(), 5u);
  EXPECT_EQ(MaximumMatching(l22).size(), BruteMaxMatching(l22));
  EXPECT_EQ(MaximumMatching(l22).size(), 2u);
}

TEST(GraphTest, MaximumMatchingTieBreakIsLexicographic) {
  // Path 0-1-2-3: {e0, e2} is the only maximum matching; on C4 the
  // lexicographically smallest is {e0, e2}.
  EXPECT_EQ(MaximumMatching(Path(3)).edge_ids, (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(MaximumMatching(Cycle(4)).edge_ids, (std::vector<EdgeId>{0, 2}));
}

TEST(GraphTest, MaximumMatchingCeiling) {
  try {
    MaximumMatching(Path(5), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
}

TEST(GraphTest, SecondMaximumMatching) {
  const Graph s = Star(3);
  EXPECT_EQ(SecondMaximumMatching(s, MaximumMatching(s)).size(), 1u);
  const Graph d = Disjoint(2);
  EXPECT_TRUE(SecondMaximumMatching(d, MaximumMatching(d)).empty());
  const Graph c5 = Cycle(5);
  const Matching m = MaximumMatching(c5);
  const Matching l = SecondMaximumMatching(c5, m);
  const Graph rest = c5.Subgraph(c5.ComplementIds(m.edge_ids));
  EXPECT_EQ(l.size(), BruteMaxMatching(rest));
  EXPECT_EQ(l.size(), 2u);
}

TEST(GraphTest, ClassifyNamedClasses) {
  const GraphClass two = Classify(Disjoint(2));
  EXPECT_EQ(two.tag, ClassTag::kAn);
  EXPECT_EQ(two.n, 1);
  const GraphClass p4 = Classify(Path(3));
  EXPECT_EQ(p4.tag, ClassTag::kLn);
  EXPECT_EQ(p4.n, 1);
  EXPECT_EQ(Classify(Star(4)).tag, ClassTag::kStar);
  EXPECT_EQ(Classify(Disjoint(3)).tag, ClassTag::kThreeP2);
  EXPECT_EQ(Classify(Cycle(5)).tag, ClassTag::kC5);
  EXPECT_EQ(Classify(testing::An(3)).tag, ClassTag::kAn);
  EXPECT_EQ(Classify(testing::An(3)).n, 3);
  EXPECT_EQ(Classify(Bridge(3, 1)).tag, ClassTag::kLn);
  EXPECT_EQ(Classify(Bridge(3, 1)).n, 3);
  const GraphClass b = Classify(Bridge(2, 2));
  EXPECT_EQ(b.tag, ClassTag::kBridge);
  EXPECT_EQ(b.p, 2);
  EXPECT_EQ(b.q, 2);
  EXPECT_EQ(Classify(Graph(1, {})).tag, ClassTag::kEmpty);
  EXPECT_EQ(Classify(Cycle(3)).tag, ClassTag::kOtherNonStar);
  EXPECT_EQ(Classify(Disjoint(4)).tag, ClassTag::kOtherNonStar);
}

TEST(GraphTest, ClassNames) {
  EXPECT_EQ(Classify(testing::An(2)).ToString(), "A_2");
  EXPECT_EQ(Classify(Path(3)).ToString(), "L_1");
  EXPECT_EQ(Classify(Bridge(2, 2)).ToString(), "L_{2,2}");
}

TEST(GraphTest, StarWitness) {
  const Graph s = Star(4);
  const GraphClass c = Classify(s);
  ASSERT_FALSE(c.witness.empty());
  for (const Edge& e : s.edges()) EXPECT_TRUE(e.Touches(c.witness[0]));
}

TEST(GraphTest, BridgeWitnessSplitsIntoStars) {
  const Graph g = Bridge(3, 2);
  const auto w = FindBridge(g);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->p, 3);
  EXPECT_EQ(w->q, 2);
  std::vector<EdgeId> rest;
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    if (i != w->bridge) rest.push_back(i);
  }
  int at_s1 = 0, at_s2 = 0;
  for (EdgeId i : rest) {
    at_s1 += g.edge(i).Touches(w->s1);
    at_s2 += g.edge(i).Touches(w->s2);
  }
  EXPECT_EQ(at_s1, 3);
  EXPECT_EQ(at_s2, 2);
}

TEST(GraphTest, KonigCover) {
  EXPECT_EQ(KonigCover(Path(1)).size(), 1u);
  EXPECT_EQ(KonigCover(Cycle(4)).size(), 2u);
  const Graph p4 = Path(4);
  const VertexSet c = KonigCover(p4);
  EXPECT_TRUE(IsVertexCover(p4, c));
  EXPECT_EQ(c.size(), BruteMinVc(p4));
  try {
    KonigCover(Cycle(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBipartite);
  }
}

TEST(GraphTest, IsVertexCover) {
  const Vertex center[] = {0};
  EXPECT_TRUE(IsVertexCover(Star(3), center));
  const Vertex two[] = {0, 2};
  EXPECT_FALSE(IsVertexCover(Cycle(5), two));
  EXPECT_TRUE(IsVertexCover(Graph(0, {}), {}));
}

TEST(GraphTest, ParseEdgeList) {
  std::istringstream in("# comment\np 6\n0 1\n\n2 3 # trailing\n");
  const Graph g = ParseEdgeList(in);
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 2u);
  std::istringstream implicit("0 4\n1 2\n");
  EXPECT_EQ(ParseEdgeList(implicit).num_vertices(), 5);
  std::istringstream bad("0 x\n");
  try {
    ParseEdgeList(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(GraphTest, FormatRoundTrip) {
  const Graph g = Bridge(2, 1);
  std::istringstream in(FormatEdgeList(g));
  EXPECT_EQ(ParseEdgeList(in), g);
}

TEST(GraphTest, ComponentsAndUnion) {
  const Graph u = DisjointUnion(Path(2), Star(2));
  EXPECT_EQ(EdgeComponents(u).size(), 2u);
  EXPECT_FALSE(IsConnected(u));
  EXPECT_TRUE(IsConnected(Cycle(5)));
  const Graph sparse(10, {{3, 7}, {7, 9}});
  EXPECT_EQ(CompactVertices(sparse).num_vertices(), 3);
}

}  // namespace
}  // namespace kmh
