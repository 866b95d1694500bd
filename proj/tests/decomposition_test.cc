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

#include "kmh/decomposition.h"

#include <cmath>

#include <gtest/gtest.h>

#include "kmh/error.h"
#include "kmh/fermat_weber.h"
#include "kmh/reduction.h"
#include "test_util.h"

namespace kmh {
namespace {

double Solver(const Graph& g) {
  return Weiszfeld(EdgePoints(CompactVertices(g))).cost;
}

TEST(FindSafePairTest, FundamentalHasNone) {
  EXPECT_FALSE(FindSafePair(testing::Disjoint(3), DecomposeMode::kSafe));
  EXPECT_FALSE(FindSafePair(testing::An(3), DecomposeMode::kSafe));
  EXPECT_FALSE(FindSafePair(testing::Bridge(2, 1), DecomposeMode::kSafe));
}

TEST(FindSafePairTest, C5HasOne) {
  const Graph c5 = testing::Cycle(5);
  const auto pair = FindSafePair(c5, DecomposeMode::kSafe);
  ASSERT_TRUE(pair.has_value());
  EXPECT_FALSE(c5.edge(pair->first).SharesVertex(c5.edge(pair->second)));
  const EdgeId drop[] = {pair->first, pair->second};
  EXPECT_TRUE(IsNonStar(c5.Subgraph(c5.ComplementIds(drop))));
}

TEST(FindSafePairTest, UltraPairOnBridgeRemainder) {
  // L_{2,2} plus a pendant edge hanging off a leaf: removing the bridge
  // with a disjoint edge is the first ultra-safe pair.
  const Graph b = testing::Bridge(2, 2);
  std::vector<Edge> edges = b.edges();
  edges.push_back({2, b.num_vertices()});
  const Graph g(b.num_vertices() + 1, edges);
  ASSERT_FALSE(IsBridgeGraph(g));
  const auto pair = FindSafePair(g, DecomposeMode::kUltraSafe);
  ASSERT_TRUE(pair.has_value());
  const EdgeId drop[] = {pair->first, pair->second};
  const Graph rest = g.Subgraph(g.ComplementIds(drop));
  EXPECT_TRUE(IsNonStar(rest));
  EXPECT_FALSE(IsBridgeGraph(rest));
}

TEST(FindSafePairTest, Preconditions) {
  try {
    FindSafePair(testing::Star(3), DecomposeMode::kSafe);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  EXPECT_THROW(FindSafePair(testing::Bridge(2, 2), DecomposeMode::kUltraSafe), Error);
}

TEST(DecomposeTest, TwoDisjointEdges) {
  const DecompositionTrace t = Decompose(testing::Disjoint(2), DecomposeMode::kSafe);
  EXPECT_TRUE(t.removed_pairs.empty());
  EXPECT_EQ(t.residual.tag, ClassTag::kAn);
  EXPECT_EQ(t.residual.n, 1);
}

TEST(DecomposeTest, C5) {
  const Graph c5 = testing::Cycle(5);
  const DecompositionTrace t = Decompose(c5, DecomposeMode::kSafe);
  ASSERT_EQ(t.removed_pairs.size(), 1u);
  EXPECT_TRUE(t.residual.IsFundamental());
  EXPECT_EQ(t.residual_edges.size(), 3u);
  EXPECT_EQ(ReplayTrace(c5, t), c5.Subgraph(t.residual_edges));
}

TEST(DecomposeTest, ThreeCopiesOfL2) {
  Graph g = testing::Bridge(2, 1);
  g = DisjointUnion(DisjointUnion(g, testing::Bridge(2, 1)), testing::Bridge(2, 1));
  ASSERT_EQ(g.num_edges(), 12u);
  const DecompositionTrace t = Decompose(g, DecomposeMode::kSafe);
  EXPECT_TRUE(t.residual.IsFundamental());
  EXPECT_EQ(g.num_edges(), t.residual_edges.size() + 2 * t.removed_pairs.size());
  const std::vector<int> comp_of = [&] {
    std::vector<int> c(g.num_edges());
    const auto comps = EdgeComponents(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (EdgeId e : comps[i]) c[e] = static_cast<int>(i);
    }
    return c;
  }();
  // The first removal pairs edges from different copies.
  EXPECT_NE(comp_of[t.removed_pairs[0].first], comp_of[t.removed_pairs[0].second]);
}

TEST(DecomposeTest, UltraResidualIsNeverLn) {
  const DecompositionTrace t = Decompose(testing::Cycle(5), DecomposeMode::kUltraSafe);
  EXPECT_TRUE(t.residual.tag == ClassTag::kThreeP2 || t.residual.tag == ClassTag::kAn);
}

TEST(DecomposeTest, RejectsTriangles) {
  const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_THROW(Decompose(g, DecomposeMode::kSafe), Error);
}

TEST(CertifyTest, ThreeP2) {
  const LowerBoundCertificate c = CertifyLowerBound(testing::Disjoint(3), DecomposeMode::kSafe);
  EXPECT_NEAR(c.bound, 2 * std::sqrt(3.0), 1e-15);
  EXPECT_GE(c.bound, 3.46);
  ASSERT_EQ(c.derivation.size(), 1u);
  EXPECT_EQ(c.derivation[0].label, "3-P2");
}

TEST(CertifyTest, L1) {
  const LowerBoundCertificate c = CertifyLowerBound(testing::Path(3), DecomposeMode::kSafe);
  EXPECT_NEAR(c.bound, 1 + std::sqrt(3.0), 1e-15);
}

TEST(CertifyTest, BoundIsSumOfTerms) {
  const Graph g = testing::Path(7);
  const LowerBoundCertificate c = CertifyLowerBound(g, DecomposeMode::kSafe);
  double s = 0;
  int edges = 0;
  for (const BoundTerm& t : c.derivation) {
    s += t.cost;
    edges += t.edges;
  }
  EXPECT_DOUBLE_EQ(c.bound, s);
  EXPECT_EQ(edges, 7);
  EXPECT_LE(c.bound, Solver(g) + 1e-6);
  EXPECT_GE(c.bound, 7 - 0.342);
}

TEST(CertifyTest, FundamentalConstants) {
  EXPECT_GE(FundamentalBound(Classify(testing::Disjoint(3)))[0].cost, 3 + 0.46);
  EXPECT_GE(FundamentalBound(Classify(testing::An(2)))[0].cost, 3 + 0.095);
  EXPECT_GE(FundamentalBound(Classify(testing::An(3)))[0].cost, 4 + 0.135);
  EXPECT_GE(FundamentalBound(Classify(testing::Bridge(1, 1)))[0].cost, 3 - 0.268);
  EXPECT_GE(FundamentalBound(Classify(testing::Bridge(2, 1)))[0].cost, 4 - 0.334);
  for (int n = 3; n <= 8; ++n) {
    const auto t = FundamentalBound(Classify(testing::Bridge(n, 1)));
    EXPECT_GE(t[0].cost, n + 2 - 0.342) << n;
  }
}

TEST(CertifyTest, FundamentalBoundsBelowSolver) {
  for (int n = 1; n <= 5; ++n) {
    const Graph g = testing::Bridge(n, 1);
    EXPECT_LE(FundamentalBound(Classify(g))[0].cost, Solver(g) + 1e-6) << n;
  }
}

TEST(CertifyTest, C5) {
  const LowerBoundCertificate c = CertifyC5();
  ASSERT_EQ(c.derivation.size(), 2u);
  EXPECT_NEAR(c.derivation[0].cost, 2.0, 1e-15);
  EXPECT_GE(c.derivation[1].cost, 3.095);
  EXPECT_GE(c.bound, std::sqrt(20.0) + 0.622);
  EXPECT_LE(c.bound, Solver(testing::Cycle(5)) + 1e-6);
}

TEST(DecomposeModeTest, Names) {
  EXPECT_EQ(ParseDecomposeMode("ultra_safe"), DecomposeMode::kUltraSafe);
  EXPECT_EQ(DecomposeModeName(DecomposeMode::kSafe), "safe");
  EXPECT_THROW(ParseDecomposeMode("fast"), Error);
}

}  // namespace
}  // namespace kmh
