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

#ifndef KMH_GRAPH_H_
#define KMH_GRAPH_H_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kmh {

using Vertex = int;
using EdgeId = std::size_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Default edge-count ceiling for the exhaustive matching and vertex-cover
// searches.
inline constexpr std::size_t kDefaultBruteForceCeiling = 24;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool Touches(Vertex x) const { return u == x || v == x; }
  bool SharesVertex(const Edge& o) const { return Touches(o.u) || Touches(o.v); }
  Vertex Other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph. Edges are stored with u < v in insertion order;
// edge indices are the identity used by matchings, clusterings and traces.
class Graph {
 public:
  Graph() = default;
  // Throws Error(kInvalidGraph) on self-loops, duplicates or out-of-range ids.
  Graph(int num_vertices, std::vector<Edge> edges);
  // Vertex count is 1 + the largest endpoint.
  static Graph FromPairs(const std::vector<std::pair<Vertex, Vertex>>& pairs);

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::vector<int> Degrees() const;
  bool HasEdge(Vertex a, Vertex b) const;
  std::optional<EdgeId> FindEdge(Vertex a, Vertex b) const;

  // Keeps the vertex set; edge i of the result is edge ids[i] of *this.
  Graph Subgraph(std::span<const EdgeId> ids) const;
  // Edge ids of *this not listed in `ids`, ascending.
  std::vector<EdgeId> ComplementIds(std::span<const EdgeId> ids) const;
  // Edges not touching any vertex of `cover`, ascending ids.
  std::vector<EdgeId> UncoveredBy(std::span<const Vertex> cover) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// A set of pairwise vertex-disjoint edges, referenced by host edge index.
struct Matching {
  std::vector<EdgeId> edge_ids;  // ascending

  std::size_t size() const { return edge_ids.size(); }
  bool empty() const { return edge_ids.empty(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

bool IsMatching(const Graph& g, const Matching& m);
// Every edge outside `m` shares a vertex with some member.
bool IsMaximalMatching(const Graph& g, const Matching& m);

enum class ClassTag {
  kEmpty,
  kSingleEdge,
  kStar,
  kThreeP2,
  kAn,
  kLn,
  kBridge,
  kC5,
  kOtherNonStar,
};

std::string ClassTagName(ClassTag tag);

// Structural class of a graph, ignoring isolated vertices.
//
// Witness layout by tag:
//   SingleEdge  {u, v}
//   Star        {center}
//   ThreeP2     {} (the three edges are the whole graph)
//   An          {star center, a, b} where (a, b) is the detached edge
//   Ln, Bridge  {s1, s2}: bridge endpoints, s1 the center of the larger star
//   C5          the five vertices in cycle order, starting at the smallest
struct GraphClass {
  ClassTag tag = ClassTag::kEmpty;
  int n = 0;  // index of A_n / L_n
  int p = 0;  // Bridge(p, q) star sizes, p >= q; also set for L_n (q == 1)
  int q = 0;
  std::vector<Vertex> witness;

  bool IsFundamental() const {
    return tag == ClassTag::kThreeP2 || tag == ClassTag::kAn ||
           tag == ClassTag::kLn;
  }
  std::string ToString() const;
};

struct BridgeWitness {
  Vertex s1 = 0;  // center of the star with p pendant edges
  Vertex s2 = 0;
  EdgeId bridge = 0;
  int p = 0;
  int q = 0;
};

bool IsTriangleFree(const Graph& g);
int MaxDegree(const Graph& g);
bool IsBipartite(const Graph& g);

// Common vertex of all edges, if any. A single edge reports its smaller
// endpoint. Empty graphs have no center.
std::optional<Vertex> StarCenter(const Graph& g);
inline bool IsStar(const Graph& g) { return StarCenter(g).has_value(); }
inline bool IsNonStar(const Graph& g) { return !g.empty() && !IsStar(g); }

// Detects the two-star bridge graph L_{p,q} with p, q >= 1.
std::optional<BridgeWitness> FindBridge(const Graph& g);
inline bool IsBridgeGraph(const Graph& g) { return FindBridge(g).has_value(); }

// True iff the graph is non-star and removing any vertex-disjoint pair of
// edges leaves a star or nothing. Direct check of the definition.
bool IsFundamentalByDefinition(const Graph& g);

// Edge ids grouped by connected component; components ordered by their
// smallest edge id.
std::vector<std::vector<EdgeId>> EdgeComponents(const Graph& g);
bool IsConnected(const Graph& g);

// Greedy matching scanning `order` (edge ids); empty order means ascending.
Matching MaximalMatchingGreedy(const Graph& g, std::span<const EdgeId> order = {});

// Exhaustive branch-and-bound. Among maximum matchings returns the one whose
// sorted edge-id tuple is lexicographically smallest.
Matching MaximumMatching(const Graph& g,
                         std::size_t ceiling = kDefaultBruteForceCeiling);

// Maximum matching of g with the edges of `m` deleted, in g's edge ids.
Matching SecondMaximumMatching(const Graph& g, const Matching& m,
                               std::size_t ceiling = kDefaultBruteForceCeiling);

GraphClass Classify(const Graph& g);

// Relabels the non-isolated vertices to 0..n'-1 preserving their order; edge
// order is unchanged.
Graph CompactVertices(const Graph& g);
// Vertex-disjoint union; vertices of b are shifted past those of a.
Graph DisjointUnion(const Graph& a, const Graph& b);

// Minimum vertex cover of a bipartite graph via augmenting paths and the
// alternating-reachability construction. Throws Error(kNotBipartite).
VertexSet KonigCover(const Graph& g);

bool IsVertexCover(const Graph& g, std::span<const Vertex> cover);

// Edge-list text: "u v" per line, '#' comments, blank lines skipped, optional
// "p <num_vertices>" header. Throws Error(kParseError).
Graph ParseEdgeList(std::istream& in);
Graph ReadEdgeListFile(const std::string& path);
std::string FormatEdgeList(const Graph& g);

}  // namespace kmh

#endif  // KMH_GRAPH_H_
