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

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

#include "kmh/error.h"

namespace kmh {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kStuck: return "Stuck";
    case ErrorCode::kCase2Reached: return "Case2Reached";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) {
    throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
  }
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidGraph,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= num_vertices_) {
      throw Error(ErrorCode::kInvalidGraph,
                  "endpoint out of range in edge (" + std::to_string(e.u) +
                      "," + std::to_string(e.v) + ")");
    }
  }
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidGraph, "duplicate edge");
  }
}

Graph Graph::FromPairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  int n = 0;
  for (const auto& [a, b] : pairs) {
    edges.push_back({a, b});
    n = std::max({n, a + 1, b + 1});
  }
  return Graph(n, std::move(edges));
}

std::vector<int> Graph::Degrees() const {
  std::vector<int> deg(num_vertices_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Graph::HasEdge(Vertex a, Vertex b) const {
  return FindEdge(a, b).has_value();
}

std::optional<EdgeId> Graph::FindEdge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == a && edges_[i].v == b) return i;
  }
  return std::nullopt;
}

Graph Graph::Subgraph(std::span<const EdgeId> ids) const {
  Graph out;
  out.num_vertices_ = num_vertices_;
  out.edges_.reserve(ids.size());
  for (EdgeId id : ids) out.edges_.push_back(edges_.at(id));
  return out;
}

std::vector<EdgeId> Graph::ComplementIds(std::span<const EdgeId> ids) const {
  std::vector<char> drop(edges_.size(), 0);
  for (EdgeId id : ids) drop.at(id) = 1;
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) out.push_back(i);
  }
  return out;
}

std::vector<EdgeId> Graph::UncoveredBy(std::span<const Vertex> cover) const {
  std::vector<char> in(num_vertices_, 0);
  for (Vertex v : cover) in.at(v) = 1;
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (!in[edges_[i].u] && !in[edges_[i].v]) out.push_back(i);
  }
  return out;
}

bool IsMatching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (std::size_t i = 0; i < m.edge_ids.size(); ++i) {
    if (m.edge_ids[i] >= g.num_edges()) return false;
    if (i > 0 && m.edge_ids[i] <= m.edge_ids[i - 1]) return false;
    const Edge& e = g.edge(m.edge_ids[i]);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool IsMaximalMatching(const Graph& g, const Matching& m) {
  if (!IsMatching(g, m)) return false;
  std::vector<char> used(g.num_vertices(), 0);
  for (EdgeId id : m.edge_ids) used[g.edge(id).u] = used[g.edge(id).v] = 1;
  for (const Edge& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) return false;
  }
  return true;
}

std::string ClassTagName(ClassTag tag) {
  switch (tag) {
    case ClassTag::kEmpty: return "Empty";
    case ClassTag::kSingleEdge: return "SingleEdge";
    case ClassTag::kStar: return "Star";
    case ClassTag::kThreeP2: return "ThreeP2";
    case ClassTag::kAn: return "A_n";
    case ClassTag::kLn: return "L_n";
    case ClassTag::kBridge: return "Bridge";
    case ClassTag::kC5: return "C5";
    case ClassTag::kOtherNonStar: return "OtherNonStar";
  }
  return "Unknown";
}

std::string GraphClass::ToString() const {
  switch (tag) {
    case ClassTag::kAn: return "A_" + std::to_string(n);
    case ClassTag::kLn: return "L_" + std::to_string(n);
    case ClassTag::kBridge:
      return "L_{" + std::to_string(p) + "," + std::to_string(q) + "}";
    default: return ClassTagName(tag);
  }
}

namespace {

std::vector<std::vector<Vertex>> Adjacency(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool PairwiseDisjoint(const Graph& g) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace

bool IsTriangleFree(const Graph& g) {
  const auto adj = Adjacency(g);
  for (const Edge& e : g.edges()) {
    const auto& a = adj[e.u];
    const auto& b = adj[e.v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      a[i] < b[j] ? ++i : ++j;
    }
  }
  return true;
}

int MaxDegree(const Graph& g) {
  const auto deg = g.Degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

namespace {

// 2-coloring of non-isolated vertices; nullopt on an odd cycle.
std::optional<std::vector<int>> TwoColoring(const Graph& g) {
  const auto adj = Adjacency(g);
  std::vector<int> color(g.num_vertices(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

bool IsBipartite(const Graph& g) { return TwoColoring(g).has_value(); }

std::optional<Vertex> StarCenter(const Graph& g) {
  if (g.empty()) return std::nullopt;
  const Edge& first = g.edge(0);
  for (Vertex c : {first.u, first.v}) {
    bool all = true;
    for (const Edge& e : g.edges()) {
      if (!e.Touches(c)) {
        all = false;
        break;
      }
    }
    if (all) return c;
  }
  return std::nullopt;
}

std::optional<BridgeWitness> FindBridge(const Graph& g) {
  if (g.num_edges() < 3) return std::nullopt;
  const auto deg = g.Degrees();
  for (EdgeId b = 0; b < g.num_edges(); ++b) {
    const Vertex s1 = g.edge(b).u;
    const Vertex s2 = g.edge(b).v;
    if (deg[s1] < 2 || deg[s2] < 2) continue;
    std::vector<char> left(g.num_vertices(), 0);
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!e.Touches(s1) && !e.Touches(s2)) {
        ok = false;
        break;
      }
      if (e.Touches(s1) && !e.Touches(s2)) left[e.Other(s1)] = 1;
    }
    if (!ok) continue;
    for (const Edge& e : g.edges()) {
      if (e.Touches(s2) && !e.Touches(s1) && left[e.Other(s2)]) {
        ok = false;  // common pendant closes a triangle
        break;
      }
    }
    if (!ok) continue;
    BridgeWitness w{s1, s2, b, deg[s1] - 1, deg[s2] - 1};
    if (w.p < w.q) {
      std::swap(w.s1, w.s2);
      std::swap(w.p, w.q);
    }
    return w;
  }
  return std::nullopt;
}

bool IsFundamentalByDefinition(const Graph& g) {
  if (!IsNonStar(g)) return false;
  const std::size_t m = g.num_edges();
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = i + 1; j < m; ++j) {
      if (g.edge(i).SharesVertex(g.edge(j))) continue;
      const EdgeId drop[] = {i, j};
      const Graph rest = g.Subgraph(g.ComplementIds(drop));
      if (IsNonStar(rest)) return false;
    }
  }
  return true;
}

std::vector<std::vector<EdgeId>> EdgeComponents(const Graph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::vector<std::vector<EdgeId>> out;
  std::vector<int> slot(g.num_vertices(), -1);
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    const int root = find(g.edge(i).u);
    if (slot[root] == -1) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(i);
  }
  return out;
}

bool IsConnected(const Graph& g) { return EdgeComponents(g).size() <= 1; }

Matching MaximalMatchingGreedy(const Graph& g, std::span<const EdgeId> order) {
  std::vector<EdgeId> ids;
  if (order.empty()) {
    ids.resize(g.num_edges());
    std::iota(ids.begin(), ids.end(), EdgeId{0});
  } else {
    ids.assign(order.begin(), order.end());
  }
  std::vector<char> used(g.num_vertices(), 0);
  Matching m;
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    m.edge_ids.push_back(id);
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g)
      : g_(g), used_(g.num_vertices(), 0) {
    std::vector<char> touched(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) touched[e.u] = touched[e.v] = 1;
    vertex_cap_ = static_cast<std::size_t>(
                      std::count(touched.begin(), touched.end(), 1)) / 2;
  }

  std::vector<EdgeId> Run() {
    Recurse(0);
    return best_;
  }

 private:
  std::size_t AvailableBound(EdgeId from) const {
    std::size_t free_edges = 0;
    for (EdgeId i = from; i < g_.num_edges(); ++i) {
      const Edge& e = g_.edge(i);
      if (!used_[e.u] && !used_[e.v]) ++free_edges;
    }
    return std::min(free_edges, vertex_cap_ - current_.size());
  }

  void Recurse(EdgeId i) {
    if (current_.size() > best_.size()) best_ = current_;
    if (best_.size() == vertex_cap_) return;
    if (i == g_.num_edges()) return;
    if (current_.size() + AvailableBound(i) <= best_.size()) return;
    const Edge& e = g_.edge(i);
    if (!used_[e.u] && !used_[e.v]) {
      used_[e.u] = used_[e.v] = 1;
      current_.push_back(i);
      Recurse(i + 1);
      current_.pop_back();
      used_[e.u] = used_[e.v] = 0;
      if (best_.size() == vertex_cap_) return;
    }
    Recurse(i + 1);
  }

  const Graph& g_;
  std::vector<char> used_;
  std::size_t vertex_cap_ = 0;
  std::vector<EdgeId> current_;
  std::vector<EdgeId> best_;
};

void CheckCeiling(const Graph& g, std::size_t ceiling) {
  if (g.num_edges() > ceiling) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(g.num_edges()) + " edges exceeds ceiling " +
                    std::to_string(ceiling));
  }
}

}  // namespace

Matching MaximumMatching(const Graph& g, std::size_t ceiling) {
  CheckCeiling(g, ceiling);
  return Matching{MatchingSearch(g).Run()};
}

Matching SecondMaximumMatching(const Graph& g, const Matching& m,
                               std::size_t ceiling) {
  CheckCeiling(g, ceiling);
  const std::vector<EdgeId> rest = g.ComplementIds(m.edge_ids);
  const Matching local = MaximumMatching(g.Subgraph(rest), ceiling);
  Matching out;
  for (EdgeId id : local.edge_ids) out.edge_ids.push_back(rest[id]);
  return out;
}

GraphClass Classify(const Graph& g) {
  GraphClass c;
  const std::size_t m = g.num_edges();
  if (m == 0) return c;
  if (m == 1) {
    c.tag = ClassTag::kSingleEdge;
    c.witness = {g.edge(0).u, g.edge(0).v};
    return c;
  }
  if (auto center = StarCenter(g)) {
    c.tag = ClassTag::kStar;
    c.witness = {*center};
    return c;
  }
  c.tag = ClassTag::kOtherNonStar;
  if (!IsTriangleFree(g)) return c;

  if (m == 3 && PairwiseDisjoint(g)) {
    c.tag = ClassTag::kThreeP2;
    return c;
  }

  // A_n: a star plus one edge detached from it.
  for (EdgeId i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    bool detached = true;
    for (EdgeId j = 0; j < m && detached; ++j) {
      if (j != i && g.edge(j).SharesVertex(e)) detached = false;
    }
    if (!detached) continue;
    const EdgeId self[] = {i};
    const Graph rest = g.Subgraph(g.ComplementIds(self));
    if (auto center = StarCenter(rest)) {
      c.tag = ClassTag::kAn;
      c.n = static_cast<int>(m) - 1;
      c.witness = {*center, e.u, e.v};
      return c;
    }
  }

  if (auto b = FindBridge(g)) {
    c.tag = b->q == 1 ? ClassTag::kLn : ClassTag::kBridge;
    c.n = b->q == 1 ? b->p : 0;
    c.p = b->p;
    c.q = b->q;
    c.witness = {b->s1, b->s2};
    return c;
  }

  if (m == 5) {
    const auto deg = g.Degrees();
    const bool two_regular = std::count(deg.begin(), deg.end(), 2) == 5 &&
                             std::count(deg.begin(), deg.end(), 0) ==
                                 static_cast<long>(deg.size()) - 5;
    if (two_regular && IsConnected(g)) {
      const auto adj = Adjacency(g);
      Vertex start = 0;
      while (deg[start] == 0) ++start;
      std::vector<Vertex> cycle = {start};
      Vertex prev = start;
      Vertex cur = adj[start][0];
      while (cur != start) {
        cycle.push_back(cur);
        const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      c.tag = ClassTag::kC5;
      c.witness = cycle;
      return c;
    }
  }
  return c;
}

Graph CompactVertices(const Graph& g) {
  std::vector<int> label(g.num_vertices(), -1);
  for (const Edge& e : g.edges()) label[e.u] = label[e.v] = 0;
  int next = 0;
  for (int& l : label) {
    if (l == 0) l = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({label[e.u], label[e.v]});
  return Graph(next, std::move(edges));
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.num_vertices();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

VertexSet KonigCover(const Graph& g) {
  const auto coloring = TwoColoring(g);
  if (!coloring) throw Error(ErrorCode::kNotBipartite, "graph has an odd cycle");
  const auto& color = *coloring;
  const auto adj = Adjacency(g);
  const int n = g.num_vertices();
  std::vector<Vertex> mate(n, -1);

  std::vector<char> visited;
  // Kuhn's augmenting-path search from left (color 0) vertices.
  auto augment = [&](auto&& self, Vertex x) -> bool {
    for (Vertex y : adj[x]) {
      if (visited[y]) continue;
      visited[y] = 1;
      if (mate[y] == -1 || self(self, mate[y])) {
        mate[y] = x;
        mate[x] = y;
        return true;
      }
    }
    return false;
  };
  for (Vertex x = 0; x < n; ++x) {
    if (color[x] != 0 || adj[x].empty() || mate[x] != -1) continue;
    visited.assign(n, 0);
    augment(augment, x);
  }

  // Alternating reachability from unmatched left vertices.
  std::vector<char> reach(n, 0);
  std::queue<Vertex> queue;
  for (Vertex x = 0; x < n; ++x) {
    if (color[x] == 0 && mate[x] == -1) {
      reach[x] = 1;
      queue.push(x);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : adj[x]) {
      if (reach[y] || mate[x] == y) continue;
      reach[y] = 1;
      if (mate[y] != -1 && !reach[mate[y]]) {
        reach[mate[y]] = 1;
        queue.push(mate[y]);
      }
    }
  }
  VertexSet cover;
  for (Vertex x = 0; x < n; ++x) {
    if (adj[x].empty()) continue;
    if ((color[x] == 0 && !reach[x]) || (color[x] == 1 && reach[x])) {
      cover.push_back(x);
    }
  }
  return cover;
}

bool IsVertexCover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) {
    if (v >= 0 && v < g.num_vertices()) in[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

Graph ParseEdgeList(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<int> declared;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": " + why);
    };
    if (first == "p") {
      int n = 0;
      if (!(row >> n) || n < 0) fail("bad header");
      declared = n;
      continue;
    }
    int u = 0, v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) fail("bad vertex id '" + first + "'");
    } catch (const std::logic_error&) {
      fail("bad vertex id '" + first + "'");
    }
    if (!(row >> v)) fail("expected two vertex ids");
    std::string extra;
    if (row >> extra) fail("trailing token '" + extra + "'");
    if (u < 0 || v < 0) fail("negative vertex id");
    edges.push_back({u, v});
    max_id = std::max({max_id, u, v});
  }
  const int n = declared.value_or(max_id + 1);
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return ParseEdgeList(in);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace kmh
