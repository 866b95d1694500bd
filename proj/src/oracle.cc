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

#include "kmh/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "kmh/error.h"

namespace kmh {

std::string_view OracleMethodName(OracleMethod method) {
  switch (method) {
    case OracleMethod::kPartitionEnumWeiszfeld:
      return "partition_enum_weiszfeld";
    case OracleMethod::kPartitionEnumCentroid:
      return "partition_enum_centroid";
    case OracleMethod::kCenterSubsetEnum:
      return "center_subset_enum";
  }
  return "unknown";
}

namespace {

std::vector<Point> SubsetPoints(std::span<const Point> points,
                                std::uint32_t mask) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mask >> i & 1u) out.push_back(points[i]);
  }
  return out;
}

double MeansCost(std::span<const Point> points) {
  const Point c = Centroid(points);
  double s = 0;
  for (const Point& p : points) s += SquaredDistance(p, c);
  return s;
}

double SubsetCost(std::span<const Point> points, std::uint32_t mask,
                  Objective objective, const WeiszfeldOptions& options) {
  if (std::popcount(mask) <= 1) return 0.0;
  const std::vector<Point> sub = SubsetPoints(points, mask);
  if (objective == Objective::kMeans) return MeansCost(sub);
  return Weiszfeld(sub, options).cost;
}

}  // namespace

SubsetCostTable::SubsetCostTable(std::span<const Point> points,
                                 Objective objective, Execution execution,
                                 const WeiszfeldOptions& options)
    : points_(points.begin(), points.end()), objective_(objective) {
  if (points_.size() > kMaxContinuousPoints) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(points_.size()) + " points exceed the limit of " +
                    std::to_string(kMaxContinuousPoints));
  }
  const std::int64_t count = std::int64_t{1} << points_.size();
  cost_.assign(static_cast<std::size_t>(count), 0.0);
  if (execution == Execution::kSerial) {
    for (std::int64_t mask = 1; mask < count; ++mask) {
      cost_[mask] = SubsetCost(points_, static_cast<std::uint32_t>(mask),
                               objective_, options);
    }
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t mask = 1; mask < count; ++mask) {
    cost_[mask] = SubsetCost(points_, static_cast<std::uint32_t>(mask),
                             objective_, options);
  }
}

namespace {

// Slack on the pruning test; subset costs are only monotone up to solver
// tolerance.
constexpr double kPruneSlack = 1e-9;
constexpr int kPrefixDepth = 5;

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> rgs;
};

double LeafCost(const SubsetCostTable& table, const std::vector<std::uint32_t>& masks,
                int blocks) {
  double s = 0;
  for (int b = 0; b < blocks; ++b) s += table[masks[b]];
  return s;
}

void SerialSearch(const SubsetCostTable& table, int k, std::size_t i,
                  int blocks, std::vector<std::uint32_t>& masks,
                  std::vector<int>& rgs, Candidate& best) {
  const std::size_t n = table.num_points();
  if (i == n) {
    const double c = LeafCost(table, masks, blocks);
    if (c < best.cost) best = {c, rgs};
    return;
  }
  for (int b = 0; b <= blocks && b < k; ++b) {
    rgs[i] = b;
    masks[b] |= 1u << i;
    SerialSearch(table, k, i + 1, std::max(blocks, b + 1), masks, rgs, best);
    masks[b] &= ~(1u << i);
  }
}

struct PrunedSearch {
  const SubsetCostTable& table;
  int k;
  double upper;  // cost of a known leaf
  std::vector<std::uint32_t> masks;
  std::vector<int> rgs;
  Candidate best;

  void Run(std::size_t i, int blocks, double partial) {
    if (partial > std::min(upper, best.cost) + kPruneSlack) return;
    const std::size_t n = table.num_points();
    if (i == n) {
      const double c = LeafCost(table, masks, blocks);
      if (c < best.cost) best = {c, rgs};
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) {
      const std::uint32_t old = masks[b];
      const std::uint32_t grown = old | 1u << i;
      rgs[i] = b;
      masks[b] = grown;
      Run(i + 1, std::max(blocks, b + 1), partial - table[old] + table[grown]);
      masks[b] = old;
    }
  }
};

void Prefixes(std::size_t depth, int k, std::vector<int>& cur, int blocks,
              std::vector<std::vector<int>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= blocks && b < k; ++b) {
    cur.push_back(b);
    Prefixes(depth, k, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<int> BestPartition(const SubsetCostTable& table, int k,
                               Execution execution) {
  if (k < 1) throw Error(ErrorCode::kConfigError, "k must be at least 1");
  const std::size_t n = table.num_points();
  if (n == 0) return {};
  if (execution == Execution::kSerial) {
    std::vector<std::uint32_t> masks(n, 0);
    std::vector<int> rgs(n, 0);
    Candidate best;
    SerialSearch(table, k, 0, 0, masks, rgs, best);
    return best.rgs;
  }

  const double upper = table[(std::uint32_t{1} << n) - 1];
  std::vector<std::vector<int>> prefixes;
  std::vector<int> cur;
  Prefixes(std::min<std::size_t>(n, kPrefixDepth), k, cur, 0, prefixes);
  std::vector<Candidate> results(prefixes.size());
  const auto tasks = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < tasks; ++t) {
    PrunedSearch search{table, k, upper, std::vector<std::uint32_t>(n, 0),
                        std::vector<int>(n, 0), {}};
    int blocks = 0;
    for (std::size_t i = 0; i < prefixes[t].size(); ++i) {
      const int b = prefixes[t][i];
      search.rgs[i] = b;
      search.masks[b] |= 1u << i;
      blocks = std::max(blocks, b + 1);
    }
    search.Run(prefixes[t].size(), blocks,
               LeafCost(table, search.masks, blocks));
    results[t] = std::move(search.best);
  }
  Candidate best;
  for (Candidate& c : results) {
    if (c.cost < best.cost) best = std::move(c);
  }
  return best.rgs;
}

OracleReport OptContinuous(const SubsetCostTable& table, int k,
                           Execution execution,
                           const WeiszfeldOptions& options) {
  OracleReport rep;
  rep.k = k;
  rep.method = table.objective() == Objective::kMedian
                   ? OracleMethod::kPartitionEnumWeiszfeld
                   : OracleMethod::kPartitionEnumCentroid;
  rep.partition = BestPartition(table, k, execution);
  const int blocks =
      rep.partition.empty()
          ? 0
          : *std::max_element(rep.partition.begin(), rep.partition.end()) + 1;
  std::vector<std::uint32_t> masks(blocks, 0);
  for (std::size_t i = 0; i < rep.partition.size(); ++i) {
    masks[rep.partition[i]] |= 1u << i;
  }
  for (int b = 0; b < blocks; ++b) {
    const std::vector<Point> sub = SubsetPoints(table.points(), masks[b]);
    if (sub.size() == 1 || table.objective() == Objective::kMeans) {
      rep.centers.push_back(Centroid(sub));
    } else {
      rep.centers.push_back(Weiszfeld(sub, options).center);
    }
  }
  rep.optimal_cost = LeafCost(table, masks, blocks);
  return rep;
}

OracleReport OptContinuous(const ClusteringInstance& inst, Execution execution,
                           const WeiszfeldOptions& options) {
  if (inst.points.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "instance has no points");
  }
  const SubsetCostTable table(inst.points, inst.objective, execution, options);
  return OptContinuous(table, inst.k, execution, options);
}

namespace {

std::size_t Binomial(std::size_t n, std::size_t r, std::size_t cap) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  double v = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    v = v * static_cast<double>(n - r + i) / static_cast<double>(i);
    if (v > static_cast<double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(v));
}

struct CombinationSearch {
  CombinationSearch(const std::vector<std::vector<double>>& d, std::size_t nc,
                    std::size_t k)
      : dist(d), num_centers(nc), combo(k) {}

  const std::vector<std::vector<double>>& dist;  // point x candidate
  std::size_t num_centers;
  std::vector<std::size_t> combo;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best;

  void Evaluate() {
    double s = 0;
    for (const auto& row : dist) {
      double m = row[combo[0]];
      for (std::size_t j = 1; j < combo.size(); ++j) m = std::min(m, row[combo[j]]);
      s += m;
    }
    if (s < best_cost) {
      best_cost = s;
      best = combo;
    }
  }

  void Run(std::size_t pos, std::size_t start) {
    if (pos == combo.size()) {
      Evaluate();
      return;
    }
    const std::size_t left = combo.size() - pos;
    for (std::size_t c = start; c + left <= num_centers; ++c) {
      combo[pos] = c;
      Run(pos + 1, c + 1);
    }
  }
};

}  // namespace

OracleReport OptDiscrete(const ClusteringInstance& inst, Execution execution) {
  if (!inst.candidate_centers || inst.candidate_centers->empty()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "discrete oracle needs candidate centers");
  }
  if (inst.k < 1) throw Error(ErrorCode::kConfigError, "k must be at least 1");
  const auto& centers = *inst.candidate_centers;
  const std::size_t nc = centers.size();
  const std::size_t k = std::min<std::size_t>(inst.k, nc);
  if (Binomial(nc, k, kMaxCenterSubsets) > kMaxCenterSubsets) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "more than " + std::to_string(kMaxCenterSubsets) +
                    " center subsets");
  }
  const bool means = inst.objective == Objective::kMeans;
  std::vector<std::vector<double>> dist(inst.points.size(),
                                        std::vector<double>(nc));
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    for (std::size_t c = 0; c < nc; ++c) {
      const double d2 = SquaredDistance(inst.points[i], centers[c]);
      dist[i][c] = means ? d2 : std::sqrt(d2);
    }
  }

  std::vector<std::size_t> best;
  if (execution == Execution::kSerial) {
    CombinationSearch s(dist, nc, k);
    s.Run(0, 0);
    best = s.best;
  } else {
    const auto firsts = static_cast<std::int64_t>(nc - k + 1);
    std::vector<CombinationSearch> parts;
    parts.reserve(firsts);
    for (std::int64_t f = 0; f < firsts; ++f) {
      parts.emplace_back(dist, nc, k);
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t f = 0; f < firsts; ++f) {
      parts[f].combo[0] = static_cast<std::size_t>(f);
      parts[f].Run(1, static_cast<std::size_t>(f) + 1);
    }
    double best_cost = std::numeric_limits<double>::infinity();
    for (const auto& p : parts) {
      if (p.best_cost < best_cost) {
        best_cost = p.best_cost;
        best = p.best;
      }
    }
  }

  OracleReport rep;
  rep.k = static_cast<int>(k);
  rep.method = OracleMethod::kCenterSubsetEnum;
  rep.center_indices = best;
  for (std::size_t c : best) rep.centers.push_back(centers[c]);
  for (const auto& row : dist) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < best.size(); ++j) {
      if (row[best[j]] < row[best[arg]]) arg = j;
    }
    rep.partition.push_back(static_cast<int>(arg));
    rep.optimal_cost += row[best[arg]];
  }
  return rep;
}

double ReportCost(std::span<const Point> points, const OracleReport& report,
                  Objective objective) {
  double s = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d2 = SquaredDistance(points[i], report.centers[report.partition[i]]);
    s += objective == Objective::kMeans ? d2 : std::sqrt(d2);
  }
  return s;
}

VertexSet MinVertexCover(const Graph& g, std::size_t ceiling) {
  if (g.num_edges() > ceiling) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(g.num_edges()) + " edges exceed ceiling " +
                    std::to_string(ceiling));
  }
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  VertexSet best;
  for (Vertex v = 0; v < n; ++v) {
    for (const Edge& e : g.edges()) {
      if (e.Touches(v)) {
        best.push_back(v);
        break;
      }
    }
  }
  std::vector<char> used(n, 0);
  auto search = [&](auto&& self, std::size_t size) -> void {
    // Disjoint uncovered edges each need their own cover vertex.
    std::fill(used.begin(), used.end(), 0);
    std::optional<Edge> first;
    std::size_t matched = 0;
    for (const Edge& e : g.edges()) {
      if (in[e.u] || in[e.v]) continue;
      if (!first) first = e;
      if (!used[e.u] && !used[e.v]) {
        used[e.u] = used[e.v] = 1;
        ++matched;
      }
    }
    if (!first) {
      if (size < best.size()) {
        best.clear();
        for (Vertex v = 0; v < n; ++v) {
          if (in[v]) best.push_back(v);
        }
      }
      return;
    }
    if (size + matched >= best.size()) return;
    for (Vertex v : {first->u, first->v}) {
      in[v] = 1;
      self(self, size + 1);
      in[v] = 0;
    }
  };
  search(search, 0);
  return best;
}

namespace {

std::string ConnectedCanonicalForm(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  // Color refinement with colors named by sorted signatures, so the final
  // ordered partition does not depend on the input labeling.
  std::vector<int> color(n);
  const auto deg = g.Degrees();
  for (int v = 0; v < n; ++v) color[v] = deg[v];
  for (int classes = -1;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first.push_back(color[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (adj[v][w]) nb.push_back(color[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].first.insert(sig[v].first.end(), nb.begin(), nb.end());
      sig[v].second = v;
    }
    std::vector<std::vector<int>> keys;
    for (const auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    }
    if (static_cast<int>(keys.size()) == classes) break;
    classes = static_cast<int>(keys.size());
  }

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }

  std::string best;
  std::string cur(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
  auto emit = [&] {
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) cur[pos++] = adj[order[i]][order[j]] ? '1' : '0';
    }
    if (best.empty() || cur < best) best = cur;
  };
  auto permute = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      emit();
      return;
    }
    auto first = order.begin() + cells[c].first;
    auto last = order.begin() + cells[c].second;
    std::sort(first, last);
    do {
      self(self, c + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  return std::to_string(n) + ":" + best;
}

Graph DecodeConnected(const std::string& form) {
  const auto colon = form.find(':');
  const int n = std::stoi(form.substr(0, colon));
  std::vector<Edge> edges;
  std::size_t pos = colon + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (form[pos++] == '1') edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::string CanonicalForm(const Graph& g) {
  const auto comps = EdgeComponents(g);
  std::vector<std::string> forms;
  for (const auto& ids : comps) {
    forms.push_back(ConnectedCanonicalForm(CompactVertices(g.Subgraph(ids))));
  }
  std::sort(forms.begin(), forms.end());
  std::string out;
  for (const std::string& f : forms) {
    if (!out.empty()) out += '+';
    out += f;
  }
  return out;
}

std::vector<Graph> EnumerateTriangleFree(int max_edges,
                                         bool include_disconnected) {
  if (max_edges > kMaxEnumerationEdges) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "enumeration supports at most " +
                    std::to_string(kMaxEnumerationEdges) + " edges");
  }
  std::vector<std::pair<std::size_t, std::string>> connected;
  std::map<std::string, Graph> level;
  if (max_edges >= 1) {
    const Graph edge(2, {{0, 1}});
    level.emplace(CanonicalForm(edge), edge);
  }
  for (int e = 1; e <= max_edges && !level.empty(); ++e) {
    std::map<std::string, Graph> next;
    for (const auto& [form, g] : level) {
      connected.push_back({g.num_edges(), form});
      if (e == max_edges) continue;
      const int n = g.num_vertices();
      auto add = [&](Graph h) {
        std::string f = CanonicalForm(h);
        if (!next.contains(f)) next.emplace(f, DecodeConnected(f));
      };
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.HasEdge(u, v)) continue;
          bool common = false;
          for (Vertex w = 0; w < n && !common; ++w) {
            common = g.HasEdge(u, w) && g.HasEdge(v, w);
          }
          if (common) continue;
          std::vector<Edge> edges = g.edges();
          edges.push_back({u, v});
          add(Graph(n, std::move(edges)));
        }
        std::vector<Edge> edges = g.edges();
        edges.push_back({u, n});
        add(Graph(n + 1, std::move(edges)));
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::size_t, std::string>> all = connected;
  if (include_disconnected) {
    std::vector<std::string> pick;
    auto rec = [&](auto&& self, std::size_t from, std::size_t edges) -> void {
      if (pick.size() >= 2) {
        std::vector<std::string> sorted = pick;
        std::sort(sorted.begin(), sorted.end());
        std::string f;
        for (const std::string& s : sorted) f += (f.empty() ? "" : "+") + s;
        all.push_back({edges, f});
      }
      for (std::size_t i = from; i < connected.size(); ++i) {
        if (edges + connected[i].first > static_cast<std::size_t>(max_edges)) {
          continue;
        }
        pick.push_back(connected[i].second);
        self(self, i, edges + connected[i].first);
        pick.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Graph> out;
  out.reserve(all.size());
  for (const auto& [edges, form] : all) {
    Graph g;
    std::size_t start = 0;
    while (start <= form.size()) {
      std::size_t plus = form.find('+', start);
      if (plus == std::string::npos) plus = form.size();
      const Graph part = DecodeConnected(form.substr(start, plus - start));
      g = g.num_vertices() == 0 ? part : DisjointUnion(g, part);
      start = plus + 1;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % range;
  }
}

Graph RandomTriangleFree(int n, int max_degree, std::uint64_t seed,
                         std::size_t max_edges) {
  if (n < 0 || max_degree < 1) {
    throw Error(ErrorCode::kPreconditionViolated,
                "need n >= 0 and max degree >= 1");
  }
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[UniformIndex(rng, i)]);
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  for (const Edge& e : pairs) {
    if (edges.size() >= max_edges) break;
    if (deg[e.u] >= max_degree || deg[e.v] >= max_degree) continue;
    bool common = false;
    for (Vertex w = 0; w < n && !common; ++w) common = adj[e.u][w] && adj[e.v][w];
    if (common) continue;
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
    ++deg[e.u];
    ++deg[e.v];
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

}  // namespace kmh
