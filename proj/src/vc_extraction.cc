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

#include <algorithm>
#include <cmath>

#include "kmh/error.h"

namespace kmh {

namespace {

VertexSet Normalize(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Contains(const std::vector<Vertex>& vs, Vertex v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

// Drops, in ascending order, every vertex whose edges stay covered without it.
VertexSet PruneRedundant(const Graph& g, VertexSet cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) in[v] = 1;
  std::vector<std::vector<Vertex>> nbrs(g.num_vertices());
  for (const Edge& e : g.edges()) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }
  VertexSet out;
  for (Vertex v : cover) {
    const bool needed = std::any_of(nbrs[v].begin(), nbrs[v].end(),
                                    [&](Vertex w) { return !in[w]; });
    if (needed) {
      out.push_back(v);
    } else {
      in[v] = 0;
    }
  }
  return out;
}

CoverResult Finish(const Graph& g, std::vector<Vertex> cover,
                   std::string kind, double bound_const, double delta) {
  CoverResult out;
  out.cover = PruneRedundant(g, Normalize(std::move(cover)));
  out.bound_kind = std::move(kind);
  out.bound_const = bound_const;
  out.bound_value = bound_const + kDeltaSlope * delta;
  out.delta_used = delta;
  out.valid = IsVertexCover(g, out.cover);
  if (!out.valid) {
    throw Error(ErrorCode::kStuck, out.bound_kind + " cover misses an edge");
  }
  return out;
}

void RequireTriangleFreeNonStar(const Graph& g) {
  if (!IsNonStar(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph is a star or empty");
  }
  if (!IsTriangleFree(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph has a triangle");
  }
}

std::vector<EdgeId> Union(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  std::vector<EdgeId> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Translates edge ids of g.Subgraph(ids) back to g.
Matching Lift(const Matching& local, std::span<const EdgeId> ids) {
  Matching out;
  for (EdgeId id : local.edge_ids) out.edge_ids.push_back(ids[id]);
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

double MedianDelta(const Graph& g, const WeiszfeldOptions& options) {
  return ComputeExtraCost(g, Objective::kMedian, options).value;
}

// The construction of CoverGeneral without bookkeeping.
std::vector<Vertex> GeneralCoverVertices(const Graph& g, const Matching& m,
                                         const Matching& l) {
  const std::size_t msize = m.size();
  const std::size_t lsize = l.size();
  std::vector<Vertex> cover;
  for (std::size_t i = 1; i < lsize; ++i) {
    const Edge& e = g.edge(l.edge_ids[i]);
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  std::vector<char> red(g.num_edges(), 0);
  for (EdgeId id : m.edge_ids) red[id] = 1;
  std::vector<EdgeId> r_ids, nr_ids;
  for (EdgeId id : g.UncoveredBy(cover)) {
    (red[id] ? r_ids : nr_ids).push_back(id);
  }
  const auto center = StarCenter(g.Subgraph(nr_ids));
  if (!center) {
    throw Error(ErrorCode::kStuck, "non-red remainder is not a star");
  }
  const Vertex u = *center;
  const std::size_t r = r_ids.size();
  if (r + lsize <= msize) {
    cover.push_back(u);
    for (EdgeId id : r_ids) {
      const Edge& e = g.edge(id);
      if (!Contains(cover, e.u) && !Contains(cover, e.v)) cover.push_back(e.u);
    }
  } else if (r + lsize == msize + 1) {
    auto touched_by_nr = [&](Vertex x) {
      for (EdgeId id : nr_ids) {
        if (g.edge(id).Touches(x)) return true;
      }
      return false;
    };
    for (EdgeId id : r_ids) {
      const Edge& e = g.edge(id);
      if (e.Touches(u)) {
        cover.push_back(u);
      } else if (touched_by_nr(e.u)) {
        cover.push_back(e.u);
      } else if (touched_by_nr(e.v)) {
        cover.push_back(e.v);
      } else {
        cover.push_back(e.u);
      }
    }
  } else {
    throw Error(ErrorCode::kCase2Reached,
                std::to_string(r) + " red edges remain with |M|=" +
                    std::to_string(msize) + ", |L|=" + std::to_string(lsize));
  }
  return cover;
}

}  // namespace

CoverResult CoverMatchingTwo(const Graph& g, const WeiszfeldOptions& options) {
  RequireTriangleFreeNonStar(g);
  const Matching m = MaximumMatching(g, g.num_edges());
  if (m.size() != 2) {
    throw Error(ErrorCode::kPreconditionViolated,
                "maximum matching has " + std::to_string(m.size()) + " edges");
  }
  const Edge e1 = g.edge(m.edge_ids[0]);
  const Edge e2 = g.edge(m.edge_ids[1]);
  auto in_vm = [&](Vertex x) { return e1.Touches(x) || e2.Touches(x); };
  std::vector<Edge> u1_edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (id == m.edge_ids[0] || id == m.edge_ids[1]) continue;
    const Edge& e = g.edge(id);
    if (in_vm(e.u) != in_vm(e.v)) u1_edges.push_back(e);
  }
  // Orient each matching edge so that U1 edges only touch its u side.
  auto orient = [&](const Edge& e) -> std::pair<Vertex, Vertex> {
    for (Vertex side : {e.u, e.v}) {
      const Vertex other = e.Other(side);
      bool ok = true;
      for (const Edge& f : u1_edges) {
        if (f.Touches(other)) ok = false;
      }
      if (ok) return {side, other};
    }
    throw Error(ErrorCode::kStuck, "U1 edges on both ends of a matching edge");
  };
  const auto [u1, v1] = orient(e1);
  const auto [u2, v2] = orient(e2);
  bool all_on_u1 = true, all_on_u2 = true;
  for (const Edge& f : u1_edges) {
    if (!f.Touches(u1)) all_on_u1 = false;
    if (!f.Touches(u2)) all_on_u2 = false;
  }

  std::vector<Vertex> cover;
  std::string kind = "matching_two";
  if (!g.HasEdge(v1, v2)) {
    cover = {u1, u2};
  } else if (all_on_u1) {
    cover = {u1, v2};
  } else if (all_on_u2) {
    cover = {u2, v1};
  } else {
    Vertex x = -1;
    for (const Edge& f : u1_edges) {
      if (f.Touches(u1)) {
        x = f.Other(u1);
        break;
      }
    }
    cover = {u1, v2, x};
    kind = "matching_two_c5";
  }
  return Finish(g, std::move(cover), kind, 1.62, MedianDelta(g, options));
}

CoverResult CoverGeneral(const Graph& g, const Matching& m, const Matching& l) {
  RequireTriangleFreeNonStar(g);
  if (!IsMatching(g, m) || !IsMatching(g, l)) {
    throw Error(ErrorCode::kPreconditionViolated, "input is not a matching");
  }
  if (m.size() != MaximumMatching(g, g.num_edges()).size()) {
    throw Error(ErrorCode::kPreconditionViolated, "M is not maximum");
  }
  const std::vector<EdgeId> rest = g.ComplementIds(m.edge_ids);
  for (EdgeId id : l.edge_ids) {
    if (!std::binary_search(rest.begin(), rest.end(), id)) {
      throw Error(ErrorCode::kPreconditionViolated, "L shares an edge with M");
    }
  }
  if (l.size() != MaximumMatching(g.Subgraph(rest), rest.size()).size()) {
    throw Error(ErrorCode::kPreconditionViolated, "L is not maximum in F'");
  }
  if (l.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "L is empty");
  }
  const double bound = static_cast<double>(m.size() + l.size() - 1);
  CoverResult out = Finish(g, GeneralCoverVertices(g, m, l), "general", bound, 0);
  out.bound_value = bound;
  if (out.size() > m.size() + l.size() - 1) {
    throw Error(ErrorCode::kStuck, "general cover exceeds |M|+|L|-1");
  }
  return out;
}

namespace {

// F' is a bridge graph with |L| = 2: one bridge endpoint plus a general
// cover of what it leaves.
std::vector<Vertex> BridgeOfFPrimeCover(const Graph& g, const Matching& m,
                                        const BridgeWitness& b) {
  EdgeId e_id = 0;
  Vertex u = -1;
  for (EdgeId id : m.edge_ids) {
    const Edge& e = g.edge(id);
    if (e.Touches(b.s1) || e.Touches(b.s2)) {
      e_id = id;
      u = e.Touches(b.s1) ? b.s1 : b.s2;
      break;
    }
  }
  if (u < 0) throw Error(ErrorCode::kStuck, "bridge misses every M edge");
  const Vertex pick[] = {u};
  const std::vector<EdgeId> ids = g.UncoveredBy(pick);
  const Graph rest = g.Subgraph(ids);
  std::vector<Vertex> cover = {u};
  if (rest.empty()) return cover;
  if (auto c = StarCenter(rest)) {
    cover.push_back(*c);
    return cover;
  }
  Matching m_prime;
  for (EdgeId local = 0; local < ids.size(); ++local) {
    if (ids[local] != e_id &&
        std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), ids[local])) {
      m_prime.edge_ids.push_back(local);
    }
  }
  if (MaximumMatching(rest, rest.num_edges()).size() != m_prime.size()) {
    throw Error(ErrorCode::kStuck, "M minus e is not maximum after removal");
  }
  const Matching l_prime = SecondMaximumMatching(rest, m_prime, rest.num_edges());
  if (l_prime.empty()) {
    for (EdgeId local : m_prime.edge_ids) cover.push_back(rest.edge(local).u);
    return cover;
  }
  for (Vertex v : GeneralCoverVertices(rest, m_prime, l_prime)) {
    cover.push_back(v);
  }
  return cover;
}

// F'' is a bridge graph: both bridge endpoints plus a Konig cover of the
// M and L edges they miss.
std::vector<Vertex> BridgeOfFDoublePrimeCover(const Graph& g,
                                              const Matching& m,
                                              const Matching& l,
                                              const BridgeWitness& b) {
  std::vector<Vertex> cover = {b.s1, b.s2};
  std::vector<EdgeId> rest;
  for (EdgeId id : Union(m.edge_ids, l.edge_ids)) {
    const Edge& e = g.edge(id);
    if (!e.Touches(b.s1) && !e.Touches(b.s2)) rest.push_back(id);
  }
  for (Vertex v : KonigCover(g.Subgraph(rest))) cover.push_back(v);
  return cover;
}

}  // namespace

CoverResult CoverCaseDispatch(const Graph& g, const WeiszfeldOptions& options) {
  RequireTriangleFreeNonStar(g);
  const Matching m = MaximumMatching(g, g.num_edges());
  if (m.size() < 3) {
    throw Error(ErrorCode::kPreconditionViolated,
                "maximum matching has fewer than three edges");
  }
  const Matching l = SecondMaximumMatching(g, m, g.num_edges());
  const double delta = MedianDelta(g, options);
  const Graph f1 = g.Subgraph(g.ComplementIds(m.edge_ids));
  const Graph f2 = g.Subgraph(g.ComplementIds(Union(m.edge_ids, l.edge_ids)));

  if (l.size() == 0) {
    std::vector<Vertex> cover;
    for (EdgeId id : m.edge_ids) cover.push_back(g.edge(id).u);
    return Finish(g, std::move(cover), "L0", 0.551, delta);
  }
  if (l.size() == 1) {
    return Finish(g, GeneralCoverVertices(g, m, l), "L1", 1.8, delta);
  }
  if (l.size() == 2) {
    if (auto b = FindBridge(f1)) {
      return Finish(g, BridgeOfFPrimeCover(g, m, *b), "L2_bridge", 1.53, delta);
    }
    return Finish(g, GeneralCoverVertices(g, m, l), "L2_nonbridge", 1.68,
                  delta);
  }
  if (auto b = FindBridge(f2)) {
    return Finish(g, BridgeOfFDoublePrimeCover(g, m, l, *b), "L3_bridge", 1.4,
                  delta);
  }
  if (IsNonStar(f2)) {
    return Finish(g, GeneralCoverVertices(g, m, l), "L3_nonstar_nonbridge",
                  1.6, delta);
  }
  return Finish(g, GeneralCoverVertices(g, m, l), "L3_star", 1.8, delta);
}

CoverResult CoverNonstarMeans(const Graph& g) {
  if (!IsNonStar(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph is a star or empty");
  }
  const auto deg = g.Degrees();
  EdgeId best = 0;
  for (EdgeId id = 1; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const Edge& b = g.edge(best);
    if (deg[e.u] + deg[e.v] > deg[b.u] + deg[b.v]) best = id;
  }
  std::vector<Vertex> cover = {g.edge(best).u, g.edge(best).v};
  for (const Edge& e : g.edges()) {
    if (!Contains(cover, e.u) && !Contains(cover, e.v)) cover.push_back(e.u);
  }
  const Rational delta = MeansExtraCost(g);
  CoverResult out = Finish(g, std::move(cover), "means_nonstar", 1.0,
                           boost::rational_cast<double>(delta));
  out.bound_value = 1.0 + 2.5 * out.delta_used;
  return out;
}

SingleEdgeResult CoverSingleEdgeClusters(const Graph& g,
                                         std::span<const EdgeId> singles,
                                         std::span<const Vertex> vc_prime,
                                         int k, double delta) {
  const std::size_t m = g.num_edges();
  std::vector<char> in_vc(g.num_vertices(), 0);
  for (Vertex v : vc_prime) {
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(ErrorCode::kPreconditionViolated, "vertex out of range");
    }
    in_vc[v] = 1;
  }
  std::vector<char> in_p(m, 0);
  for (EdgeId id : singles) {
    if (id >= m || in_p[id]) {
      throw Error(ErrorCode::kPreconditionViolated, "bad single-edge list");
    }
    in_p[id] = 1;
  }
  for (EdgeId id = 0; id < m; ++id) {
    const bool covered = in_vc[g.edge(id).u] || in_vc[g.edge(id).v];
    if (in_p[id] == covered) {
      throw Error(ErrorCode::kPreconditionViolated,
                  in_p[id] ? "single edge already covered by VC'"
                           : "edge outside G_P not covered by VC'");
    }
  }

  SingleEdgeResult out;
  const double dk = delta * k;
  std::vector<EdgeId> p_ids(singles.begin(), singles.end());
  std::sort(p_ids.begin(), p_ids.end());
  out.t1_prime = p_ids.size();
  const Matching mp = Lift(MaximalMatchingGreedy(g.Subgraph(p_ids)), p_ids);
  out.mp_size = mp.size();
  out.mp_threshold = out.t1_prime / 3.0 + 4 * dk;

  if (static_cast<double>(mp.size()) <= out.mp_threshold) {
    out.which = SingleEdgeCase::kCaseI;
    std::vector<Vertex> cover;
    for (EdgeId id : mp.edge_ids) {
      cover.push_back(g.edge(id).u);
      cover.push_back(g.edge(id).v);
    }
    const Graph gp = g.Subgraph(p_ids);
    out.cover = PruneRedundant(gp, Normalize(std::move(cover)));
    out.bound = 2.0 * out.t1_prime / 3.0 + 8 * dk;
    out.valid = IsVertexCover(gp, out.cover);
    return out;
  }

  out.which = SingleEdgeCase::kCaseII;
  out.full_graph = true;
  std::vector<char> in_mp(m, 0);
  std::vector<char> on_mp(g.num_vertices(), 0);
  for (EdgeId id : mp.edge_ids) {
    in_mp[id] = 1;
    on_mp[g.edge(id).u] = on_mp[g.edge(id).v] = 1;
  }
  std::vector<char> alive(m, 0);  // edges of G_R still uncovered
  std::vector<EdgeId> rest;       // E' = edges of G outside G_R
  for (EdgeId id = 0; id < m; ++id) {
    const Edge& e = g.edge(id);
    if (in_p[id] || on_mp[e.u] || on_mp[e.v]) {
      alive[id] = 1;
    } else {
      rest.push_back(id);
    }
  }
  std::vector<char> in_cover(g.num_vertices(), 0);
  std::vector<char> on_mg(g.num_vertices(), 0);
  std::vector<EdgeId> mg;
  auto take = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    mg.push_back(id);
    on_mg[e.u] = on_mg[e.v] = 1;
  };
  auto cover_vertex = [&](Vertex v) {
    in_cover[v] = 1;
    for (EdgeId id = 0; id < m; ++id) {
      if (alive[id] && g.edge(id).Touches(v)) alive[id] = 0;
    }
  };
  auto take_and_cover = [&](EdgeId id) {
    take(id);
    cover_vertex(g.edge(id).u);
    cover_vertex(g.edge(id).v);
  };
  auto alive_mp = [&](EdgeId id) { return alive[id] && in_mp[id]; };
  auto alive_up = [&](EdgeId id) { return alive[id] && in_p[id] && !in_mp[id]; };

  // Procedure 1.
  for (EdgeId id : MaximalMatchingGreedy(g, rest).edge_ids) take_and_cover(id);

  // Procedure 2.
  for (bool again = true; again;) {
    again = false;
    for (EdgeId id = 0; id < m && !again; ++id) {
      if (!alive_mp(id)) continue;
      int hits = 0;
      for (EdgeId o = 0; o < m; ++o) {
        if (alive_up(o) && g.edge(o).SharesVertex(g.edge(id))) ++hits;
      }
      if (hits >= 2) {
        take_and_cover(id);
        again = true;
      }
    }
  }

  // Procedure 3.
  for (bool again = true; again;) {
    again = false;
    for (EdgeId id = 0; id < m && !again; ++id) {
      if (!alive_up(id)) continue;
      std::vector<EdgeId> touching;
      for (EdgeId o = 0; o < m; ++o) {
        if (alive_mp(o) && g.edge(o).SharesVertex(g.edge(id))) {
          touching.push_back(o);
        }
      }
      if (touching.size() >= 2) {
        take_and_cover(touching.front());
        again = true;
      }
    }
  }

  // Procedure 4.
  auto is_blue = [&](EdgeId id) { return alive[id] && !in_mp[id]; };
  auto free_blue_at = [&](Vertex x) -> std::optional<EdgeId> {
    for (EdgeId id = 0; id < m; ++id) {
      const Edge& e = g.edge(id);
      if (is_blue(id) && e.Touches(x) && !on_mg[e.u] && !on_mg[e.v]) return id;
    }
    return std::nullopt;
  };
  std::vector<EdgeId> mn, my, t;
  for (EdgeId id = 0; id < m; ++id) {
    if (alive_mp(id)) mn.push_back(id);
  }
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < mn.size() && !again; ++i) {
      const Edge& e = g.edge(mn[i]);
      const auto eu = free_blue_at(e.u);
      const auto ev = free_blue_at(e.v);
      if (!eu || !ev || g.edge(*eu).SharesVertex(g.edge(*ev))) continue;
      my.push_back(mn[i]);
      mn.erase(mn.begin() + static_cast<std::ptrdiff_t>(i));
      t.push_back(*eu);
      t.push_back(*ev);
      take(*eu);
      take(*ev);
      again = true;
    }
  }
  for (EdgeId id : mn) take(id);

  if (static_cast<double>(my.size()) >= dk) {
    for (EdgeId id : Union(my, mn)) {
      cover_vertex(g.edge(id).u);
      cover_vertex(g.edge(id).v);
    }
  } else {
    for (EdgeId id : t) {
      cover_vertex(g.edge(id).u);
      cover_vertex(g.edge(id).v);
    }
    for (EdgeId id : mn) {
      const Edge& e = g.edge(id);
      bool at_u = false, at_v = false;
      for (EdgeId o = 0; o < m; ++o) {
        if (!is_blue(o)) continue;
        if (g.edge(o).Touches(e.u)) at_u = true;
        if (g.edge(o).Touches(e.v)) at_v = true;
      }
      if (at_u || !at_v) cover_vertex(e.u);
      if (at_v) cover_vertex(e.v);
    }
  }

  std::vector<Vertex> cover;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_cover[v]) cover.push_back(v);
  }
  out.cover = PruneRedundant(g, Normalize(std::move(cover)));
  out.mg_size = mg.size();
  out.my_size = my.size();
  out.mn_size = mn.size();
  out.bound = 2.0 * static_cast<double>(mg.size()) - 2 * dk;
  out.hard_regime = static_cast<int>(mg.size()) <= k;
  out.valid = IsVertexCover(g, out.cover);
  return out;
}

std::string_view ClusterCategoryName(ClusterCategory c) {
  switch (c) {
    case ClusterCategory::kSingleEdge: return "P";
    case ClusterCategory::kStar: return "S";
    case ClusterCategory::kMatchingTwo: return "W";
    case ClusterCategory::kMatchingThree: return "Y";
    case ClusterCategory::kNonStar: return "F";
  }
  return "?";
}

double MedianEpsilon(double beta, double delta) {
  return 2.0 - 1.95 * beta - kDeltaSlope * (beta - 1) / 2 -
         (std::sqrt(2.0) + 9) * delta;
}

double MeansEpsilon(double beta, double delta, double lambda) {
  return lambda - beta - 2.5 * (beta - 1) - 2.5 * delta;
}

SoundnessReport SoundnessAssemble(
    const Graph& g, const std::vector<std::vector<EdgeId>>& clustering,
    const SoundnessConfig& config) {
  if (config.k < 1 || config.beta < 1 || config.delta < 0) {
    throw Error(ErrorCode::kConfigError, "need k >= 1, beta >= 1, delta >= 0");
  }
  const std::size_t m = g.num_edges();
  std::vector<int> owner(m, -1);
  std::size_t blocks = 0;
  for (std::size_t b = 0; b < clustering.size(); ++b) {
    if (!clustering[b].empty()) ++blocks;
    for (EdgeId id : clustering[b]) {
      if (id >= m) {
        throw Error(ErrorCode::kInvalidPartition,
                    "edge id " + std::to_string(id) + " out of range");
      }
      if (owner[id] != -1) {
        throw Error(ErrorCode::kInvalidPartition,
                    "edge " + std::to_string(id) + " in two blocks");
      }
      owner[id] = static_cast<int>(b);
    }
  }
  for (EdgeId id = 0; id < m; ++id) {
    if (owner[id] == -1) {
      throw Error(ErrorCode::kInvalidPartition,
                  "edge " + std::to_string(id) + " not clustered");
    }
  }
  SoundnessReport rep;
  rep.objective = config.objective;
  rep.k = config.k;
  rep.beta = config.beta;
  rep.delta = config.delta;
  rep.blocks = blocks;
  rep.allowed_blocks =
      static_cast<std::size_t>(std::ceil(config.beta * config.k - 1e-9));
  if (blocks > rep.allowed_blocks) {
    throw Error(ErrorCode::kInvalidPartition,
                std::to_string(blocks) + " clusters exceed ceil(beta k) = " +
                    std::to_string(rep.allowed_blocks));
  }

  const bool median = config.objective == Objective::kMedian;
  const double dk = config.delta * config.k;
  double delta_sum = 0;
  std::vector<Vertex> vc_prime;
  std::vector<EdgeId> single_edges;
  for (std::size_t b = 0; b < clustering.size(); ++b) {
    if (clustering[b].empty()) continue;
    ClusterLedger led;
    led.block = b;
    led.edges = clustering[b];
    std::sort(led.edges.begin(), led.edges.end());
    const Graph block = g.Subgraph(led.edges);
    const double r = static_cast<double>(block.num_edges());
    const auto center = StarCenter(block);
    if (median) {
      if (block.num_edges() == 1) {
        led.category = ClusterCategory::kSingleEdge;
        ++rep.t1;
        single_edges.push_back(led.edges.front());
      } else if (center) {
        led.category = ClusterCategory::kStar;
        ++rep.t2;
        led.cost = StarMedianCost(static_cast<int>(r));
        led.cover = Finish(block, {*center}, "star", 1.0, 0);
      } else {
        const std::size_t mm = MaximumMatching(block, block.num_edges()).size();
        if (mm == 2) {
          led.category = ClusterCategory::kMatchingTwo;
          ++rep.t3;
          led.cover = CoverMatchingTwo(block, config.weiszfeld);
        } else {
          led.category = ClusterCategory::kMatchingThree;
          ++rep.t4;
          led.cover = CoverCaseDispatch(block, config.weiszfeld);
        }
        led.delta = led.cover.delta_used;
        led.cost = std::sqrt(r * (r - 1)) + led.delta;
        delta_sum += led.delta;
      }
    } else {
      led.cost = boost::rational_cast<double>(OneMeansCost(block));
      if (center) {
        led.category = ClusterCategory::kStar;
        ++rep.t1;
        led.cover = Finish(block, {*center}, "star", 1.0, 0);
      } else {
        led.category = ClusterCategory::kNonStar;
        ++rep.t2;
        led.cover = CoverNonstarMeans(block);
        led.delta = led.cover.delta_used;
        delta_sum += led.delta;
      }
    }
    for (Vertex v : led.cover.cover) vc_prime.push_back(v);
    rep.clustering_cost += led.cost;
    rep.per_cluster.push_back(std::move(led));
  }
  vc_prime = Normalize(std::move(vc_prime));

  const double mk = static_cast<double>(m);
  const double k = config.k;
  if (median) {
    std::vector<EdgeId> uncovered;
    for (EdgeId id : single_edges) {
      const Edge& e = g.edge(id);
      if (!Contains(vc_prime, e.u) && !Contains(vc_prime, e.v)) {
        uncovered.push_back(id);
      }
    }
    rep.single_edge =
        CoverSingleEdgeClusters(g, uncovered, vc_prime, config.k, config.delta);
    if (rep.single_edge.full_graph) {
      rep.procedures_path = "procedures_fallback";
      rep.cover = rep.single_edge.cover;
    } else {
      rep.procedures_path = "direct";
      std::vector<Vertex> all = vc_prime;
      all.insert(all.end(), rep.single_edge.cover.begin(),
                 rep.single_edge.cover.end());
      rep.cover = Normalize(std::move(all));
    }
    rep.cost_threshold = mk - k / 2 + dk;
    rep.ledger_bound = 2.0 * rep.t1 / 3.0 + 8 * dk + rep.t2 + 1.62 * rep.t3 +
                       1.8 * rep.t4 + kDeltaSlope * delta_sum;
    rep.epsilon = MedianEpsilon(config.beta, config.delta);
    rep.predicted_ceiling = (2.0 - rep.epsilon) * k;
  } else {
    rep.procedures_path = "direct";
    rep.cover = vc_prime;
    rep.cost_threshold = mk - k + dk;
    rep.ledger_bound = rep.t1 + rep.t2 + 2.5 * delta_sum;
    rep.epsilon = MeansEpsilon(config.beta, config.delta, config.lambda);
    rep.predicted_ceiling = (config.lambda - rep.epsilon) * k;
  }
  rep.total_cover_size = rep.cover.size();
  rep.cover_valid = IsVertexCover(g, rep.cover);
  rep.cost_qualifies = rep.clustering_cost <= rep.cost_threshold + 1e-9;
  rep.epsilon_positive = rep.epsilon > 0;
  return rep;
}

}  // namespace kmh
