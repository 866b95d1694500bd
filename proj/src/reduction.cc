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

#include "kmh/reduction.h"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "kmh/error.h"

namespace kmh {

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kMedian ? "median" : "means";
}

Objective ParseObjective(std::string_view name) {
  if (name == "median") return Objective::kMedian;
  if (name == "means") return Objective::kMeans;
  throw Error(ErrorCode::kConfigError,
              "unknown objective '" + std::string(name) + "'");
}

void ValidateHypergraph(const HypergraphInstance& h) {
  if (h.d < 1) throw Error(ErrorCode::kInvalidGraph, "uniformity d < 1");
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    const auto& f = h.hyperedges[i];
    const std::set<Vertex> distinct(f.begin(), f.end());
    if (static_cast<int>(f.size()) != h.d ||
        distinct.size() != f.size()) {
      throw Error(ErrorCode::kInvalidGraph,
                  "hyperedge " + std::to_string(i) + " is not a " +
                      std::to_string(h.d) + "-set");
    }
    if (*distinct.begin() < 0 || *distinct.rbegin() >= h.num_vertices) {
      throw Error(ErrorCode::kInvalidGraph,
                  "hyperedge " + std::to_string(i) + " vertex out of range");
    }
  }
}

std::vector<Point> EdgePoints(const Graph& g) {
  std::vector<Point> points;
  points.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    Point x(g.num_vertices(), 0.0);
    x[e.u] = 1.0;
    x[e.v] = 1.0;
    points.push_back(std::move(x));
  }
  return points;
}

ClusteringInstance ReduceGraph(const Graph& g, int k, Objective objective) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  if (k < 1) throw Error(ErrorCode::kConfigError, "k must be at least 1");
  ClusteringInstance inst;
  inst.dimension = g.num_vertices();
  inst.points = EdgePoints(g);
  inst.k = k;
  inst.objective = objective;
  return inst;
}

bool PairwiseSquaredDistanceCheck(const ClusteringInstance& inst,
                                  const Graph& g) {
  if (inst.points.size() != g.num_edges()) return false;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    for (std::size_t j = i + 1; j < g.num_edges(); ++j) {
      const double want = g.edge(i).SharesVertex(g.edge(j)) ? 2.0 : 4.0;
      if (SquaredDistance(inst.points[i], inst.points[j]) != want) return false;
    }
  }
  return true;
}

ClusteringInstance ReduceHypergraph(const HypergraphInstance& h) {
  ValidateHypergraph(h);
  ClusteringInstance inst;
  inst.dimension = h.num_vertices;
  inst.k = h.k;
  inst.objective = Objective::kMeans;
  for (const auto& f : h.hyperedges) {
    Point x(h.num_vertices, 0.0);
    for (Vertex v : f) x[v] = 1.0;
    inst.points.push_back(std::move(x));
  }
  std::vector<Point> centers;
  for (int v = 0; v < h.num_vertices; ++v) {
    Point c(h.num_vertices, 0.0);
    c[v] = 1.0;
    centers.push_back(std::move(c));
  }
  inst.candidate_centers = std::move(centers);
  return inst;
}

GapPrediction PredictGapGraph(int m, int k, Objective objective,
                              double delta) {
  if (m < 1 || k < 1 || delta < 0) {
    throw Error(ErrorCode::kDomainError, "need m, k >= 1 and delta >= 0");
  }
  GapPrediction out;
  out.parameters.m = m;
  out.parameters.k = k;
  out.parameters.delta = delta;
  const double base = objective == Objective::kMedian ? m - k / 2.0
                                                      : static_cast<double>(m - k);
  out.yes_cost = base;
  out.no_cost_lower = base + delta * k;
  return out;
}

GapPrediction PredictGapHypergraph(int d, int n_hyperedges,
                                   double uncovered_fraction) {
  if (d < 2 || uncovered_fraction < 0 || uncovered_fraction > 1) {
    throw Error(ErrorCode::kDomainError, "need d >= 2 and 0 <= p <= 1");
  }
  GapPrediction out;
  out.parameters.d = d;
  out.parameters.n_hyperedges = n_hyperedges;
  out.parameters.uncovered_fraction = uncovered_fraction;
  const double n = n_hyperedges;
  const double p = uncovered_fraction;
  out.yes_cost = (d - 1) * n;
  out.no_cost_lower = (d - 1) * (1 - p) * n + (d + 1) * p * n;
  return out;
}

bool InAutoNoRegime(const Graph& g, int k) {
  const int delta = MaxDegree(g);
  if (delta == 0) return false;
  return 2.0 * delta * k < static_cast<double>(g.num_edges());
}

HypergraphInstance ParseHyperedges(std::istream& in, int d, int k) {
  HypergraphInstance h;
  h.d = d;
  h.k = k;
  std::string line;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream row(line);
    std::vector<Vertex> f;
    std::string token;
    while (row >> token) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size() || v < 0) throw std::invalid_argument(token);
        f.push_back(v);
        max_id = std::max(max_id, v);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) +
                                                ": bad vertex id '" + token +
                                                "'");
      }
    }
    if (!f.empty()) h.hyperedges.push_back(std::move(f));
  }
  if (h.hyperedges.empty()) {
    throw Error(ErrorCode::kParseError, "no hyperedges");
  }
  h.num_vertices = max_id + 1;
  try {
    ValidateHypergraph(h);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return h;
}

}  // namespace kmh
