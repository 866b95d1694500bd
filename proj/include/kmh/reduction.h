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

#ifndef KMH_REDUCTION_H_
#define KMH_REDUCTION_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmh/geometry.h"
#include "kmh/graph.h"

namespace kmh {

enum class Objective { kMedian, kMeans };

std::string_view ObjectiveName(Objective objective);
// Accepts "median" or "means"; throws Error(kConfigError).
Objective ParseObjective(std::string_view name);

struct ClusteringInstance {
  int dimension = 0;
  std::vector<Point> points;
  std::optional<std::vector<Point>> candidate_centers;
  int k = 1;
  Objective objective = Objective::kMedian;
};

struct HypergraphInstance {
  int d = 2;
  int num_vertices = 0;
  std::vector<std::vector<Vertex>> hyperedges;
  int k = 1;
};

// Throws Error(kInvalidGraph) unless every hyperedge has d distinct vertices
// below num_vertices.
void ValidateHypergraph(const HypergraphInstance& h);

struct GapParameters {
  double m = 0;
  double k = 0;
  double d = 0;
  double n_hyperedges = 0;
  double uncovered_fraction = 0;
  double delta = 0;
};

struct GapPrediction {
  double yes_cost = 0;
  double no_cost_lower = 0;
  GapParameters parameters;
};

// Point of edge (u, v) is e_u + e_v in R^num_vertices.
std::vector<Point> EdgePoints(const Graph& g);

// Throws Error(kEmptyGraph) on a graph without edges and Error(kConfigError)
// when k < 1.
ClusteringInstance ReduceGraph(const Graph& g, int k, Objective objective);

// Squared distance 2 for edges sharing a vertex, 4 for disjoint edges.
bool PairwiseSquaredDistanceCheck(const ClusteringInstance& inst,
                                  const Graph& g);

ClusteringInstance ReduceHypergraph(const HypergraphInstance& h);

GapPrediction PredictGapGraph(int m, int k, Objective objective, double delta);
GapPrediction PredictGapHypergraph(int d, int n_hyperedges,
                                   double uncovered_fraction);

// k < m / (2 * max degree): such instances have a matching larger than k.
bool InAutoNoRegime(const Graph& g, int k);

// One hyperedge per non-blank line, '#' comments. Throws Error(kParseError).
HypergraphInstance ParseHyperedges(std::istream& in, int d, int k);

}  // namespace kmh

#endif  // KMH_REDUCTION_H_
