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

#ifndef KMH_VC_EXTRACTION_H_
#define KMH_VC_EXTRACTION_H_

#include <span>
#include <string>
#include <vector>

#include "kmh/fermat_weber.h"
#include "kmh/graph.h"
#include "kmh/reduction.h"

namespace kmh {

// sqrt(2) + 1, the slope of every median-side cover bound in delta.
inline constexpr double kDeltaSlope = 2.414213562373095;

struct CoverResult {
  VertexSet cover;
  std::string bound_kind;
  double bound_const = 0;  // additive constant of the bound
  double bound_value = 0;  // const + slope * delta, or a count bound
  double delta_used = 0;
  bool valid = false;  // cover checked against the target graph

  std::size_t size() const { return cover.size(); }
};

// Graphs whose maximum matching has two edges: two vertices, three for C5.
// delta is the median extra cost. Throws Error(kPreconditionViolated).
CoverResult CoverMatchingTwo(const Graph& g,
                             const WeiszfeldOptions& options = {});

// Cover of size at most |M| + |L| - 1 built from a maximum matching m and a
// maximum matching l of g - m, with |l| >= 1. Throws
// Error(kPreconditionViolated) or Error(kCase2Reached).
CoverResult CoverGeneral(const Graph& g, const Matching& m, const Matching& l);

// Maximum matching of size at least three: picks the construction matching
// the size of L and the shape of F' = g - M and F'' = F' - L.
CoverResult CoverCaseDispatch(const Graph& g,
                              const WeiszfeldOptions& options = {});

// Edge with the largest degree sum, then one vertex per edge it misses.
CoverResult CoverNonstarMeans(const Graph& g);

enum class SingleEdgeCase { kCaseI, kCaseII };

struct SingleEdgeResult {
  SingleEdgeCase which = SingleEdgeCase::kCaseI;
  VertexSet cover;     // covers G_P (case I) or all of g (case II)
  bool full_graph = false;
  std::size_t t1_prime = 0;
  std::size_t mp_size = 0;  // maximal matching of G_P
  double mp_threshold = 0;  // t1'/3 + 4 delta k
  double bound = 0;         // 2 t1'/3 + 8 delta k, or 2|M_G| - 2 delta k
  std::size_t mg_size = 0;
  std::size_t my_size = 0;  // plank edges
  std::size_t mn_size = 0;
  bool hard_regime = false;  // |M_G| <= k
  bool valid = false;
};

// singles: edges of single-edge clusters not covered by vc_prime; every other
// edge of g must touch vc_prime. Throws Error(kPreconditionViolated).
SingleEdgeResult CoverSingleEdgeClusters(const Graph& g,
                                         std::span<const EdgeId> singles,
                                         std::span<const Vertex> vc_prime,
                                         int k, double delta);

struct SoundnessConfig {
  int k = 1;
  double beta = 1.0;
  Objective objective = Objective::kMedian;
  double delta = 0.01;
  double lambda = 2.0;  // target factor for the means side
  WeiszfeldOptions weiszfeld;
};

enum class ClusterCategory { kSingleEdge, kStar, kMatchingTwo, kMatchingThree,
                             kNonStar };
std::string_view ClusterCategoryName(ClusterCategory c);

struct ClusterLedger {
  std::size_t block = 0;
  std::vector<EdgeId> edges;
  ClusterCategory category = ClusterCategory::kStar;
  double cost = 0;   // 1-median or 1-means cost of the block
  double delta = 0;  // extra cost, 0 for stars
  CoverResult cover;  // empty for deferred single-edge blocks
};

struct SoundnessReport {
  Objective objective = Objective::kMedian;
  int k = 0;
  double beta = 1;
  double delta = 0;
  std::size_t blocks = 0;
  std::size_t allowed_blocks = 0;  // ceil(beta k)
  std::size_t t1 = 0, t2 = 0, t3 = 0, t4 = 0;
  std::vector<ClusterLedger> per_cluster;
  std::string procedures_path;  // "direct" or "procedures_fallback"
  SingleEdgeResult single_edge;
  VertexSet cover;
  std::size_t total_cover_size = 0;
  bool cover_valid = false;
  double clustering_cost = 0;
  double cost_threshold = 0;  // m - k/2 + delta k, or m - k + delta k
  bool cost_qualifies = false;
  double ledger_bound = 0;    // cluster-wise sum with actual deltas
  double predicted_ceiling = 0;
  double epsilon = 0;         // derived from (beta, delta); may be <= 0
  bool epsilon_positive = false;
};

// clustering: blocks of edge ids partitioning g, at most ceil(beta k) of them
// non-empty. Throws Error(kInvalidPartition).
SoundnessReport SoundnessAssemble(
    const Graph& g, const std::vector<std::vector<EdgeId>>& clustering,
    const SoundnessConfig& config);

// epsilon with 1.95 beta + (sqrt2+1)(beta-1)/2 + (sqrt2+9) delta = 2 - epsilon.
double MedianEpsilon(double beta, double delta);
// epsilon with beta + 5/2 (beta-1) + 5/2 delta = lambda - epsilon.
double MeansEpsilon(double beta, double delta, double lambda);

}  // namespace kmh

#endif  // KMH_VC_EXTRACTION_H_
