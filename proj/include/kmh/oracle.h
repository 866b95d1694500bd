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

// Brute-force ground truth for small instances: optimal clusterings by
// partition or center enumeration, exact minimum vertex cover, and small
// triangle-free graph generators.

#ifndef KMH_ORACLE_H_
#define KMH_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmh/fermat_weber.h"
#include "kmh/geometry.h"
#include "kmh/graph.h"
#include "kmh/reduction.h"

namespace kmh {

inline constexpr std::size_t kMaxContinuousPoints = 12;
inline constexpr std::size_t kMaxCenterSubsets = 1000000;
inline constexpr int kMaxEnumerationEdges = 8;

// Serial kernels are kept as the reference the parallel ones are tested
// against.
enum class Execution { kSerial, kParallel };

enum class OracleMethod {
  kPartitionEnumWeiszfeld,
  kPartitionEnumCentroid,
  kCenterSubsetEnum,
};
std::string_view OracleMethodName(OracleMethod method);

struct OracleReport {
  double optimal_cost = 0;
  std::vector<int> partition;  // block (or center) index per point
  std::vector<Point> centers;
  std::vector<std::size_t> center_indices;  // discrete case only
  OracleMethod method = OracleMethod::kPartitionEnumCentroid;
  int k = 0;
};

// 1-median or 1-means cost of every subset of at most 12 points, indexed by
// bitmask.
class SubsetCostTable {
 public:
  SubsetCostTable(std::span<const Point> points, Objective objective,
                  Execution execution = Execution::kParallel,
                  const WeiszfeldOptions& options = {});

  double operator[](std::uint32_t mask) const { return cost_[mask]; }
  std::size_t num_points() const { return points_.size(); }
  Objective objective() const { return objective_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& costs() const { return cost_; }

 private:
  std::vector<Point> points_;
  Objective objective_;
  std::vector<double> cost_;
};

// Best restricted-growth string with at most k blocks. The parallel kernel
// prunes with the monotonicity of block costs; the serial one does not.
std::vector<int> BestPartition(const SubsetCostTable& table, int k,
                               Execution execution = Execution::kParallel);

OracleReport OptContinuous(const SubsetCostTable& table, int k,
                           Execution execution = Execution::kParallel,
                           const WeiszfeldOptions& options = {});
OracleReport OptContinuous(const ClusteringInstance& inst,
                           Execution execution = Execution::kParallel,
                           const WeiszfeldOptions& options = {});

OracleReport OptDiscrete(const ClusteringInstance& inst,
                         Execution execution = Execution::kParallel);

// Recomputes the cost of a report from its partition and centers.
double ReportCost(std::span<const Point> points, const OracleReport& report,
                  Objective objective);

VertexSet MinVertexCover(const Graph& g,
                         std::size_t ceiling = kDefaultBruteForceCeiling);

// Isomorphism-invariant string; isolated vertices are ignored.
std::string CanonicalForm(const Graph& g);

// Connected triangle-free graphs with 1..max_edges edges up to isomorphism,
// plus edge-disjoint unions of them when include_disconnected is set.
// Ordered by edge count, then canonical form.
std::vector<Graph> EnumerateTriangleFree(int max_edges,
                                         bool include_disconnected = false);

// Uniform draw in [0, range) by rejection; portable across standard
// libraries, unlike std::uniform_int_distribution.
std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t range);

Graph RandomTriangleFree(int n, int max_degree, std::uint64_t seed,
                         std::size_t max_edges =
                             std::numeric_limits<std::size_t>::max());

}  // namespace kmh

#endif  // KMH_ORACLE_H_
