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

#ifndef KMH_FERMAT_WEBER_H_
#define KMH_FERMAT_WEBER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include <boost/rational.hpp>

#include "kmh/geometry.h"
#include "kmh/graph.h"
#include "kmh/reduction.h"

namespace kmh {

using Rational = boost::rational<std::int64_t>;

struct WeiszfeldOptions {
  double tolerance = 1e-12;
  int max_iter = 100000;
};

struct MedianSolution {
  Point center;
  double cost = 0;  // recomputed from center
  int iterations = 0;
  bool converged = false;
  bool collinear = false;  // optimum may not be unique
};

// Sum of Euclidean distances from `points` to `center`.
double MedianCost(std::span<const Point> points, const Point& center);

// Geometric median by Weiszfeld iteration started at the centroid. Iterates
// that land on a data point use the Vardi-Zhang modified step, which stops
// when the point is optimal. Throws Error(kPreconditionViolated) on empty
// input or non-positive tolerance.
MedianSolution Weiszfeld(std::span<const Point> points,
                         const WeiszfeldOptions& options = {});

struct SqrtBound {
  double lower = 0;
  double upper = 0;
};

// Bracket m - (t - sqrt(t(t-1))) <= sqrt(m(m-1)) <= m - 1/2.
// Throws Error(kDomainError) unless m >= t > 1.
SqrtBound SqrtBoundFor(double m, double t);

double SimplexMedianCost(int r, double side);
double StarMedianCost(int r);
double DisjointEdgesMedianCost(int r);
// Star with n edges plus one detached edge.
double AnMedianCost(int n);
// Path with three edges.
double L1MedianCost();

// Sum over vertices of d(v) (1 - d(v)/r), exact.
Rational OneMeansCost(const Graph& g);
// OneMeansCost(g) - (r - 1).
Rational MeansExtraCost(const Graph& g);

enum class CostBasis { kExactClosedForm, kNumericalUpper, kCertifiedLower };
std::string_view CostBasisName(CostBasis basis);

struct ExtraCost {
  double value = 0;
  CostBasis basis = CostBasis::kExactClosedForm;
};

// 1-median cost of the edge points of g when its class has a closed form:
// stars, 3-P2, pairwise disjoint edges, A_n and L_1.
std::optional<double> ClosedFormMedianCost(const Graph& g);

struct GraphMedianCost {
  double cost = 0;
  CostBasis basis = CostBasis::kExactClosedForm;
};

// Closed form when available, Weiszfeld otherwise.
GraphMedianCost MedianCostOfGraph(const Graph& g,
                                  const WeiszfeldOptions& options = {});

// Median: cost - sqrt(r(r-1)); means: exact 1-means cost - (r-1).
// Throws Error(kEmptyGraph) on a graph without edges.
ExtraCost ComputeExtraCost(const Graph& g, Objective objective,
                           const WeiszfeldOptions& options = {});

}  // namespace kmh

#endif  // KMH_FERMAT_WEBER_H_
