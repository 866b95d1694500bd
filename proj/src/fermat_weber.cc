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

#include "kmh/fermat_weber.h"

#include <algorithm>
#include <cmath>

#include "kmh/error.h"

namespace kmh {

namespace {

constexpr double kCoincident = 1e-12;

double Norm(const Point& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

bool IsCollinear(std::span<const Point> points) {
  if (points.size() <= 2) return true;
  const Point& a = points.front();
  std::size_t far = 0;
  double best = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double d = SquaredDistance(a, points[i]);
    if (d > best) {
      best = d;
      far = i;
    }
  }
  if (best == 0.0) return true;
  Point dir(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) dir[j] = points[far][j] - a[j];
  const double len = Norm(dir);
  for (double& x : dir) x /= len;
  for (const Point& p : points) {
    double along = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) along += (p[j] - a[j]) * dir[j];
    double off = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double r = p[j] - a[j] - along * dir[j];
      off += r * r;
    }
    if (std::sqrt(off) > 1e-9 * std::max(1.0, len)) return false;
  }
  return true;
}

}  // namespace

double MedianCost(std::span<const Point> points, const Point& center) {
  double cost = 0.0;
  for (const Point& p : points) cost += Distance(p, center);
  return cost;
}

MedianSolution Weiszfeld(std::span<const Point> points,
                         const WeiszfeldOptions& options) {
  if (points.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "weiszfeld needs a point");
  }
  if (!(options.tolerance > 0)) {
    throw Error(ErrorCode::kPreconditionViolated, "tolerance must be positive");
  }
  const std::size_t dim = points.front().size();
  MedianSolution sol;
  sol.collinear = IsCollinear(points);
  Point y = Centroid(points);
  double cost = MedianCost(points, y);

  Point weighted(dim), resultant(dim), next(dim);
  while (sol.iterations < options.max_iter) {
    ++sol.iterations;
    std::fill(weighted.begin(), weighted.end(), 0.0);
    std::fill(resultant.begin(), resultant.end(), 0.0);
    double inverse_sum = 0.0;
    int coincident = 0;
    for (const Point& p : points) {
      const double d = Distance(p, y);
      if (d <= kCoincident) {
        ++coincident;
        continue;
      }
      inverse_sum += 1.0 / d;
      for (std::size_t j = 0; j < dim; ++j) {
        weighted[j] += p[j] / d;
        resultant[j] += (p[j] - y[j]) / d;
      }
    }
    if (inverse_sum == 0.0) {
      sol.converged = true;
      break;
    }
    for (std::size_t j = 0; j < dim; ++j) next[j] = weighted[j] / inverse_sum;
    if (coincident > 0) {
      const double r = Norm(resultant);
      if (r <= coincident) {
        sol.converged = true;
        break;
      }
      const double step = coincident / r;
      for (std::size_t j = 0; j < dim; ++j) {
        next[j] = (1.0 - step) * next[j] + step * y[j];
      }
    }
    const double next_cost = MedianCost(points, next);
    double moved = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      moved += (next[j] - y[j]) * (next[j] - y[j]);
    }
    moved = std::sqrt(moved);
    const double change = std::abs(cost - next_cost);
    if (next_cost <= cost) {
      y = next;
      cost = next_cost;
    }
    if (change <= options.tolerance * std::max(cost, kCoincident) ||
        moved <= options.tolerance) {
      sol.converged = true;
      break;
    }
  }
  sol.center = std::move(y);
  sol.cost = MedianCost(points, sol.center);
  return sol;
}

SqrtBound SqrtBoundFor(double m, double t) {
  if (!(t > 1) || m < t) {
    throw Error(ErrorCode::kDomainError, "sqrt bound needs m >= t > 1");
  }
  return {m - (t - std::sqrt(t * (t - 1))), m - 0.5};
}

double SimplexMedianCost(int r, double side) {
  if (r < 1 || !(side > 0)) {
    throw Error(ErrorCode::kDomainError, "simplex needs r >= 1, side > 0");
  }
  return side * std::sqrt(r * (r - 1.0) / 2.0);
}

double StarMedianCost(int r) { return SimplexMedianCost(r, std::sqrt(2.0)); }

double DisjointEdgesMedianCost(int r) { return SimplexMedianCost(r, 2.0); }

double AnMedianCost(int n) {
  if (n < 1) throw Error(ErrorCode::kDomainError, "A_n needs n >= 1");
  const double r = n + 1.0;
  return std::sqrt(r * (r - 1)) +
         2.0 / (std::sqrt(3.0 + 1.0 / (r - 1)) + std::sqrt(r / (r - 1)));
}

double L1MedianCost() { return 1.0 + std::sqrt(3.0); }

Rational OneMeansCost(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "cluster has no edges");
  const std::int64_t r = static_cast<std::int64_t>(g.num_edges());
  std::int64_t squares = 0;
  for (int d : g.Degrees()) squares += static_cast<std::int64_t>(d) * d;
  return Rational(2 * r) - Rational(squares, r);
}

Rational MeansExtraCost(const Graph& g) {
  return OneMeansCost(g) -
         Rational(static_cast<std::int64_t>(g.num_edges()) - 1);
}

std::string_view CostBasisName(CostBasis basis) {
  switch (basis) {
    case CostBasis::kExactClosedForm: return "exact_closed_form";
    case CostBasis::kNumericalUpper: return "numerical_upper";
    case CostBasis::kCertifiedLower: return "certified_lower";
  }
  return "unknown";
}

std::optional<double> ClosedFormMedianCost(const Graph& g) {
  const GraphClass c = Classify(g);
  const int r = static_cast<int>(g.num_edges());
  switch (c.tag) {
    case ClassTag::kEmpty:
    case ClassTag::kSingleEdge:
      return 0.0;
    case ClassTag::kStar:
      return StarMedianCost(r);
    case ClassTag::kThreeP2:
      return DisjointEdgesMedianCost(3);
    case ClassTag::kAn:
      return AnMedianCost(c.n);
    case ClassTag::kLn:
      if (c.n == 1) return L1MedianCost();
      return std::nullopt;
    default:
      break;
  }
  if (MaximumMatching(g, g.num_edges()).size() == g.num_edges()) {
    return DisjointEdgesMedianCost(r);
  }
  return std::nullopt;
}

GraphMedianCost MedianCostOfGraph(const Graph& g,
                                  const WeiszfeldOptions& options) {
  if (auto exact = ClosedFormMedianCost(g)) {
    return {*exact, CostBasis::kExactClosedForm};
  }
  const std::vector<Point> points = EdgePoints(CompactVertices(g));
  return {Weiszfeld(points, options).cost, CostBasis::kNumericalUpper};
}

ExtraCost ComputeExtraCost(const Graph& g, Objective objective,
                           const WeiszfeldOptions& options) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "cluster has no edges");
  if (objective == Objective::kMeans) {
    return {boost::rational_cast<double>(MeansExtraCost(g)),
            CostBasis::kExactClosedForm};
  }
  const double r = static_cast<double>(g.num_edges());
  const GraphMedianCost cost = MedianCostOfGraph(g, options);
  return {cost.cost - std::sqrt(r * (r - 1)), cost.basis};
}

}  // namespace kmh
