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

#ifndef KMH_GEOMETRY_H_
#define KMH_GEOMETRY_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace kmh {

using Point = std::vector<double>;

inline double SquaredDistance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double Distance(const Point& a, const Point& b) {
  return std::sqrt(SquaredDistance(a, b));
}

inline Point Centroid(std::span<const Point> points) {
  Point c(points.empty() ? 0 : points.front().size(), 0.0);
  for (const Point& p : points) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  }
  for (double& x : c) x /= static_cast<double>(points.size());
  return c;
}

}  // namespace kmh

#endif  // KMH_GEOMETRY_H_
