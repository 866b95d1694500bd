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

#ifndef KMH_DECOMPOSITION_H_
#define KMH_DECOMPOSITION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmh/graph.h"

namespace kmh {

enum class DecomposeMode { kSafe, kUltraSafe };

std::string_view DecomposeModeName(DecomposeMode mode);
// Accepts "safe" or "ultra_safe"; throws Error(kConfigError).
DecomposeMode ParseDecomposeMode(std::string_view name);

struct EdgePair {
  EdgeId first = 0;
  EdgeId second = 0;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

struct DecompositionTrace {
  DecomposeMode mode = DecomposeMode::kSafe;
  std::vector<EdgePair> removed_pairs;  // ids of the input graph
  std::vector<EdgeId> residual_edges;
  GraphClass residual;
};

struct BoundTerm {
  std::string label;
  int edges = 0;
  double cost = 0;
};

struct LowerBoundCertificate {
  std::size_t graph_edges = 0;
  double bound = 0;
  std::vector<BoundTerm> derivation;
};

// Safe: vertex-disjoint pair leaving a non-star graph. Ultra-safe: the rest is
// also not a bridge graph. Pairs across components are tried first, then
// lexicographic order. Throws Error(kPreconditionViolated) if g is a star, or
// a bridge graph in ultra-safe mode.
std::optional<EdgePair> FindSafePair(const Graph& g, DecomposeMode mode);

// Removes pairs until the rest is 3-P2, A_n or L_n (safe) or 3-P2, A_n
// (ultra-safe). Requires a triangle-free non-star graph; throws
// Error(kPreconditionViolated) or Error(kStuck).
DecompositionTrace Decompose(const Graph& g, DecomposeMode mode);

// Edge set left after removing the traced pairs.
Graph ReplayTrace(const Graph& g, const DecompositionTrace& trace);

// Lower bound on the 1-median cost of a fundamental graph: exact for 3-P2,
// A_n and L_1; L_2 and L_n (n >= 3) through their three- and two-copy
// decompositions.
std::vector<BoundTerm> FundamentalBound(const GraphClass& c);

// 2 per removed pair plus the residual bound.
LowerBoundCertificate CertifyLowerBound(const Graph& g, DecomposeMode mode);

// C5 split into A_1 and A_2.
LowerBoundCertificate CertifyC5();

}  // namespace kmh

#endif  // KMH_DECOMPOSITION_H_
