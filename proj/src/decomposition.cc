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

#include "kmh/decomposition.h"

#include <cmath>

#include "kmh/error.h"
#include "kmh/fermat_weber.h"

namespace kmh {

std::string_view DecomposeModeName(DecomposeMode mode) {
  return mode == DecomposeMode::kSafe ? "safe" : "ultra_safe";
}

DecomposeMode ParseDecomposeMode(std::string_view name) {
  if (name == "safe") return DecomposeMode::kSafe;
  if (name == "ultra_safe" || name == "ultra") return DecomposeMode::kUltraSafe;
  throw Error(ErrorCode::kConfigError,
              "unknown decompose mode '" + std::string(name) + "'");
}

namespace {

bool Qualifies(const Graph& rest, DecomposeMode mode) {
  if (!IsNonStar(rest)) return false;
  return mode == DecomposeMode::kSafe || !IsBridgeGraph(rest);
}

bool IsTerminal(const GraphClass& c, DecomposeMode mode) {
  if (mode == DecomposeMode::kSafe) return c.IsFundamental();
  return c.tag == ClassTag::kThreeP2 || c.tag == ClassTag::kAn;
}

void CheckPreconditions(const Graph& g, DecomposeMode mode) {
  if (!IsNonStar(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph is a star or empty");
  }
  if (mode == DecomposeMode::kUltraSafe && IsBridgeGraph(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph is a bridge graph");
  }
}

}  // namespace

std::optional<EdgePair> FindSafePair(const Graph& g, DecomposeMode mode) {
  CheckPreconditions(g, mode);
  const std::size_t m = g.num_edges();
  std::vector<int> component(m, 0);
  const auto comps = EdgeComponents(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (EdgeId id : comps[c]) component[id] = static_cast<int>(c);
  }
  for (int pass = 0; pass < 2; ++pass) {
    const bool cross = pass == 0;
    for (EdgeId i = 0; i < m; ++i) {
      for (EdgeId j = i + 1; j < m; ++j) {
        if ((component[i] != component[j]) != cross) continue;
        if (g.edge(i).SharesVertex(g.edge(j))) continue;
        const EdgeId drop[] = {i, j};
        if (Qualifies(g.Subgraph(g.ComplementIds(drop)), mode)) {
          return EdgePair{i, j};
        }
      }
    }
  }
  return std::nullopt;
}

DecompositionTrace Decompose(const Graph& g, DecomposeMode mode) {
  CheckPreconditions(g, mode);
  if (!IsTriangleFree(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph has a triangle");
  }
  DecompositionTrace trace;
  trace.mode = mode;
  std::vector<EdgeId> alive(g.num_edges());
  for (EdgeId i = 0; i < alive.size(); ++i) alive[i] = i;
  while (true) {
    const Graph d = g.Subgraph(alive);
    const GraphClass c = Classify(d);
    if (IsTerminal(c, mode)) {
      trace.residual = c;
      break;
    }
    if (c.IsFundamental()) {
      throw Error(ErrorCode::kStuck, "ultra-safe residual " + c.ToString());
    }
    const auto pair = FindSafePair(d, mode);
    if (!pair) {
      throw Error(ErrorCode::kStuck,
                  "no qualifying pair in non-fundamental " + c.ToString());
    }
    trace.removed_pairs.push_back({alive[pair->first], alive[pair->second]});
    const EdgeId drop[] = {pair->first, pair->second};
    std::vector<EdgeId> kept;
    for (EdgeId local : d.ComplementIds(drop)) kept.push_back(alive[local]);
    alive = std::move(kept);
  }
  trace.residual_edges = std::move(alive);
  return trace;
}

Graph ReplayTrace(const Graph& g, const DecompositionTrace& trace) {
  std::vector<EdgeId> removed;
  for (const EdgePair& p : trace.removed_pairs) {
    removed.push_back(p.first);
    removed.push_back(p.second);
  }
  return g.Subgraph(g.ComplementIds(removed));
}

std::vector<BoundTerm> FundamentalBound(const GraphClass& c) {
  const double l1 = L1MedianCost();
  switch (c.tag) {
    case ClassTag::kThreeP2:
      return {{"3-P2", 3, DisjointEdgesMedianCost(3)}};
    case ClassTag::kAn:
      return {{c.ToString(), c.n + 1, AnMedianCost(c.n)}};
    case ClassTag::kLn:
      if (c.n == 1) return {{"L_1", 3, l1}};
      if (c.n == 2) {
        return {{"L_2 >= (A_2 + 2 L_1 + S_3)/3", 4,
                 (AnMedianCost(2) + 2 * l1 + StarMedianCost(3)) / 3}};
      }
      return {{c.ToString() + " >= (A_n + S_n + L_1)/2", c.n + 2,
               (AnMedianCost(c.n) + StarMedianCost(c.n) + l1) / 2}};
    default:
      throw Error(ErrorCode::kPreconditionViolated,
                  c.ToString() + " is not fundamental");
  }
}

LowerBoundCertificate CertifyLowerBound(const Graph& g, DecomposeMode mode) {
  const DecompositionTrace trace = Decompose(g, mode);
  LowerBoundCertificate cert;
  cert.graph_edges = g.num_edges();
  for (std::size_t i = 0; i < trace.removed_pairs.size(); ++i) {
    cert.derivation.push_back({"2-P2", 2, DisjointEdgesMedianCost(2)});
  }
  for (BoundTerm& t : FundamentalBound(trace.residual)) {
    cert.derivation.push_back(std::move(t));
  }
  for (const BoundTerm& t : cert.derivation) cert.bound += t.cost;
  return cert;
}

LowerBoundCertificate CertifyC5() {
  LowerBoundCertificate cert;
  cert.graph_edges = 5;
  cert.derivation = {{"A_1", 2, AnMedianCost(1)}, {"A_2", 3, AnMedianCost(2)}};
  for (const BoundTerm& t : cert.derivation) cert.bound += t.cost;
  return cert;
}

}  // namespace kmh
