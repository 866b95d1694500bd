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

// Prints one pass/fail line per acceptance criterion; exits nonzero when any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "kmh/decomposition.h"
#include "kmh/error.h"
#include "kmh/fermat_weber.h"
#include "kmh/oracle.h"
#include "kmh/reduction.h"
#include "kmh/vc_extraction.h"
#include "test_util.h"

#ifndef KMH_CLI_PATH
#error "KMH_CLI_PATH must name the kmh executable"
#endif

namespace kmh {
namespace {

struct Outcome {
  bool ok = true;
  int checks = 0;
  std::string detail;

  void Expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double MedianOf(const Graph& g) { return Weiszfeld(EdgePoints(g)).cost; }

// Closed form for A_n with r = n + 1 star edges.
double AnClosedForm(int n) {
  const double r = n + 1;
  return std::sqrt(r * (r - 1)) +
         2 / (std::sqrt(3 + 1 / (r - 1)) + std::sqrt(r / (r - 1)));
}

Outcome ClosedForms() {
  Outcome o;
  constexpr double kTol = 1e-6;
  for (int r = 2; r <= 8; ++r) {
    const double star = MedianOf(testing::Star(r));
    o.Expect(std::abs(star - std::sqrt(r * (r - 1.0))) <= kTol,
             "star r=" + std::to_string(r) + " cost " + Num(star));
    // r pairwise disjoint edges: regular simplex of side 2.
    const double simplex = MedianOf(testing::Disjoint(r));
    o.Expect(std::abs(simplex - std::sqrt(2.0 * r * (r - 1))) <= kTol,
             "simplex r=" + std::to_string(r) + " cost " + Num(simplex));
  }
  o.Expect(std::abs(MedianOf(testing::Disjoint(3)) - 2 * std::sqrt(3.0)) <= kTol,
           "3-P2");
  for (int n = 1; n <= 6; ++n) {
    const double an = MedianOf(testing::An(n));
    o.Expect(std::abs(an - AnClosedForm(n)) <= kTol,
             "A_" + std::to_string(n) + " cost " + Num(an) + " vs " + Num(AnClosedForm(n)));
  }
  o.Expect(MedianOf(testing::An(2)) >= 3.095 - kTol, "A_2 floor");
  o.Expect(std::abs(MedianOf(testing::Bridge(1, 1)) - (1 + std::sqrt(3.0))) <= kTol,
           "L_1 cost " + Num(MedianOf(testing::Bridge(1, 1))));
  const double c5 = MedianOf(testing::Cycle(5));
  o.Expect(c5 >= std::sqrt(20.0) + 0.622 - kTol, "C5 cost " + Num(c5));
  return o;
}

bool IsConnectedNonStar(const Graph& g) { return IsConnected(g) && IsNonStar(g); }

Outcome DecompositionSoundness() {
  Outcome o;
  for (const Graph& g : EnumerateTriangleFree(7)) {
    if (!IsConnectedNonStar(g)) continue;
    const double m = static_cast<double>(g.num_edges());
    const double cost = MedianOf(g);
    const LowerBoundCertificate safe = CertifyLowerBound(g, DecomposeMode::kSafe);
    const std::string name = CanonicalForm(g);
    o.Expect(safe.bound <= cost + 1e-6, name + " bound above cost");
    o.Expect(safe.bound >= m - 0.342 - 1e-12, name + " safe bound " + Num(safe.bound));
    if (!IsBridgeGraph(g)) {
      const LowerBoundCertificate ultra = CertifyLowerBound(g, DecomposeMode::kUltraSafe);
      o.Expect(ultra.bound >= m - 1e-12, name + " ultra bound " + Num(ultra.bound));
    }
  }
  return o;
}

Outcome ExtraCostFloors() {
  Outcome o;
  for (const Graph& g : EnumerateTriangleFree(7, true)) {
    if (!IsNonStar(g)) continue;
    const double m = static_cast<double>(g.num_edges());
    const double median_extra = MedianOf(g) - std::sqrt(m * (m - 1));
    o.Expect(median_extra >= 0.158 - 1e-6,
             CanonicalForm(g) + " median extra " + Num(median_extra));
    const Rational means_extra = MeansExtraCost(g);
    o.Expect(means_extra >= Rational(2, 3), CanonicalForm(g) + " means extra");
  }
  return o;
}

Outcome Completeness() {
  Outcome o;
  int trial = 0;
  for (std::uint64_t seed = 1; trial < 50; ++seed) {
    const Graph g = CompactVertices(RandomTriangleFree(10, 4, seed, 12));
    if (g.empty()) continue;
    ++trial;
    const int k = static_cast<int>(testing::BruteMinVc(g));
    const double m = static_cast<double>(g.num_edges());
    const auto median = OptContinuous(ReduceGraph(g, k, Objective::kMedian));
    const auto means = OptContinuous(ReduceGraph(g, k, Objective::kMeans));
    const std::string tag = "seed " + std::to_string(seed);
    o.Expect(median.optimal_cost <= m - k / 2.0 + 1e-6,
             tag + " median " + Num(median.optimal_cost));
    o.Expect(means.optimal_cost <= m - k + 1e-9, tag + " means " + Num(means.optimal_cost));
  }
  return o;
}

Outcome CoverExtraction() {
  Outcome o;
  const double slope = std::sqrt(2.0) + 1;
  for (const Graph& g : EnumerateTriangleFree(7, true)) {
    if (!IsNonStar(g)) continue;
    const std::string name = CanonicalForm(g);
    const Matching m = MaximumMatching(g);
    const std::size_t min_vc = testing::BruteMinVc(g);
    try {
      const CoverResult means = CoverNonstarMeans(g);
      o.Expect(IsVertexCover(g, means.cover), name + " means cover invalid");
      const Rational bound = Rational(1) + Rational(5, 2) * MeansExtraCost(g);
      o.Expect(Rational(static_cast<std::int64_t>(means.size())) <= bound,
               name + " means cover size");
      if (m.size() == 2) {
        const CoverResult c = CoverMatchingTwo(g);
        o.Expect(IsVertexCover(g, c.cover), name + " matching-2 cover invalid");
        const std::size_t want = Classify(g).tag == ClassTag::kC5 ? 3u : 2u;
        o.Expect(c.size() == want && c.size() == min_vc, name + " matching-2 size");
        continue;
      }
      const Matching l = SecondMaximumMatching(g, m);
      if (!l.empty()) {
        const CoverResult c = CoverGeneral(g, m, l);
        o.Expect(IsVertexCover(g, c.cover), name + " general cover invalid");
        o.Expect(c.size() <= m.size() + l.size() - 1, name + " general size");
      }
      const CoverResult d = CoverCaseDispatch(g);
      const double delta = MedianOf(g) - std::sqrt(double(g.num_edges()) * (g.num_edges() - 1));
      o.Expect(IsVertexCover(g, d.cover), name + " dispatch cover invalid");
      o.Expect(static_cast<double>(d.size()) <= 1.8 + slope * delta + 1e-6,
               name + " dispatch size " + std::to_string(d.size()) + " delta " + Num(delta));
    } catch (const Error& e) {
      o.Expect(false, name + " threw " + e.what());
    }
  }
  return o;
}

int FewestUncovered(const HypergraphInstance& h) {
  int best = static_cast<int>(h.hyperedges.size());
  for (std::uint32_t mask = 0; mask < (1u << h.num_vertices); ++mask) {
    if (std::popcount(mask) > h.k) continue;
    int miss = 0;
    for (const auto& f : h.hyperedges) {
      bool hit = false;
      for (Vertex v : f) hit = hit || (mask >> v & 1u);
      miss += !hit;
    }
    best = std::min(best, miss);
  }
  return best;
}

Outcome HypergraphReduction() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 12; ++trial) {
      HypergraphInstance h;
      h.d = d;
      h.num_vertices = d + 1 + static_cast<int>(UniformIndex(rng, 8 - d));
      const int n = 1 + static_cast<int>(UniformIndex(rng, 12));
      std::vector<Vertex> ids(h.num_vertices);
      std::iota(ids.begin(), ids.end(), 0);
      for (int e = 0; e < n; ++e) {
        for (int i = 0; i < d; ++i) {
          std::swap(ids[i], ids[i + UniformIndex(rng, ids.size() - i)]);
        }
        std::vector<Vertex> f(ids.begin(), ids.begin() + d);
        std::sort(f.begin(), f.end());
        h.hyperedges.push_back(f);
      }
      h.k = 1 + static_cast<int>(UniformIndex(rng, 3));
      const ClusteringInstance inst = ReduceHypergraph(h);
      const std::string tag = "d=" + std::to_string(d) + " trial " + std::to_string(trial);
      for (int e = 0; e < n; ++e) {
        for (Vertex v = 0; v < h.num_vertices; ++v) {
          const double dist = SquaredDistance(inst.points[e], (*inst.candidate_centers)[v]);
          const bool member = std::find(h.hyperedges[e].begin(), h.hyperedges[e].end(), v) !=
                              h.hyperedges[e].end();
          o.Expect(dist == (member ? d - 1 : d + 1), tag + " distance " + Num(dist));
        }
      }
      const int q = FewestUncovered(h);
      const double want = (d - 1.0) * (n - q) + (d + 1.0) * q;
      const double got = OptDiscrete(inst).optimal_cost;
      o.Expect(got == want, tag + " opt " + Num(got) + " want " + Num(want));
    }
  }
  return o;
}

Outcome MonotoneAndGap() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = CompactVertices(RandomTriangleFree(10, 4, seed, 12));
    if (g.empty()) continue;
    const int k = static_cast<int>(testing::BruteMinVc(g));
    for (Objective obj : {Objective::kMedian, Objective::kMeans}) {
      const SubsetCostTable table(EdgePoints(g), obj);
      double prev = 1e300;
      for (double beta : {1.0, 1.2, 1.5, 2.0}) {
        const int blocks = std::min(static_cast<int>(std::ceil(beta * k)),
                                    static_cast<int>(g.num_edges()));
        const double cost = OptContinuous(table, blocks).optimal_cost;
        o.Expect(cost <= prev + 1e-12, "seed " + std::to_string(seed) + " beta " + Num(beta));
        prev = cost;
      }
    }
  }
  struct GraphCase {
    int m, k;
    Objective obj;
    double delta, yes, no;
  };
  const std::array<GraphCase, 6> graph_cases = {{
      {2, 1, Objective::kMedian, 0.0, 1.5, 1.5},
      {10, 4, Objective::kMedian, 0.01, 8.0, 8.04},
      {7, 3, Objective::kMedian, 0.5, 5.5, 7.0},
      {10, 4, Objective::kMeans, 0.01, 6.0, 6.04},
      {12, 5, Objective::kMeans, 0.2, 7.0, 8.0},
      {9, 9, Objective::kMeans, 1.0, 0.0, 9.0},
  }};
  for (const GraphCase& c : graph_cases) {
    const GapPrediction p = PredictGapGraph(c.m, c.k, c.obj, c.delta);
    o.Expect(std::abs(p.yes_cost - c.yes) <= 1e-12 && std::abs(p.no_cost_lower - c.no) <= 1e-12,
             "graph gap m=" + std::to_string(c.m));
  }
  struct HyperCase {
    int d, n;
    double p, yes, no;
  };
  const std::array<HyperCase, 4> hyper_cases = {{
      {2, 10, 0.0, 10.0, 10.0},
      {3, 12, 0.25, 24.0, 30.0},
      {4, 8, 0.5, 24.0, 32.0},
      {2, 5, 1.0, 5.0, 15.0},
  }};
  for (const HyperCase& c : hyper_cases) {
    const GapPrediction p = PredictGapHypergraph(c.d, c.n, c.p);
    o.Expect(std::abs(p.yes_cost - c.yes) <= 1e-12 && std::abs(p.no_cost_lower - c.no) <= 1e-12,
             "hypergraph gap d=" + std::to_string(c.d));
  }
  return o;
}

std::string RunCli(const std::string& args, int* status) {
  const std::string cmd = std::string(KMH_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  *status = pclose(pipe);
  return out;
}

Outcome Determinism() {
  Outcome o;
  const std::array<std::string, 3> commands = {
      "verify-lemmas --max-edges 7",
      "sweep --n 8 --max-degree 3 --trials 10 --seed 5",
      "sweep --n 9 --trials 8 --seed 11 --objective means --beta 1.5",
  };
  for (const std::string& args : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = RunCli(args, &s1);
    const std::string b = RunCli(args, &s2);
    o.Expect(s1 == 0 && s2 == 0, "'" + args + "' exited nonzero");
    o.Expect(!a.empty(), "'" + args + "' produced no output");
    o.Expect(a == b, "'" + args + "' outputs differ");
  }
  return o;
}

}  // namespace
}  // namespace kmh

int main() {
  using Check = std::pair<const char*, std::function<kmh::Outcome()>>;
  const std::array<Check, 8> criteria = {{
      {"closed-form 1-median costs", kmh::ClosedForms},
      {"decomposition lower bounds", kmh::DecompositionSoundness},
      {"extra-cost floors", kmh::ExtraCostFloors},
      {"completeness on random graphs", kmh::Completeness},
      {"vertex cover extraction", kmh::CoverExtraction},
      {"hypergraph reduction", kmh::HypergraphReduction},
      {"bi-criteria monotonicity and gap arithmetic", kmh::MonotoneAndGap},
      {"deterministic CLI reports", kmh::Determinism},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    kmh::Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %zu: %s (%d checks, %.2fs)%s%s\n", out.ok ? "PASS" : "FAIL",
                i + 1, criteria[i].first, out.checks, secs, out.ok ? "" : " first failure: ",
                out.detail.c_str());
    failed += !out.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
