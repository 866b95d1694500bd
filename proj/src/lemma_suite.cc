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

#include "kmh/lemma_suite.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "kmh/decomposition.h"
#include "kmh/error.h"
#include "kmh/oracle.h"
#include "kmh/vc_extraction.h"

namespace kmh {

void RunConfig::Validate() const {
  if (!(tolerance > 0) || !(weiszfeld_tol > 0)) {
    throw Error(ErrorCode::kConfigError, "tolerances must be positive");
  }
  if (max_iter < 1) throw Error(ErrorCode::kConfigError, "max_iter must be >= 1");
  if (!(beta >= 1)) throw Error(ErrorCode::kConfigError, "beta must be >= 1");
  if (!(delta >= 0)) throw Error(ErrorCode::kConfigError, "delta must be >= 0");
  if (brute_force_ceiling < 1) {
    throw Error(ErrorCode::kConfigError, "brute-force ceiling must be >= 1");
  }
}

bool LemmaReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

namespace {

class Suite {
 public:
  explicit Suite(std::string id) { result_.id = std::move(id); }

  void Check(bool ok, const std::function<std::string()>& what) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = what();
  }

  // Runs body, turning a thrown library error into a failed check.
  void Guard(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      Check(false, [&] { return label + ": " + e.what(); });
    }
  }

  SuiteResult Take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Graph StarGraph(int r) {
  std::vector<Edge> edges;
  for (int i = 1; i <= r; ++i) edges.push_back({0, i});
  return Graph(r + 1, std::move(edges));
}

Graph DisjointEdges(int r) {
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Graph(2 * r, std::move(edges));
}

Graph AnGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  edges.push_back({n + 1, n + 2});
  return Graph(n + 3, std::move(edges));
}

Graph PathGraph(int edges_count) {
  std::vector<Edge> edges;
  for (int i = 0; i < edges_count; ++i) edges.push_back({i, i + 1});
  return Graph(edges_count + 1, std::move(edges));
}

Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

// The low-dimensional A_n coordinates: unit vectors for the star and a
// diagonal point at distance 2 from each of them.
std::vector<Point> AnLowDimensional(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    Point p(n, 0.0);
    p[i] = 1.0;
    pts.push_back(p);
  }
  const double inv = 1.0 / n;
  const double u = inv + std::sqrt(3.0 * inv + inv * inv);
  pts.push_back(Point(n, u));
  return pts;
}

std::vector<Point> L1LowDimensional() {
  const double s = std::sqrt(2.0);
  return {{s, 0.0}, {0.0, 0.0}, {0.0, s}};
}

double NumericalCost(const Graph& g, const WeiszfeldOptions& options) {
  return Weiszfeld(EdgePoints(CompactVertices(g)), options).cost;
}

// Sum of squared distances to the centroid of the edge indicator vectors.
Rational CentroidSquaredSum(const Graph& g) {
  const auto r = static_cast<std::int64_t>(g.num_edges());
  const auto deg = g.Degrees();
  Rational total = 0;
  for (const Edge& e : g.edges()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const Rational x = e.Touches(v) ? 1 : 0;
      const Rational d = x - Rational(deg[v], r);
      total += d * d;
    }
  }
  return total;
}

void ClosedFormSuites(const RunConfig& cfg, std::vector<SuiteResult>& out) {
  const WeiszfeldOptions opt = cfg.weiszfeld();
  const double tol = cfg.tolerance;

  Suite closed("fermat.closed_forms");
  for (int r = 2; r <= 8; ++r) {
    const double star = NumericalCost(StarGraph(r), opt);
    closed.Check(std::abs(star - std::sqrt(r * (r - 1.0))) <= tol,
                 [&] { return "star r=" + std::to_string(r) + " " + Num(star); });
    const double disj = NumericalCost(DisjointEdges(r), opt);
    closed.Check(std::abs(disj - SimplexMedianCost(r, 2.0)) <= tol, [&] {
      return "disjoint r=" + std::to_string(r) + " " + Num(disj);
    });
  }
  closed.Check(std::abs(NumericalCost(DisjointEdges(3), opt) - 2 * std::sqrt(3.0)) <= tol,
               [] { return std::string("3-P2"); });
  for (int n = 1; n <= 6; ++n) {
    const double an = NumericalCost(AnGraph(n), opt);
    closed.Check(std::abs(an - AnMedianCost(n)) <= tol,
                 [&] { return "A_" + std::to_string(n) + " " + Num(an); });
  }
  closed.Check(NumericalCost(AnGraph(2), opt) >= 3.095 - tol,
               [] { return std::string("A_2 below 3.095"); });
  const double l1 = NumericalCost(PathGraph(3), opt);
  closed.Check(std::abs(l1 - (1 + std::sqrt(3.0))) <= tol,
               [&] { return "L_1 " + Num(l1); });
  const double c5 = NumericalCost(CycleGraph(5), opt);
  closed.Check(c5 >= std::sqrt(20.0) + 0.622 - tol,
               [&] { return "C5 " + Num(c5); });
  closed.Check(CertifyC5().bound <= c5 + tol,
               [&] { return "C5 certificate above solver " + Num(c5); });
  out.push_back(closed.Take());

  Suite iso("fermat.isometry");
  for (int n = 1; n <= 6; ++n) {
    const double hi = NumericalCost(AnGraph(n), opt);
    const double lo = Weiszfeld(AnLowDimensional(n), opt).cost;
    iso.Check(std::abs(hi - lo) <= tol,
              [&] { return "A_" + std::to_string(n) + " " + Num(hi) + " vs " + Num(lo); });
  }
  const double lo = Weiszfeld(L1LowDimensional(), opt).cost;
  iso.Check(std::abs(l1 - lo) <= tol, [&] { return "L_1 " + Num(lo); });
  out.push_back(iso.Take());

  Suite sb("fermat.sqrt_bound");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double t = 1.0 + 1e-9 + 20.0 * unit(rng);
    const double m = t + 50.0 * unit(rng);
    const SqrtBound b = SqrtBoundFor(m, t);
    const double v = std::sqrt(m * (m - 1));
    sb.Check(b.lower <= v + 1e-12 && v <= b.upper + 1e-12,
             [&] { return "m=" + Num(m) + " t=" + Num(t); });
  }
  out.push_back(sb.Take());
}

std::string Describe(const Graph& g) { return CanonicalForm(g); }

void HypergraphSuite(const RunConfig& cfg, std::vector<SuiteResult>& out) {
  Suite s("reduction.hypergraph");
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  for (int d = 2; d <= 4; ++d) {
    for (int mv = d; mv <= 8; ++mv) {
      HypergraphInstance h;
      h.d = d;
      h.num_vertices = mv;
      const int n_edges = 1 + static_cast<int>(UniformIndex(rng, 12));
      for (int i = 0; i < n_edges; ++i) {
        std::vector<Vertex> all(mv);
        for (int v = 0; v < mv; ++v) all[v] = v;
        for (int j = mv; j > 1; --j) std::swap(all[j - 1], all[UniformIndex(rng, j)]);
        std::vector<Vertex> f(all.begin(), all.begin() + d);
        std::sort(f.begin(), f.end());
        h.hyperedges.push_back(f);
      }
      for (int k = 1; k <= std::min(mv, 3); ++k) {
        h.k = k;
        const std::string label = "d=" + std::to_string(d) + " M=" +
                                  std::to_string(mv) + " k=" + std::to_string(k);
        s.Guard(label, [&] {
          const ClusteringInstance inst = ReduceHypergraph(h);
          for (std::size_t i = 0; i < inst.points.size(); ++i) {
            for (int c = 0; c < mv; ++c) {
              const double d2 = SquaredDistance(inst.points[i], (*inst.candidate_centers)[c]);
              const bool member = std::find(h.hyperedges[i].begin(),
                                            h.hyperedges[i].end(),
                                            c) != h.hyperedges[i].end();
              s.Check(d2 == (member ? d - 1 : d + 1), [&] { return label; });
            }
          }
          // Fewest hyperedges missed by any k vertices.
          int q = n_edges;
          std::vector<char> sel(mv, 0);
          std::fill(sel.begin(), sel.begin() + k, 1);
          std::sort(sel.begin(), sel.end(), std::greater<>());
          do {
            int miss = 0;
            for (const auto& f : h.hyperedges) {
              bool hit = false;
              for (Vertex v : f) hit = hit || sel[v];
              miss += hit ? 0 : 1;
            }
            q = std::min(q, miss);
          } while (std::prev_permutation(sel.begin(), sel.end()));
          const double expect = (d - 1.0) * (n_edges - q) + (d + 1.0) * q;
          const double got = OptDiscrete(inst).optimal_cost;
          s.Check(got == expect, [&] { return label + " oracle " + Num(got); });
        });
      }
    }
  }
  for (double p = 0; p <= 1.0; p += 0.125) {
    const GapPrediction a = PredictGapHypergraph(3, 8, p);
    const GapPrediction b = PredictGapHypergraph(3, 8, std::min(1.0, p + 0.125));
    s.Check(a.no_cost_lower <= b.no_cost_lower, [&] { return "gap p=" + Num(p); });
  }
  out.push_back(s.Take());
}

}  // namespace

LemmaReport VerifyLemmas(int max_edges, const RunConfig& cfg) {
  cfg.Validate();
  if (max_edges < 1 || max_edges > kMaxEnumerationEdges) {
    throw Error(ErrorCode::kConfigError,
                "max_edges must be in [1, " +
                    std::to_string(kMaxEnumerationEdges) + "]");
  }
  const WeiszfeldOptions opt = cfg.weiszfeld();
  const double tol = cfg.tolerance;
  const std::size_t ceil = cfg.brute_force_ceiling;
  const std::vector<Graph> graphs = EnumerateTriangleFree(max_edges, true);

  LemmaReport rep;
  rep.max_edges = max_edges;
  rep.graphs = graphs.size();
  ClosedFormSuites(cfg, rep.suites);
  HypergraphSuite(cfg, rep.suites);

  Suite matching("graph.matching_bounds");
  Suite konig("graph.konig_cover");
  Suite classify("graph.classify_definition");
  Suite distances("reduction.distance_structure");
  Suite median_floor("fermat.median_extra_floor");
  Suite non_bridge("fermat.non_bridge_floor");
  Suite means_exact("fermat.means_exact");
  Suite means_floor("fermat.means_extra_floor");
  Suite safe("decomposition.safe");
  Suite ultra("decomposition.ultra");
  Suite cover_two("cover.matching_two");
  Suite cover_general("cover.general");
  Suite cover_dispatch("cover.case_dispatch");
  Suite cover_means("cover.means");
  Suite oracle_k1("oracle.k1_agreement");
  Suite oracle_mono("oracle.monotone_k");
  Suite oracle_complete("oracle.completeness");
  Suite oracle_kernels("oracle.serial_parallel");

  for (const Graph& g : graphs) {
    const std::string label = Describe(g);
    auto what = [&](const std::string& extra = "") {
      return [label, extra] { return extra.empty() ? label : label + " " + extra; };
    };
    const std::size_t m = g.num_edges();
    const bool connected = IsConnected(g);
    const bool nonstar = IsNonStar(g);

    const Matching greedy = MaximalMatchingGreedy(g);
    const Matching maximum = MaximumMatching(g, ceil);
    const int delta_max = MaxDegree(g);
    matching.Check(IsMatching(g, greedy) && IsMaximalMatching(g, greedy) &&
                       IsMatching(g, maximum) && maximum.size() >= greedy.size() &&
                       greedy.size() * 2 * delta_max >= m,
                   what());

    if (IsBipartite(g)) {
      const VertexSet vc = KonigCover(g);
      konig.Check(IsVertexCover(g, vc) && vc.size() == maximum.size(), what());
    }

    if (connected && m <= 7) {
      const GraphClass c = Classify(g);
      const bool star = IsStar(g);
      classify.Check((c.tag == ClassTag::kStar || c.tag == ClassTag::kSingleEdge) == star,
                     what("star tag"));
      if (nonstar) {
        classify.Check(c.IsFundamental() == IsFundamentalByDefinition(g),
                       what(c.ToString()));
      }
    }

    distances.Guard(label, [&] {
      const ClusteringInstance inst = ReduceGraph(g, 1, Objective::kMedian);
      bool sums = inst.points.size() == m;
      for (const Point& p : inst.points) {
        double s = 0;
        for (double x : p) s += x;
        sums = sums && s == 2.0;
      }
      distances.Check(sums && PairwiseSquaredDistanceCheck(inst, g), what());
    });

    const Rational means_cost = OneMeansCost(g);
    means_exact.Check(means_cost == CentroidSquaredSum(g), what());

    if (!nonstar) continue;
    const Rational dm = MeansExtraCost(g);
    means_floor.Check(dm >= Rational(2, 3), what());

    const double numeric = NumericalCost(g, opt);
    const double r = static_cast<double>(m);
    const double delta = numeric - std::sqrt(r * (r - 1));
    median_floor.Check(delta >= 0.158 - tol, what(Num(delta)));
    const bool bridge = IsBridgeGraph(g);
    if (!bridge) non_bridge.Check(numeric >= r - tol, what(Num(numeric)));

    if (connected) {
      safe.Guard(label, [&] {
        const DecompositionTrace trace = Decompose(g, DecomposeMode::kSafe);
        const LowerBoundCertificate cert = CertifyLowerBound(g, DecomposeMode::kSafe);
        const std::size_t t = trace.removed_pairs.size();
        const Graph residual = ReplayTrace(g, trace);
        safe.Check(trace.residual.IsFundamental() &&
                       m == trace.residual_edges.size() + 2 * t && t <= m / 2 &&
                       CanonicalForm(residual) ==
                           CanonicalForm(g.Subgraph(trace.residual_edges)),
                   what("trace"));
        safe.Check(cert.bound <= numeric + tol, what("bound " + Num(cert.bound)));
        safe.Check(cert.bound >= r - 0.342 - 1e-12, what("bound " + Num(cert.bound)));
      });
      if (!bridge) {
        ultra.Guard(label, [&] {
          const DecompositionTrace trace = Decompose(g, DecomposeMode::kUltraSafe);
          const LowerBoundCertificate cert =
              CertifyLowerBound(g, DecomposeMode::kUltraSafe);
          ultra.Check(trace.residual.tag == ClassTag::kThreeP2 ||
                          trace.residual.tag == ClassTag::kAn,
                      what(trace.residual.ToString()));
          ultra.Check(cert.bound >= r - 1e-12 && cert.bound <= numeric + tol,
                      what("bound " + Num(cert.bound)));
        });
      }
    }

    cover_means.Guard(label, [&] {
      const CoverResult c = CoverNonstarMeans(g);
      const Rational size(static_cast<std::int64_t>(c.size()));
      cover_means.Check(c.valid && size <= 1 + Rational(5, 2) * dm &&
                            size <= 2 + dm,
                        what(std::to_string(c.size())));
    });

    if (!IsTriangleFree(g)) continue;
    if (maximum.size() == 2) {
      cover_two.Guard(label, [&] {
        const CoverResult c = CoverMatchingTwo(g, opt);
        const std::size_t expect = Classify(g).tag == ClassTag::kC5 ? 3 : 2;
        cover_two.Check(c.valid && c.size() == expect &&
                            MinVertexCover(g, ceil).size() == expect,
                        what(std::to_string(c.size())));
      });
    }
    if (maximum.size() >= 3) {
      const Matching l = SecondMaximumMatching(g, maximum, ceil);
      if (!l.empty()) {
        cover_general.Guard(label, [&] {
          const CoverResult c = CoverGeneral(g, maximum, l);
          cover_general.Check(c.valid && c.size() <= maximum.size() + l.size() - 1,
                              what(std::to_string(c.size())));
        });
      }
      cover_dispatch.Guard(label, [&] {
        const CoverResult c = CoverCaseDispatch(g, opt);
        cover_dispatch.Check(
            c.valid && c.size() <= 1.8 + kDeltaSlope * delta + tol &&
                c.size() <= c.bound_value + tol,
            what(c.bound_kind + " " + std::to_string(c.size())));
      });
    }
  }

  // Oracle suites on graphs of at most 7 edges, including stars.
  for (const Graph& g : graphs) {
    if (g.num_edges() > 7) continue;
    const std::string label = Describe(g);
    const std::size_t m = g.num_edges();
    const int k_vc = static_cast<int>(MinVertexCover(g, ceil).size());
    for (Objective obj : {Objective::kMedian, Objective::kMeans}) {
      const std::string olabel = label + " " + std::string(ObjectiveName(obj));
      const std::vector<Point> pts = EdgePoints(g);
      const SubsetCostTable table(pts, obj, Execution::kParallel, opt);
      const double single = obj == Objective::kMedian
                                ? Weiszfeld(pts, opt).cost
                                : boost::rational_cast<double>(OneMeansCost(g));
      const OracleReport one = OptContinuous(table, 1, Execution::kParallel, opt);
      oracle_k1.Check(std::abs(one.optimal_cost - single) <= tol,
                      [&] { return olabel; });
      double prev = one.optimal_cost;
      for (int k = 2; k <= static_cast<int>(m); ++k) {
        const OracleReport rk = OptContinuous(table, k, Execution::kParallel, opt);
        oracle_mono.Check(rk.optimal_cost <= prev + 1e-9,
                          [&] { return olabel + " k=" + std::to_string(k); });
        oracle_kernels.Check(
            BestPartition(table, k, Execution::kSerial) == rk.partition &&
                std::abs(ReportCost(pts, rk, obj) - rk.optimal_cost) <= 1e-9,
            [&] { return olabel + " k=" + std::to_string(k); });
        prev = rk.optimal_cost;
      }
      const OracleReport at_vc = OptContinuous(table, k_vc, Execution::kParallel, opt);
      const double yes = obj == Objective::kMedian ? m - k_vc / 2.0 : double(m) - k_vc;
      const double slack = obj == Objective::kMedian ? 1e-6 : 1e-9;
      oracle_complete.Check(at_vc.optimal_cost <= yes + slack,
                            [&] { return olabel + " " + Num(at_vc.optimal_cost); });
    }
  }

  for (Suite* s : {&matching, &konig, &classify, &distances, &median_floor,
                   &non_bridge, &means_exact, &means_floor, &safe, &ultra,
                   &cover_two, &cover_general, &cover_dispatch, &cover_means,
                   &oracle_k1, &oracle_mono, &oracle_complete, &oracle_kernels}) {
    rep.suites.push_back(s->Take());
  }
  return rep;
}

std::string_view KPolicyName(KPolicy policy) {
  return policy == KPolicy::kMinVc ? "minvc" : "maxmatch";
}

KPolicy ParseKPolicy(std::string_view name) {
  if (name == "minvc") return KPolicy::kMinVc;
  if (name == "maxmatch") return KPolicy::kMaxMatch;
  throw Error(ErrorCode::kConfigError, "unknown k policy '" + std::string(name) + "'");
}

std::uint64_t TrialSeed(std::uint64_t seed, int trial) {
  // splitmix64 step so neighbouring trials get unrelated streams.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<SweepRow> RunSweep(const SweepConfig& sweep, const RunConfig& cfg) {
  cfg.Validate();
  if (sweep.n < 2 || sweep.max_degree < 1 || sweep.trials < 0) {
    throw Error(ErrorCode::kConfigError, "need n >= 2, max degree >= 1, trials >= 0");
  }
  if (sweep.max_edges > kMaxContinuousPoints) {
    throw Error(ErrorCode::kConfigError,
                "sweep graphs are capped at " +
                    std::to_string(kMaxContinuousPoints) + " edges");
  }
  const WeiszfeldOptions opt = cfg.weiszfeld();
  std::vector<SweepRow> rows;
  for (int trial = 0; trial < sweep.trials; ++trial) {
    SweepRow row;
    row.trial = trial;
    row.seed = TrialSeed(cfg.seed, trial);
    row.n = sweep.n;
    const Graph g = RandomTriangleFree(sweep.n, sweep.max_degree, row.seed,
                                       sweep.max_edges);
    row.m = g.num_edges();
    row.max_degree = MaxDegree(g);
    row.min_vc = MinVertexCover(g, cfg.brute_force_ceiling).size();
    row.k = sweep.policy == KPolicy::kMinVc
                ? static_cast<int>(row.min_vc)
                : static_cast<int>(MaximumMatching(g, cfg.brute_force_ceiling).size());
    row.k_beta = static_cast<int>(std::ceil(cfg.beta * row.k - 1e-9));
    const ClusteringInstance inst = ReduceGraph(g, row.k, sweep.objective);
    const SubsetCostTable table(inst.points, sweep.objective, Execution::kParallel, opt);
    const OracleReport at_k = OptContinuous(table, row.k, Execution::kParallel, opt);
    const OracleReport at_kb = OptContinuous(table, row.k_beta, Execution::kParallel, opt);
    row.opt_k = at_k.optimal_cost;
    row.opt_k_beta = at_kb.optimal_cost;
    const GapPrediction gap = PredictGapGraph(static_cast<int>(row.m), row.k,
                                              sweep.objective, cfg.delta);
    row.yes_cost = gap.yes_cost;
    row.no_cost_lower = gap.no_cost_lower;

    std::vector<std::vector<EdgeId>> clustering(row.k_beta);
    for (std::size_t i = 0; i < at_kb.partition.size(); ++i) {
      clustering[at_kb.partition[i]].push_back(i);
    }
    SoundnessConfig sc;
    sc.k = row.k;
    sc.beta = cfg.beta;
    sc.objective = sweep.objective;
    sc.delta = cfg.delta;
    sc.weiszfeld = opt;
    const SoundnessReport sr = SoundnessAssemble(g, clustering, sc);
    row.cover_size = sr.total_cover_size;
    row.cover_valid = sr.cover_valid;
    row.ledger_bound = sr.ledger_bound;
    row.procedures_path = sr.procedures_path;
    row.cost_qualifies = sr.cost_qualifies;
    row.predicted_ceiling = sr.predicted_ceiling;
    row.auto_no = InAutoNoRegime(g, row.k);
    const double slack = sweep.objective == Objective::kMedian ? cfg.tolerance : 1e-9;
    row.completeness = row.opt_k <= row.yes_cost + slack;
    row.monotone = row.opt_k_beta <= row.opt_k + 1e-9;
    row.cover_within_ceiling =
        row.cover_size <= row.predicted_ceiling + cfg.tolerance;
    rows.push_back(row);
  }
  return rows;
}

std::string SweepCsv(const SweepConfig& sweep, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "trial,seed,n,m,max_degree,k_policy,k,min_vc,k_beta,objective,opt_k,"
        "opt_k_beta,yes_cost,no_cost_lower,cover_size,cover_valid,ledger_bound,"
        "procedures_path,cost_qualifies,predicted_ceiling,auto_no,completeness,"
        "monotone,cover_within_ceiling\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const SweepRow& r : rows) {
    os << r.trial << ',' << r.seed << ',' << r.n << ',' << r.m << ','
       << r.max_degree << ',' << KPolicyName(sweep.policy) << ',' << r.k << ','
       << r.min_vc << ',' << r.k_beta << ',' << ObjectiveName(sweep.objective)
       << ',' << Num(r.opt_k) << ',' << Num(r.opt_k_beta) << ','
       << Num(r.yes_cost) << ',' << Num(r.no_cost_lower) << ',' << r.cover_size
       << ',' << b(r.cover_valid) << ',' << Num(r.ledger_bound) << ','
       << r.procedures_path << ',' << b(r.cost_qualifies) << ','
       << Num(r.predicted_ceiling) << ',' << b(r.auto_no) << ','
       << b(r.completeness) << ',' << b(r.monotone) << ','
       << b(r.cover_within_ceiling) << '\n';
  }
  return os.str();
}

}  // namespace kmh
