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

// kmh: reductions, 1-median machinery, decompositions, cover extraction and
// brute-force oracles from the command line.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kmh/decomposition.h"
#include "kmh/error.h"
#include "kmh/fermat_weber.h"
#include "kmh/graph.h"
#include "kmh/io.h"
#include "kmh/lemma_suite.h"
#include "kmh/oracle.h"
#include "kmh/reduction.h"
#include "kmh/vc_extraction.h"

namespace {

using kmh::Json;

struct Options {
  std::string graph;
  std::string instance;
  std::string clustering;
  std::string out;
  std::string objective = "median";
  std::string mode = "safe";
  std::string k_policy = "minvc";
  int k = 1;
  int d = 0;
  int max_edges = 5;
  int n = 8;
  int max_degree = 4;
  int trials = 50;
  int oracle_edges = 12;
  double p = 0;
  bool serial = false;
  kmh::RunConfig run;
};

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

kmh::HypergraphInstance ReadHypergraph(const Options& o) {
  std::ifstream in(o.graph);
  if (!in) throw kmh::Error(kmh::ErrorCode::kParseError, "cannot open '" + o.graph + "'");
  return kmh::ParseHyperedges(in, o.d, o.k);
}

int HyperReduce(const Options& o) {
  const kmh::HypergraphInstance h = ReadHypergraph(o);
  const kmh::ClusteringInstance inst = kmh::ReduceHypergraph(h);
  Json report = {{"gap", kmh::ToJson(kmh::PredictGapHypergraph(
                             h.d, static_cast<int>(h.hyperedges.size()), o.p))}};
  if (o.out.empty()) {
    report["instance"] = kmh::ToJson(inst);
  } else {
    kmh::WriteTextFile(o.out, Dump(kmh::ToJson(inst)));
    report["instance_file"] = o.out;
  }
  std::cout << Dump(report);
  return 0;
}

int Reduce(const Options& o) {
  if (o.d > 0) return HyperReduce(o);
  const kmh::Graph g = kmh::ReadEdgeListFile(o.graph);
  const kmh::Objective obj = kmh::ParseObjective(o.objective);
  const bool triangle_free = kmh::IsTriangleFree(g);
  if (!triangle_free) std::cerr << "warning: graph has a triangle\n";
  const kmh::ClusteringInstance inst = kmh::ReduceGraph(g, o.k, obj);
  Json report = {
      {"gap", kmh::ToJson(kmh::PredictGapGraph(static_cast<int>(g.num_edges()),
                                               o.k, obj, o.run.delta))},
      {"auto_no", kmh::InAutoNoRegime(g, o.k)},
      {"triangle_free", triangle_free}};
  if (o.out.empty()) {
    report["instance"] = kmh::ToJson(inst);
  } else {
    kmh::WriteTextFile(o.out, Dump(kmh::ToJson(inst)));
    report["instance_file"] = o.out;
  }
  std::cout << Dump(report);
  return 0;
}

int Median(const Options& o) {
  const kmh::WeiszfeldOptions wo = o.run.weiszfeld();
  Json report;
  if (!o.instance.empty()) {
    const auto inst = kmh::InstanceFromJson(Json::parse(kmh::ReadTextFile(o.instance)));
    report["solution"] = kmh::ToJson(kmh::Weiszfeld(inst.points, wo));
  } else {
    const kmh::Graph g = kmh::ReadEdgeListFile(o.graph);
    if (g.empty()) throw kmh::Error(kmh::ErrorCode::kEmptyGraph, "graph has no edges");
    const kmh::Graph c = kmh::CompactVertices(g);
    report["class"] = kmh::ToJson(kmh::Classify(g));
    report["solution"] = kmh::ToJson(kmh::Weiszfeld(kmh::EdgePoints(c), wo));
    const auto closed = kmh::ClosedFormMedianCost(g);
    report["closed_form"] = closed ? Json(*closed) : Json(nullptr);
    const double r = static_cast<double>(g.num_edges());
    report["star_cost"] = std::sqrt(r * (r - 1));
    const kmh::ExtraCost dm = kmh::ComputeExtraCost(g, kmh::Objective::kMedian, wo);
    report["extra_cost_median"] = {{"value", dm.value},
                                   {"basis", kmh::CostBasisName(dm.basis)}};
    const kmh::Rational means = kmh::OneMeansCost(g);
    const kmh::Rational dmeans = kmh::MeansExtraCost(g);
    report["one_means_cost"] = {{"value", boost::rational_cast<double>(means)},
                                {"exact", std::to_string(means.numerator()) + "/" +
                                              std::to_string(means.denominator())}};
    report["extra_cost_means"] = {
        {"value", boost::rational_cast<double>(dmeans)},
        {"exact", std::to_string(dmeans.numerator()) + "/" +
                      std::to_string(dmeans.denominator())}};
  }
  kmh::Emit(o.out, Dump(report));
  return 0;
}

int Decompose(const Options& o) {
  const kmh::Graph g = kmh::ReadEdgeListFile(o.graph);
  const kmh::DecomposeMode mode = kmh::ParseDecomposeMode(o.mode);
  Json report = {{"trace", kmh::ToJson(kmh::Decompose(g, mode))},
                 {"certificate", kmh::ToJson(kmh::CertifyLowerBound(g, mode))}};
  kmh::Emit(o.out, Dump(report));
  return 0;
}

int Cover(const Options& o) {
  const kmh::Graph g = kmh::ReadEdgeListFile(o.graph);
  const kmh::Objective obj = kmh::ParseObjective(o.objective);
  if (!o.clustering.empty()) {
    kmh::SoundnessConfig sc;
    sc.k = o.k;
    sc.beta = o.run.beta;
    sc.objective = obj;
    sc.delta = o.run.delta;
    sc.weiszfeld = o.run.weiszfeld();
    const auto clustering =
        kmh::ClusteringFromJson(Json::parse(kmh::ReadTextFile(o.clustering)));
    const kmh::SoundnessReport rep = kmh::SoundnessAssemble(g, clustering, sc);
    kmh::Emit(o.out, Dump(kmh::ToJson(rep)));
    return rep.cover_valid ? 0 : 1;
  }
  if (!kmh::IsNonStar(g)) {
    throw kmh::Error(kmh::ErrorCode::kPreconditionViolated,
                     "cover without --clustering needs a non-star graph");
  }
  kmh::CoverResult c;
  if (obj == kmh::Objective::kMeans) {
    c = kmh::CoverNonstarMeans(g);
  } else if (kmh::MaximumMatching(g, o.run.brute_force_ceiling).size() == 2) {
    c = kmh::CoverMatchingTwo(g, o.run.weiszfeld());
  } else {
    c = kmh::CoverCaseDispatch(g, o.run.weiszfeld());
  }
  kmh::Emit(o.out, Dump(kmh::ToJson(c)));
  return 0;
}

int Oracle(const Options& o) {
  const kmh::Execution exec =
      o.serial ? kmh::Execution::kSerial : kmh::Execution::kParallel;
  kmh::ClusteringInstance inst;
  if (!o.instance.empty()) {
    inst = kmh::InstanceFromJson(Json::parse(kmh::ReadTextFile(o.instance)));
  } else {
    inst = kmh::ReduceGraph(kmh::ReadEdgeListFile(o.graph), o.k,
                            kmh::ParseObjective(o.objective));
  }
  const kmh::OracleReport rep =
      inst.candidate_centers ? kmh::OptDiscrete(inst, exec)
                             : kmh::OptContinuous(inst, exec, o.run.weiszfeld());
  kmh::Emit(o.out, Dump(kmh::ToJson(rep)));
  return 0;
}

int VerifyLemmas(const Options& o) {
  const kmh::LemmaReport rep = kmh::VerifyLemmas(o.max_edges, o.run);
  kmh::Emit(o.out, Dump(kmh::ToJson(rep)));
  for (const kmh::SuiteResult& s : rep.suites) {
    std::cerr << (s.skipped() ? "SKIP " : s.passed() ? "PASS " : "FAIL ") << s.id
              << " (" << s.checked << " checks)\n";
  }
  return rep.passed() ? 0 : 1;
}

int Sweep(const Options& o) {
  kmh::SweepConfig sw;
  sw.n = o.n;
  sw.max_degree = o.max_degree;
  sw.trials = o.trials;
  sw.policy = kmh::ParseKPolicy(o.k_policy);
  sw.objective = kmh::ParseObjective(o.objective);
  sw.max_edges = static_cast<std::size_t>(o.oracle_edges);
  const auto rows = kmh::RunSweep(sw, o.run);
  kmh::Emit(o.out, kmh::SweepCsv(sw, rows));
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.completeness && r.monotone && r.cover_valid;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kmh: vertex-cover to clustering reductions and their checks"};
  app.require_subcommand(1);
  Options o;

  auto add_run = [&](CLI::App* c) {
    c->add_option("--tol", o.run.tolerance, "Check tolerance")->capture_default_str();
    c->add_option("--weiszfeld-tol", o.run.weiszfeld_tol, "Solver tolerance")
        ->capture_default_str();
    c->add_option("--max-iter", o.run.max_iter, "Solver iteration cap")
        ->capture_default_str();
    c->add_option("--delta", o.run.delta, "Gap parameter delta")->capture_default_str();
    c->add_option("--beta", o.run.beta, "Bi-criteria factor")->capture_default_str();
    c->add_option("--seed", o.run.seed, "Random seed")->capture_default_str();
    c->add_option("--out", o.out, "Output file (default stdout)");
  };
  auto objective = [&](CLI::App* c) {
    c->add_option("--objective", o.objective, "median or means")
        ->check(CLI::IsMember({"median", "means"}))
        ->capture_default_str();
  };

  auto* reduce = app.add_subcommand("reduce", "Build a clustering instance from a graph");
  reduce->add_option("--graph", o.graph, "Edge-list file (hyperedge file with --d)")
      ->required();
  reduce->add_option("--k", o.k, "Number of centers")->capture_default_str();
  reduce->add_option("--d", o.d, "Hyperedge size; switches to hypergraph mode");
  reduce->add_option("--p", o.p, "Uncovered fraction for the hypergraph gap");
  objective(reduce);
  add_run(reduce);

  auto* hyper = app.add_subcommand("hyper-reduce", "Build a discrete k-means instance");
  hyper->add_option("--graph", o.graph, "Hyperedge file")->required();
  hyper->add_option("--d", o.d, "Hyperedge size")->required();
  hyper->add_option("--k", o.k, "Number of centers")->capture_default_str();
  hyper->add_option("--p", o.p, "Uncovered fraction for the gap prediction");
  add_run(hyper);

  auto* median = app.add_subcommand("median", "1-median and 1-means costs of a graph");
  median->add_option("--graph", o.graph, "Edge-list file");
  median->add_option("--instance", o.instance, "Instance JSON (uses its points)");
  add_run(median);

  auto* decompose = app.add_subcommand("decompose", "Decompose and certify a lower bound");
  decompose->add_option("--graph", o.graph, "Edge-list file")->required();
  decompose->add_option("--mode", o.mode, "safe or ultra_safe")->capture_default_str();
  add_run(decompose);

  auto* cover = app.add_subcommand("cover", "Extract a vertex cover");
  cover->add_option("--graph", o.graph, "Edge-list file")->required();
  cover->add_option("--clustering", o.clustering, "Clustering JSON for soundness assembly");
  cover->add_option("--k", o.k, "Number of centers")->capture_default_str();
  objective(cover);
  add_run(cover);

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimal clustering");
  oracle->add_option("--graph", o.graph, "Edge-list file");
  oracle->add_option("--instance", o.instance, "Instance JSON");
  oracle->add_option("--k", o.k, "Number of centers")->capture_default_str();
  oracle->add_flag("--serial", o.serial, "Use the serial reference kernels");
  objective(oracle);
  add_run(oracle);

  auto* verify = app.add_subcommand("verify-lemmas", "Run the exhaustive lemma suites");
  verify->add_option("--max-edges", o.max_edges, "Largest enumerated graph")
      ->capture_default_str();
  add_run(verify);

  auto* sweep = app.add_subcommand("sweep", "Random-graph completeness/soundness sweep");
  sweep->add_option("--n", o.n, "Vertices per graph")->capture_default_str();
  sweep->add_option("--max-degree", o.max_degree, "Degree bound")->capture_default_str();
  sweep->add_option("--trials", o.trials, "Number of graphs")->capture_default_str();
  sweep->add_option("--k-policy", o.k_policy, "minvc or maxmatch")
      ->check(CLI::IsMember({"minvc", "maxmatch"}))
      ->capture_default_str();
  sweep->add_option("--max-edges", o.oracle_edges, "Edge cap per graph")
      ->capture_default_str();
  objective(sweep);
  add_run(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    o.run.Validate();
    if (*reduce) return Reduce(o);
    if (*hyper) return HyperReduce(o);
    if (*median) return Median(o);
    if (*decompose) return Decompose(o);
    if (*cover) return Cover(o);
    if (*oracle) return Oracle(o);
    if (*verify) return VerifyLemmas(o);
    if (*sweep) return Sweep(o);
  } catch (const kmh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
