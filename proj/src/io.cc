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

#include "kmh/io.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "kmh/error.h"

namespace kmh {

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json ToJson(const ClusteringInstance& inst) {
  Json j;
  j["dimension"] = inst.dimension;
  j["k"] = inst.k;
  j["objective"] = ObjectiveName(inst.objective);
  j["points"] = inst.points;
  j["candidate_centers"] =
      inst.candidate_centers ? Json(*inst.candidate_centers) : Json(nullptr);
  return j;
}

ClusteringInstance InstanceFromJson(const Json& j) {
  try {
    ClusteringInstance inst;
    inst.dimension = j.at("dimension").get<int>();
    inst.k = j.at("k").get<int>();
    inst.objective = ParseObjective(j.at("objective").get<std::string>());
    inst.points = j.at("points").get<std::vector<Point>>();
    if (j.contains("candidate_centers") && !j["candidate_centers"].is_null()) {
      inst.candidate_centers = j["candidate_centers"].get<std::vector<Point>>();
    }
    auto check = [&](const std::vector<Point>& pts) {
      for (const Point& p : pts) {
        if (static_cast<int>(p.size()) != inst.dimension) {
          throw Error(ErrorCode::kParseError, "vector length differs from dimension");
        }
      }
    };
    check(inst.points);
    if (inst.candidate_centers) check(*inst.candidate_centers);
    if (inst.k < 1) throw Error(ErrorCode::kParseError, "k must be at least 1");
    return inst;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Json ToJson(const GapPrediction& gap) {
  return {{"yes_cost", gap.yes_cost},
          {"no_cost_lower", gap.no_cost_lower},
          {"parameters",
           {{"m", gap.parameters.m},
            {"k", gap.parameters.k},
            {"d", gap.parameters.d},
            {"n_hyperedges", gap.parameters.n_hyperedges},
            {"uncovered_fraction", gap.parameters.uncovered_fraction},
            {"delta", gap.parameters.delta}}}};
}

Json ToJson(const GraphClass& c) {
  Json j = {{"tag", ClassTagName(c.tag)}, {"name", c.ToString()},
            {"witness", c.witness}};
  if (c.tag == ClassTag::kAn || c.tag == ClassTag::kLn) j["n"] = c.n;
  if (c.tag == ClassTag::kBridge || c.tag == ClassTag::kLn) {
    j["p"] = c.p;
    j["q"] = c.q;
  }
  return j;
}

Json ToJson(const DecompositionTrace& trace) {
  Json pairs = Json::array();
  for (const EdgePair& p : trace.removed_pairs) pairs.push_back({p.first, p.second});
  Json residual = {{"tag", ClassTagName(trace.residual.tag)},
                   {"n", trace.residual.n},
                   {"name", trace.residual.ToString()},
                   {"edges", trace.residual_edges}};
  return {{"mode", DecomposeModeName(trace.mode)},
          {"pairs", pairs},
          {"residual", residual}};
}

Json ToJson(const LowerBoundCertificate& cert) {
  Json terms = Json::array();
  for (const BoundTerm& t : cert.derivation) {
    terms.push_back({{"label", t.label}, {"edges", t.edges}, {"cost", t.cost}});
  }
  return {{"graph_edges", cert.graph_edges},
          {"bound", cert.bound},
          {"derivation", terms}};
}

Json ToJson(const MedianSolution& sol) {
  return {{"center", sol.center},
          {"cost", sol.cost},
          {"iterations", sol.iterations},
          {"converged", sol.converged},
          {"collinear", sol.collinear}};
}

Json ToJson(const CoverResult& cover) {
  return {{"cover", cover.cover},
          {"size", cover.size()},
          {"bound_kind", cover.bound_kind},
          {"bound_const", cover.bound_const},
          {"bound_value", cover.bound_value},
          {"delta_used", cover.delta_used},
          {"valid", cover.valid}};
}

Json ToJson(const SingleEdgeResult& res) {
  return {{"case", res.which == SingleEdgeCase::kCaseI ? "I" : "II"},
          {"cover", res.cover},
          {"full_graph", res.full_graph},
          {"t1_prime", res.t1_prime},
          {"mp_size", res.mp_size},
          {"mp_threshold", res.mp_threshold},
          {"bound", res.bound},
          {"mg_size", res.mg_size},
          {"my_size", res.my_size},
          {"mn_size", res.mn_size},
          {"hard_regime", res.hard_regime},
          {"valid", res.valid}};
}

Json ToJson(const SoundnessReport& rep) {
  Json clusters = Json::array();
  for (const ClusterLedger& c : rep.per_cluster) {
    clusters.push_back({{"block", c.block},
                        {"edges", c.edges},
                        {"category", ClusterCategoryName(c.category)},
                        {"cost", c.cost},
                        {"delta", c.delta},
                        {"cover", ToJson(c.cover)}});
  }
  return {{"objective", ObjectiveName(rep.objective)},
          {"k", rep.k},
          {"beta", rep.beta},
          {"epsilon_delta", {{"epsilon", rep.epsilon}, {"delta", rep.delta}}},
          {"epsilon_positive", rep.epsilon_positive},
          {"blocks", rep.blocks},
          {"allowed_blocks", rep.allowed_blocks},
          {"t1", rep.t1},
          {"t2", rep.t2},
          {"t3", rep.t3},
          {"t4", rep.t4},
          {"per_cluster", clusters},
          {"procedures_path", rep.procedures_path},
          {"single_edge", ToJson(rep.single_edge)},
          {"cover", rep.cover},
          {"total_cover_size", rep.total_cover_size},
          {"cover_valid", rep.cover_valid},
          {"clustering_cost", rep.clustering_cost},
          {"cost_threshold", rep.cost_threshold},
          {"cost_qualifies", rep.cost_qualifies},
          {"ledger_bound", rep.ledger_bound},
          {"predicted_ceiling", rep.predicted_ceiling}};
}

Json ToJson(const OracleReport& rep) {
  Json j = {{"optimal_cost", rep.optimal_cost},
            {"partition", rep.partition},
            {"centers", rep.centers},
            {"method", OracleMethodName(rep.method)},
            {"k", rep.k}};
  if (rep.method == OracleMethod::kCenterSubsetEnum) {
    j["center_indices"] = rep.center_indices;
  }
  return j;
}

Json ToJson(const LemmaReport& rep) {
  Json suites = Json::array();
  for (const SuiteResult& s : rep.suites) {
    Json e = {{"id", s.id},
              {"checked", s.checked},
              {"failures", s.failures},
              {"status", s.skipped() ? "skipped" : s.passed() ? "pass" : "fail"}};
    if (!s.first_failure.empty()) e["first_failure"] = s.first_failure;
    suites.push_back(e);
  }
  return {{"max_edges", rep.max_edges},
          {"graphs", rep.graphs},
          {"suites", suites},
          {"passed", rep.passed()}};
}

std::vector<std::vector<EdgeId>> ClusteringFromJson(const Json& j) {
  try {
    std::vector<std::vector<EdgeId>> out;
    if (j.is_array()) {
      for (const Json& block : j) out.push_back(block.get<std::vector<EdgeId>>());
      return out;
    }
    if (!j.is_object()) {
      throw Error(ErrorCode::kParseError, "clustering must be an object or array");
    }
    std::map<long long, std::vector<EdgeId>> by_id;
    for (const auto& [key, value] : j.items()) {
      std::size_t used = 0;
      long long id = 0;
      try {
        id = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size()) {
        throw Error(ErrorCode::kParseError, "cluster id '" + key + "' is not an integer");
      }
      by_id[id] = value.get<std::vector<EdgeId>>();
    }
    for (auto& [id, edges] : by_id) out.push_back(std::move(edges));
    return out;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kConfigError, "cannot write '" + path + "'");
  out << content;
}

void Emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    WriteTextFile(path, content);
  }
}

}  // namespace kmh
