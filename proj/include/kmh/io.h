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

// JSON serialization of instances, traces, certificates, covers and reports.

#ifndef KMH_IO_H_
#define KMH_IO_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "kmh/decomposition.h"
#include "kmh/fermat_weber.h"
#include "kmh/lemma_suite.h"
#include "kmh/oracle.h"
#include "kmh/reduction.h"
#include "kmh/vc_extraction.h"

namespace kmh {

using Json = nlohmann::json;

// 17 significant digits, as used in CSV output.
std::string FormatDouble(double x);

Json ToJson(const ClusteringInstance& inst);
ClusteringInstance InstanceFromJson(const Json& j);  // throws kParseError

Json ToJson(const GapPrediction& gap);
Json ToJson(const GraphClass& c);
Json ToJson(const DecompositionTrace& trace);
Json ToJson(const LowerBoundCertificate& cert);
Json ToJson(const MedianSolution& sol);
Json ToJson(const CoverResult& cover);
Json ToJson(const SingleEdgeResult& res);
Json ToJson(const SoundnessReport& rep);
Json ToJson(const OracleReport& rep);
Json ToJson(const LemmaReport& rep);

// Object mapping cluster id to edge indices, ordered by numeric id, or an
// array of edge-index arrays.
std::vector<std::vector<EdgeId>> ClusteringFromJson(const Json& j);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& content);

// Writes to path, or to stdout when path is empty or "-".
void Emit(const std::string& path, const std::string& content);

}  // namespace kmh

#endif  // KMH_IO_H_
