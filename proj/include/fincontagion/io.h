// Copyright 2026 The fincontagion Authors
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

// File formats: network JSON, edges CSV, trace/result/certificate JSON, DOT
// and the balance-sheet CSV table. Amounts travel as strings ("p/q" or exact
// decimals) so nothing is lost in JSON numbers.

#ifndef FINCONTAGION_IO_H_
#define FINCONTAGION_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fincontagion/cascade.h"
#include "fincontagion/dual.h"
#include "fincontagion/generators.h"
#include "fincontagion/network.h"
#include "fincontagion/stability.h"
#include "json.hpp"

namespace fincontagion {

// Malformed input (syntax, missing fields, bad amounts).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses a network document. Structural problems raise FormatError, unknown
// node references UnknownNodeError; model invariants are not checked here.
NetworkSpec NetworkFromJson(const nlohmann::json& doc,
                            NumericPolicy numeric = {});
nlohmann::json NetworkToJson(const NetworkSpec& spec);

NetworkSpec ReadNetworkFile(const std::string& path, NumericPolicy numeric = {});
void WriteJsonFile(const std::string& path, const nlohmann::json& doc);

struct CsvNetworkParams {
  Amount gamma;
  Amount phi;
  Amount external_total;
};

// Edges CSV with header "src,dst,weight" (weight optional). Nodes are taken
// in order of first appearance and share E equally. Without weights the
// network is homogeneous with unit weights.
NetworkSpec NetworkFromEdgesCsv(std::istream& in, const CsvNetworkParams& params,
                                NumericPolicy numeric = {});

nlohmann::json TraceToJson(const NetworkSpec& spec, const ShockSet& shock,
                           const CascadeTrace& trace);
nlohmann::json StabilityToJson(const NetworkSpec& spec,
                               const StabilityResult& result);
nlohmann::json DualToJson(const NetworkSpec& spec, const DualResult& result);
nlohmann::json CertificateToJson(const GeneratedInstance& instance);

// Graphviz digraph; failed nodes are filled with a colour per failure step.
std::string TraceToDot(const NetworkSpec& spec, const CascadeTrace& trace);

// "node,iota,b,e,a,c" followed by one row per node.
void WriteBalanceCsv(std::ostream& out, const NetworkSpec& spec);

}  // namespace fincontagion

#endif  // FINCONTAGION_IO_H_
