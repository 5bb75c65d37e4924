// Copyright 2026 The rac-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RACLAB_IO_H
#define RACLAB_IO_H

#include <string>
#include <vector>

#include "json.hpp"
#include "raclab/classical_rac.h"
#include "raclab/evaluation.h"
#include "raclab/optimize.h"
#include "raclab/qstate.h"
#include "raclab/quantum_rac.h"

namespace raclab {

using Json = nlohmann::ordered_json;

// File formats. Shape errors throw ConfigError; semantic checks (unit
// norms, positivity) are left to the consuming operation.
//
//   state:     {"a0": [x,y,z], "b0": [x,y,z], "E": [[3],[3],[3]]}
//              | {"bell_diagonal": [e1,e2,e3]} | {"werner": q}
//   protocol:  {"n": 2, "alice": {"00": [x,y,z], ...}, "bob": {"1": [x,y,z], ...}}
//   strategy:  {"n": 2, "encoding": {"00": [c_ra0, c_ra1], ...},
//               "decoding": {"1": [[g_c0_rb0, g_c0_rb1], [g_c1_rb0, g_c1_rb1]], ...}}

TwoQubitState state_from_json(const Json &j);
Json state_to_json(const TwoQubitState &s);

QuantumRacProtocol protocol_from_json(const Json &j);
Json protocol_to_json(const QuantumRacProtocol &p);

ClassicalStrategy strategy_from_json(const Json &j);
Json strategy_to_json(const ClassicalStrategy &s);

Json distribution_to_json(const SharedDistribution &d);
Json search_report_to_json(const SearchReport &r);
/// Aligned plain-text table of a search report.
std::string search_report_table(const SearchReport &r);

/// Rows "x,i,probability" followed by "p_min,<value>".
std::string evaluation_csv(const EvaluationResult &r);
Json evaluation_to_json(const EvaluationResult &r);

/// Header "label,e1,e2,e3,discord,p_min,separable".
std::string comparison_csv(const std::vector<ComparisonRow> &rows);
Json comparison_to_json(const ComparisonRow &row);

/// Shortest round-trip decimal form.
std::string format_real(double v);

/// Throws IoError.
std::string read_text_file(const std::string &path);
Json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace raclab

#endif
