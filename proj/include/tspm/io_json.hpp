// Copyright 2026 The tspm Authors
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

#ifndef TSPM_IO_JSON_HPP
#define TSPM_IO_JSON_HPP

#include <string>

#include <json.hpp>

#include "tspm/blockpos.hpp"
#include "tspm/capacity.hpp"
#include "tspm/distill.hpp"
#include "tspm/map_rep.hpp"
#include "tspm/run_config.hpp"
#include "tspm/seesaw.hpp"
#include "tspm/twirl.hpp"

namespace tspm {

using Json = nlohmann::json;

// Operator schema: {"factors": [d1, ..., dk], "data": [[re, im], ...]} with
// data row-major of length (prod d)^2. Readers reject size mismatches.
Json operator_to_json(const FactoredOperator& op);
FactoredOperator operator_from_json(const Json& j);

// Map schema: {"din": d1, "dout": d2, "choi": <operator with factors
// [d1, d2]>}. The Kraus alternative {"din", "dout", "kraus": [<matrix>...]}
// (each matrix row-major dout x din as [[re, im], ...]) is converted to the
// Choi form on load.
Json map_to_json(const MapRep& m);
MapRep map_from_json(const Json& j);

Json ket_to_json(const Ket& k);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int rows, int cols);

Json config_to_json(const RunConfig& config);

Json opt_report_to_json(const OptReport& report, const RunConfig& config);
Json norm_interval_to_json(const NormInterval& interval);
Json bound_report_to_json(const BoundReport& report, const RunConfig& config);
Json filter_outcome_to_json(const FilterOutcome& outcome);
Json classify_report_to_json(const TwirlState& ts, const ClassifyReport& report);
Json candidate_to_json(const CandidateResult& result);
Json additivity_report_to_json(const AdditivityReport& report, const RunConfig& config);
Json two_way_report_to_json(const TwoWayErrorReport& report);
Json twirl_positivity_to_json(const TwirlPositivityReport& report);

std::string format_id(BoundFormula formula);

// Round-trip helpers for files.
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace tspm

#endif
