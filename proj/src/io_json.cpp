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

#include "tspm/io_json.hpp"

#include <fstream>

namespace tspm {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json operator_to_json(const FactoredOperator& op) {
  Json data = Json::array();
  const int side = op.side();
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) data.push_back(complex_to_json(op.data()(r, c)));
  return Json{{"factors", op.factors()}, {"data", data}};
}

FactoredOperator operator_from_json(const Json& j) {
  if (!j.contains("factors") || !j.contains("data")) {
    throw std::invalid_argument("operator JSON needs 'factors' and 'data'");
  }
  const auto factors = j.at("factors").get<std::vector<int>>();
  if (factors.empty()) throw std::invalid_argument("factor list must be non-empty");
  const long long side = factor_product(factors);
  const Json& data = j.at("data");
  if (!data.is_array() || static_cast<long long>(data.size()) != side * side) {
    throw std::invalid_argument("operator data length must equal (prod factors)^2");
  }
  Matrix m(side, side);
  for (long long r = 0; r < side; ++r)
    for (long long c = 0; c < side; ++c)
      m(r, c) = complex_from_json(data[static_cast<std::size_t>(r * side + c)]);
  return FactoredOperator(factors, std::move(m));
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols) {
    throw std::invalid_argument("matrix data length mismatch");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[static_cast<std::size_t>(r) * cols + c]);
  return m;
}

Json map_to_json(const MapRep& m) {
  return Json{{"din", m.din()}, {"dout", m.dout()}, {"choi", operator_to_json(m.choi())}};
}

MapRep map_from_json(const Json& j) {
  if (!j.contains("din") || !j.contains("dout")) {
    throw std::invalid_argument("map JSON needs 'din' and 'dout'");
  }
  const int din = j.at("din").get<int>();
  const int dout = j.at("dout").get<int>();
  if (j.contains("choi")) {
    FactoredOperator choi = operator_from_json(j.at("choi"));
    if (choi.num_factors() != 2 || choi.factor(0) != din || choi.factor(1) != dout) {
      throw std::invalid_argument("choi factors must be exactly [din, dout]");
    }
    return MapRep(din, dout, std::move(choi));
  }
  if (j.contains("kraus")) {
    std::vector<Matrix> kraus;
    for (const Json& k : j.at("kraus")) kraus.push_back(matrix_from_json(k, dout, din));
    return from_kraus(kraus, din, dout);
  }
  throw std::invalid_argument("map JSON needs either 'choi' or 'kraus'");
}

Json ket_to_json(const Ket& k) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < k.amps.size(); ++i) amps.push_back(complex_to_json(k.amps(i)));
  Json j{{"dim", k.dim()}, {"amplitudes", amps}};
  if (!k.factors.empty()) j["factors"] = k.factors;
  return j;
}

Json config_to_json(const RunConfig& config) {
  return Json{{"seed", config.seed},
              {"restarts", config.restarts},
              {"max_iter", config.max_iter},
              {"tol", config.tol},
              {"size_cap", config.size_cap}};
}

Json opt_report_to_json(const OptReport& report, const RunConfig& config) {
  Json j{{"value", report.value},
         {"certified", report.certified == Certification::RefutationCertified
                           ? "refutation_certified"
                           : "heuristic_minimum"},
         {"restarts_run", report.restarts_run},
         {"converged_fraction", report.converged_fraction},
         {"config", config_to_json(config)}};
  if (report.witness_left.dim() > 0) j["witness_left"] = ket_to_json(report.witness_left);
  if (report.witness_right.dim() > 0) j["witness_right"] = ket_to_json(report.witness_right);
  if (report.witness_state.size() > 0) j["witness_state"] = matrix_to_json(report.witness_state);
  if (report.diverged) j["diverged"] = true;
  return j;
}

Json norm_interval_to_json(const NormInterval& interval) {
  const char* method = nullptr;
  switch (interval.method_upper) {
    case UpperMethod::CPClosedForm: method = "cp_closed_form"; break;
    case UpperMethod::CPDecomposition: method = "cp_decomposition"; break;
    case UpperMethod::Exact: method = "exact"; break;
  }
  return Json{{"lower", interval.lower}, {"upper", interval.upper}, {"method", method}};
}

std::string format_id(BoundFormula formula) {
  switch (formula) {
    case BoundFormula::Transposition: return "transposition";
    case BoundFormula::CapacityGeneral: return "capacity_general";
    case BoundFormula::CapacityLeft: return "capacity_left";
    case BoundFormula::StrongConverseRate: return "strong_converse_rate";
    case BoundFormula::RecurrenceDcp: return "recurrence_dcp";
    case BoundFormula::SchemeDcp: return "scheme_dcp";
  }
  return "unknown";
}

Json bound_report_to_json(const BoundReport& report, const RunConfig& config) {
  Json constituents = Json::object();
  for (const auto& [name, interval] : report.constituents) {
    constituents[name] = norm_interval_to_json(interval);
  }
  Json j{{"formula_id", format_id(report.formula_id)},
         {"bound_bits", report.bound_value},
         {"constituents", constituents},
         {"conservative", report.conservative},
         {"config", config_to_json(config)}};
  if (report.vacuous) j["vacuous"] = true;
  if (!report.hypothesis.empty()) j["hypothesis"] = report.hypothesis;
  return j;
}

Json filter_outcome_to_json(const FilterOutcome& outcome) {
  return Json{{"side", outcome.side == FilterSide::OutputSide ? "out" : "in"},
              {"filter", matrix_to_json(outcome.filter)},
              {"state",
               Json{{"kind", outcome.state.kind == TwirlKind::Werner ? "werner" : "isotropic"},
                    {"d", outcome.state.d},
                    {"p", outcome.state.p}}},
              {"raw_overlap", outcome.raw_overlap},
              {"trace_before_twirl", outcome.trace_before_twirl}};
}

Json classify_report_to_json(const TwirlState& ts, const ClassifyReport& report) {
  return Json{{"kind", ts.kind == TwirlKind::Werner ? "werner" : "isotropic"},
              {"d", ts.d},
              {"p", ts.p},
              {"verdict", report.verdict == EntanglementClass::EntangledNPPT ? "entangled_nppt"
                                                                             : "separable_ppt"},
              {"ppt_spectral", report.ppt_spectral},
              {"lambda_min_partial_transpose", report.lambda_min_pt}};
}

Json candidate_to_json(const CandidateResult& result) {
  return Json{{"p", result.p},
              {"p1", result.p1},
              {"p2", result.p2},
              {"alpha", result.alpha},
              {"mixed_branch", result.mixed_branch},
              {"filter1", filter_outcome_to_json(result.filter1)},
              {"filter2", filter_outcome_to_json(result.filter2)},
              {"family", map_to_json(result.family)}};
}

Json additivity_report_to_json(const AdditivityReport& report, const RunConfig& config) {
  return Json{{"lambda_joint", report.lhs},
              {"lambda_left", report.rhs_t},
              {"lambda_right", report.rhs_s},
              {"deviation", report.deviation},
              {"config", config_to_json(config)}};
}

Json two_way_report_to_json(const TwoWayErrorReport& report) {
  return Json{{"error_floor_certified", report.floor_certified},
              {"error_floor_optimistic", report.floor_optimistic},
              {"theta_channel_diamond", norm_interval_to_json(report.theta_t)}};
}

Json twirl_positivity_to_json(const TwirlPositivityReport& report) {
  return Json{{"overlap_value", report.overlap_value},
              {"block_positive_heuristic", report.block_positive_heuristic},
              {"flip_expectation", report.flip_expectation},
              {"omega_expectation", report.omega_expectation},
              {"uu", Json{{"applicable", report.uu_applicable},
                          {"lambda_min", report.uu_lambda_min}}},
              {"uubar", Json{{"applicable", report.uubar_applicable},
                             {"lambda_min", report.uubar_lambda_min}}}};
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace tspm
