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

#ifndef TSPM_DISTILL_HPP
#define TSPM_DISTILL_HPP

#include <utility>
#include <vector>

#include "tspm/capacity.hpp"
#include "tspm/map_rep.hpp"
#include "tspm/twirl.hpp"

namespace tspm {

enum class FilterSide { InputSide, OutputSide };

// Outcome of a local filtering + twirl protocol applied to a Choi matrix.
struct FilterOutcome {
  FilterSide side = FilterSide::OutputSide;
  Matrix filter;            // the A (output side) or B (input side) matrix
  TwirlState state;         // resulting Werner/isotropic state parameters
  double raw_overlap = 0.0; // <psi| C^T2 |psi> resp. the reduction quantity
  double trace_before_twirl = 0.0;
  // the normalized state realized as a matrix
  FactoredOperator twirled = FactoredOperator({1}, Matrix::Zero(1, 1));
};

// Filters the Choi matrix of a positive, not completely co-positive map along
// the minimal eigenvector of C^T2 and UU-twirls into an entangled Werner
// state (p < 0). Positivity of m is a caller obligation.
FilterOutcome filter_to_werner(const MapRep& m, FilterSide side, double tolerance = tol::psd);

// lambda_max[(1 (x) P(1))^{-1/2} C (1 (x) P(1))^{-1/2}] with generalized
// inverses; a value above 1/din certifies that the reduction criterion is
// violated on the input side.
double reduction_p(const MapRep& m);

// Filters along a violating eigenvector of the reduction-composed Choi
// matrix and UUbar-twirls into an entangled isotropic state (p > 1/d).
FilterOutcome filter_to_isotropic(const MapRep& m, FilterSide side, double tolerance = tol::psd);

// Fidelity recursion of the two-copy recurrence protocol and its contraction
// factor g_d(p) = (1 - r(p)) / (1 - p), extended continuously to p = 1.
double recurrence_r(double p, int d);
double recurrence_g(double p, int d);
std::vector<double> recurrence_iterate(double p, int d, int levels);

// 2 (1 - p) g_d(p)^{floor(log2(n-1))}, reported as a bound on
// d_CP(m) / ||m||_diamond for an n-tensor-stable positive map violating the
// reduction criterion. Constituents carry d_CP and the diamond interval for
// audit.
BoundReport dcp_bound_recurrence(const MapRep& m, int n, const RunConfig& config = {});

// W_p (x) (theta . W_p) on d^2 -> d^2; Choi is the grouped
// rho_W^(p) (x) (rho_W^(p))^T2.
MapRep one_param_family(double p, int d);

// Filters m on both branches (m and theta . m), lifts the smaller Werner
// parameter by a depolarizing mix and returns the matched family member.
struct CandidateResult {
  double p = 0.0;        // max(p1, p2) < 0
  MapRep family;
  double p1 = 0.0;
  double p2 = 0.0;
  double alpha = 1.0;    // depolarizing weight applied to the smaller branch
  int mixed_branch = 0;  // 1 or 2; 0 when no mixing was needed
  FilterOutcome filter1;
  FilterOutcome filter2;
};

CandidateResult build_candidate(const MapRep& m, int side_dim, const RunConfig& config = {});

// sum_i (A_i (x) B_i) X (A_i (x) B_i)^dag for bipartite X.
FactoredOperator apply_separable(const std::vector<std::pair<Matrix, Matrix>>& kraus_pairs,
                                 const FactoredOperator& x);

// || omega_{d1} - S(C^{(x)(n-1)}) ||_1 for a separable scheme S given as
// product Kraus pairs; the tensor power is input/output grouped.
double scheme_error(const MapRep& m, const std::vector<std::pair<Matrix, Matrix>>& kraus_pairs,
                    int n);

// Evaluates upper||id - r|| * upper||m|| against d_CP(m) and probes the
// positivity hypothesis of the underlying inequality by running the product
// see-saw on the Choi matrix of r (x) m.
struct SchemeBoundReport {
  double bound = 0.0;
  double dcp = 0.0;
  NormInterval id_minus_r;
  NormInterval m_norm;
  bool hypothesis_refuted = false;
  OptReport hypothesis_probe;
};

SchemeBoundReport dcp_scheme_bound(const MapRep& m, const MapRep& r, const RunConfig& config = {});

}  // namespace tspm

#endif
