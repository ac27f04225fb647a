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

#ifndef TSPM_CAPACITY_HPP
#define TSPM_CAPACITY_HPP

#include <map>
#include <string>

#include "tspm/map_rep.hpp"
#include "tspm/run_config.hpp"
#include "tspm/seesaw.hpp"

namespace tspm {

enum class UpperMethod { CPClosedForm, CPDecomposition, Exact };

// Certified two-sided enclosure of a diamond norm. The lower end is achieved
// by the stored witness pair; the upper end comes from the CP closed form or
// from the Choi eigensign decomposition.
struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  Matrix rho_witness;    // input-side density matrix achieving `lower`
  Matrix sigma_witness;
  UpperMethod method_upper = UpperMethod::CPClosedForm;

  static NormInterval exact(double v) { return {v, v, {}, {}, UpperMethod::Exact}; }
};

// lower: best see-saw value of ||(sqrt(rho) (x) 1) J (sqrt(sigma) (x) 1)||_1
// over seeded restarts with J the unnormalized Choi matrix (any feasible pair
// certifies). upper: the CP closed form when the Choi matrix is PSD (then the
// ends are equal by construction), else the sum of the closed forms of the
// two eigensign parts.
NormInterval diamond_interval(const MapRep& m, const RunConfig& config = {});

enum class BoundFormula {
  Transposition,
  CapacityGeneral,
  CapacityLeft,
  StrongConverseRate,
  RecurrenceDcp,
  SchemeDcp,
};

// An evaluated capacity/strong-converse bound together with the certified
// interval ends that produced it. Recomputing bound_value from the stored
// constituents reproduces it exactly.
struct BoundReport {
  BoundFormula formula_id = BoundFormula::Transposition;
  double bound_value = 0.0;  // bits unless noted otherwise per formula
  std::map<std::string, NormInterval> constituents;
  bool conservative = true;  // interval ends chosen to keep the bound valid
  bool vacuous = false;      // denominator gave no information (bound = +inf)
  std::string hypothesis;    // unverifiable hypothesis the bound relies on, if any
};

// log2 of the upper end of ||theta_{d2} . T||_diamond for a channel T.
BoundReport transposition_bound(const MapRep& t, const RunConfig& config = {});

// Bound from a unital, surjective, hermiticity-preserving map p (assumed
// tensor-stable positive; that hypothesis is recorded, it cannot be
// certified): log2(upper ||p^-1 . t|| * ||p*(1)||_inf) * log2(d2) /
// log2(lower ||p*||).
BoundReport capacity_bound_general(const MapRep& t, const MapRep& p,
                                   const RunConfig& config = {});

// Left-inverse variant for trace-preserving, injective p sharing the input
// dimension with t.
BoundReport capacity_bound_left(const MapRep& t, const MapRep& p, const RunConfig& config = {});

// Error floor of any (N, m)-scheme for two-way assisted quantum
// communication: 1 - ||theta . t||^m / N. The floor computed from the upper
// interval end is the certified one; the lower end gives the optimistic
// reading, and both are reported.
struct TwoWayErrorReport {
  double floor_certified = 0.0;   // from the upper interval end
  double floor_optimistic = 0.0;  // from the lower interval end
  NormInterval theta_t;
};

TwoWayErrorReport two_way_error_report(const MapRep& t, int m, double n_dim,
                                       const RunConfig& config = {});
double two_way_error_bound(const MapRep& t, int m, double n_dim, const RunConfig& config = {});

// Error floor at block length m for rate bits per use: N = 2^(rate * m).
double strong_converse_q2(const MapRep& t, double rate, int m, const RunConfig& config = {});

// Strong-converse rate log2(upper ||p^-1 . t|| * ||p*(1)||) * log2(d2) /
// log2(||(p* (x) id)(omega)||_1); the denominator norm is computed exactly.
BoundReport strong_converse_rate_ts(const MapRep& t, const MapRep& p,
                                    const RunConfig& config = {});

// Error floor 1 - d2^{-2n} - [(||p*(1)|| * upper||p^-1 . t||)^m + 2] /
// ||(p* (x) id)(omega)||_1^n, clamped to [0, 1].
double sc_error_floor(const MapRep& t, const MapRep& p, int n, int m,
                      const RunConfig& config = {});

// Minimal output eigenvalue of a CP map by alternating eigenvector descent
// over pure inputs. The value is an achieved upper bound on the true minimum
// (heuristic as the minimum itself).
OptReport lambda_min_out(const MapRep& t, const RunConfig& config = {});

// Multiplicativity probe for an entanglement-breaking factor.
struct AdditivityReport {
  double lhs = 0.0;    // lambda_min_out(t (x) s)
  double rhs_t = 0.0;
  double rhs_s = 0.0;
  double deviation = 0.0;
  OptReport joint, left, right;
};

AdditivityReport check_additivity_lmin(const MapRep& t_eb, const MapRep& s_cp,
                                       const RunConfig& config = {});

enum class ExtremeSign { Max, Min };

// Extremizes tr[S(rho)^p] over density matrices: projected gradient on a
// Cholesky-style parametrization rho = G G^dag / tr(G G^dag), plus a
// pure-state sweep for the directions whose optimum sits at pure states
// (convex maxima / concave minima). Divergent negative-power values are
// reported as +inf via the diverged flag, not thrown.
OptReport output_p_extreme(const MapRep& s, double p_exp, ExtremeSign sign,
                           const RunConfig& config = {});

}  // namespace tspm

#endif
