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

#ifndef TSPM_BLOCKPOS_HPP
#define TSPM_BLOCKPOS_HPP

#include <utility>
#include <vector>

#include "tspm/map_rep.hpp"
#include "tspm/run_config.hpp"
#include "tspm/seesaw.hpp"

namespace tspm {

// The block-positive operator built on a 2x2 corner from a non-orthogonal
// unextendible product set, together with its separable decomposition as
// positive product pairs (a_k, b_k) contributing a_k (x) b_k. Both
// constructions are evaluated and cross-checked entrywise on the way out.
struct UpbOperator {
  FactoredOperator op;                          // factors [d1, d2], op norm 2
  std::vector<std::pair<Matrix, Matrix>> separable;
};

UpbOperator upb_operator(int d1, int d2);

// (pnorm^n + mu^n)^{1/n} - pnorm, evaluated in log space so large n does not
// overflow. Strictly decreasing in n for mu in (0, pnorm).
double nts_epsilon_bound(double mu, double pnorm, int n);

// Map whose Choi matrix is P - eps*1 (stored unscaled; positivity
// classifications are scale-invariant, and trace-preservation predicates do
// not apply to it). eps beyond the sufficient interval is allowed and only
// flagged, since the interval is sufficient, not necessary.
struct WitnessMap {
  MapRep map;
  double eps = 0.0;
  double mu = 0.0;         // minimal product overlap of P, recomputed by see-saw
  double eps_limit = 0.0;  // end of the guaranteed interval for this n
  bool within_guarantee = true;
};

WitnessMap nts_witness_map(int d1, int d2, int n, double eps, const RunConfig& config = {});

// Product-overlap probe of the Choi matrix of m^{(x) n} across the
// (inputs^n : outputs^n) split. A certified negative value refutes
// n-tensor-stable positivity; a non-negative value is heuristic support.
OptReport verify_nts(const MapRep& m, int n, const RunConfig& config = {});

}  // namespace tspm

#endif
