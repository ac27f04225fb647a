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

#ifndef TSPM_SEESAW_HPP
#define TSPM_SEESAW_HPP

#include <cstdint>

#include "tspm/factored_operator.hpp"
#include "tspm/run_config.hpp"
#include "tspm/types.hpp"

namespace tspm {

enum class Certification { RefutationCertified, HeuristicMinimum };

// Result of a see-saw/restart optimization. `value` always equals the stated
// objective re-evaluated at the stored witnesses.
struct OptReport {
  double value = 0.0;
  Ket witness_left;
  Ket witness_right;
  int restarts_run = 0;
  double converged_fraction = 0.0;
  int iterations_max = 0;  // configured iteration cap
  Certification certified = Certification::HeuristicMinimum;

  // Only populated by optimizers whose natural witness is a density matrix
  // (output_p_extreme); empty otherwise.
  Matrix witness_state;
  bool diverged = false;
};

// Minimal expectation of c over normalized product vectors across the split
// (first `left_factors` factors : remaining factors). Alternating minimal-
// eigenvector updates from seeded Haar starts; every step weakly decreases
// the value. A certified negative value refutes block-positivity; a
// non-negative result is a heuristic minimum only.
//
// Restarts are independent (seed + index) and may run in parallel; the
// reduction takes the smallest value with the lowest restart index on ties.
OptReport min_product_overlap(const FactoredOperator& c, int left_factors,
                              const RunConfig& config = {});

}  // namespace tspm

#endif
