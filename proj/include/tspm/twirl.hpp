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

#ifndef TSPM_TWIRL_HPP
#define TSPM_TWIRL_HPP

#include <cstdint>

#include "tspm/factored_operator.hpp"
#include "tspm/run_config.hpp"
#include "tspm/seesaw.hpp"
#include "tspm/types.hpp"

namespace tspm {

enum class TwirlKind { Werner, Isotropic };

// Werner or isotropic state identified by (dimension, parameter). Werner
// states carry p = tr(rho F) in [-1, 1]; isotropic states p = tr(rho omega)
// in [0, 1].
struct TwirlState {
  TwirlKind kind = TwirlKind::Werner;
  int d = 2;
  double p = 0.0;
};

// Closed-form UU-twirl: projection onto span{1, F}, preserving the trace and
// the flip expectation. Idempotent. Requires two equal factors, d >= 2.
FactoredOperator twirl_uu(const FactoredOperator& c);

// Closed-form U-Ubar-twirl: partial transpose conjugate of the UU-twirl,
// preserving the trace and tr(C omega).
FactoredOperator twirl_uubar(const FactoredOperator& c);

// Monte-Carlo twirl oracle: empirical mean of (U (x) U)- or (U (x) Ubar)-
// conjugations over Haar samples. Samples derive their seeds from fixed-size
// chunks, so the result is byte-identical across thread counts.
FactoredOperator mc_twirl(const FactoredOperator& c, int samples, std::uint64_t seed,
                          bool conjugate_second);

// rho_W^(p) = [(d - p) 1 + (d p - 1) F] / (d (d^2 - 1)), p in [-1, 1].
FactoredOperator werner_state(double p, int d);
// rho_I^(p) = p omega + (1 - p)(1 - omega) / (d^2 - 1), p in [0, 1].
FactoredOperator isotropic_state(double p, int d);

double werner_param(const FactoredOperator& c);     // tr(C F)
double isotropic_param(const FactoredOperator& c);  // tr(C omega)

enum class EntanglementClass { SeparablePPT, EntangledNPPT };

struct ClassifyReport {
  EntanglementClass verdict = EntanglementClass::SeparablePPT;
  bool ppt_spectral = true;       // cross-validation: lambda_min(rho^T2) >= -tol
  double lambda_min_pt = 0.0;
};

// Threshold classification (boundary points count as separable), with the
// PPT check recomputed spectrally as cross-validation.
ClassifyReport classify(const TwirlState& ts, double tolerance = tol::psd);

// Evaluation of the positivity-after-twirl statement: block-positivity is
// probed with the product-overlap see-saw, the trace conditions are exact,
// and the minimal eigenvalue of each twirl is reported. A branch whose
// hypotheses fail is flagged not-applicable rather than an error.
struct TwirlPositivityReport {
  double overlap_value = 0.0;  // heuristic block-positivity probe
  bool block_positive_heuristic = false;
  double flip_expectation = 0.0;
  double omega_expectation = 0.0;
  bool uu_applicable = false;
  bool uubar_applicable = false;
  double uu_lambda_min = 0.0;
  double uubar_lambda_min = 0.0;
};

TwirlPositivityReport twirl_positivity_check(const FactoredOperator& c,
                                             const RunConfig& config = {});

}  // namespace tspm

#endif
