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

#include "tspm/twirl.hpp"

#include <vector>

#include "tspm/parallel.hpp"
#include "tspm/rng.hpp"
#include "tspm/tensor_ops.hpp"

namespace tspm {

namespace {

int equal_factor_dim(const FactoredOperator& c) {
  if (c.num_factors() != 2 || c.factor(0) != c.factor(1)) {
    throw std::invalid_argument("twirl needs two equal factors");
  }
  return c.factor(0);
}

}  // namespace

FactoredOperator twirl_uu(const FactoredOperator& c) {
  const int d = equal_factor_dim(c);
  if (d < 2) throw std::invalid_argument("twirl needs factor dimension >= 2");
  const double dd = static_cast<double>(d);
  const FactoredOperator f = flip_operator(d);
  const Complex tr = c.trace();
  const Complex trf = (c.data() * f.data()).trace();
  const Complex a = tr / (dd * dd - 1.0) - trf / (dd * (dd * dd - 1.0));
  const Complex b = tr / (dd * (dd * dd - 1.0)) - trf / (dd * dd - 1.0);
  Matrix out = a * Matrix::Identity(c.side(), c.side()) - b * f.data();
  return FactoredOperator(c.factors(), std::move(out));
}

FactoredOperator twirl_uubar(const FactoredOperator& c) {
  equal_factor_dim(c);
  const FactoredOperator pt = partial_transpose(c, {1});
  return partial_transpose(twirl_uu(pt), {1});
}

FactoredOperator mc_twirl(const FactoredOperator& c, int samples, std::uint64_t seed,
                          bool conjugate_second) {
  const int d = equal_factor_dim(c);
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  constexpr int kChunk = 256;  // fixed chunk boundaries keep the sum order deterministic
  const int chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Matrix> partial(static_cast<std::size_t>(chunks));

  parallel_for_index(chunks, [&](int chunk) {
    const int begin = chunk * kChunk;
    const int end = std::min(samples, begin + kChunk);
    Matrix acc = Matrix::Zero(c.side(), c.side());
    for (int s = begin; s < end; ++s) {
      Rng rng(seed + static_cast<std::uint64_t>(s));
      const Matrix u = haar_unitary(d, rng);
      const Matrix w = conjugate_second ? kron_matrix(u, u.conjugate()) : kron_matrix(u, u);
      acc += w * c.data() * w.adjoint();
    }
    partial[static_cast<std::size_t>(chunk)] = std::move(acc);
  });

  Matrix sum = Matrix::Zero(c.side(), c.side());
  for (const Matrix& m : partial) sum += m;
  return FactoredOperator(c.factors(), sum / static_cast<double>(samples));
}

FactoredOperator werner_state(double p, int d) {
  if (d < 2) throw std::invalid_argument("Werner states need d >= 2");
  if (p < -1.0 || p > 1.0) throw std::invalid_argument("Werner parameter must lie in [-1, 1]");
  const double dd = static_cast<double>(d);
  const FactoredOperator f = flip_operator(d);
  Matrix rho = ((dd - p) * Matrix::Identity(d * d, d * d) + (dd * p - 1.0) * f.data()) /
               (dd * (dd * dd - 1.0));
  return FactoredOperator({d, d}, std::move(rho));
}

FactoredOperator isotropic_state(double p, int d) {
  if (d < 2) throw std::invalid_argument("isotropic states need d >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("isotropic parameter must lie in [0, 1]");
  const double dd = static_cast<double>(d);
  const FactoredOperator omega = max_entangled_projector(d);
  Matrix rho = p * omega.data() +
               (1.0 - p) * (Matrix::Identity(d * d, d * d) - omega.data()) / (dd * dd - 1.0);
  return FactoredOperator({d, d}, std::move(rho));
}

double werner_param(const FactoredOperator& c) {
  const int d = equal_factor_dim(c);
  return (c.data() * flip_operator(d).data()).trace().real();
}

double isotropic_param(const FactoredOperator& c) {
  const int d = equal_factor_dim(c);
  return (c.data() * max_entangled_projector(d).data()).trace().real();
}

ClassifyReport classify(const TwirlState& ts, double tolerance) {
  FactoredOperator rho = ts.kind == TwirlKind::Werner ? werner_state(ts.p, ts.d)
                                                      : isotropic_state(ts.p, ts.d);
  ClassifyReport report;
  const bool separable =
      ts.kind == TwirlKind::Werner ? (ts.p >= 0.0) : (ts.p <= 1.0 / static_cast<double>(ts.d));
  report.verdict = separable ? EntanglementClass::SeparablePPT : EntanglementClass::EntangledNPPT;

  const FactoredOperator pt = partial_transpose(rho, {1});
  const HermitianEig eig = eig_hermitian(pt);
  report.lambda_min_pt = eig.eigenvalues(0);
  report.ppt_spectral = report.lambda_min_pt >= -tolerance;
  return report;
}

TwirlPositivityReport twirl_positivity_check(const FactoredOperator& c,
                                             const RunConfig& config) {
  equal_factor_dim(c);
  if (!c.is_hermitian()) {
    throw std::invalid_argument("twirl_positivity_check needs a Hermitian operator");
  }
  TwirlPositivityReport report;
  const OptReport probe = min_product_overlap(c, 1, config);
  report.overlap_value = probe.value;
  report.block_positive_heuristic = probe.value >= -config.tol;
  report.flip_expectation = werner_param(c);
  report.omega_expectation = isotropic_param(c);
  report.uu_applicable = report.block_positive_heuristic && report.flip_expectation <= 0.0;
  report.uubar_applicable = report.block_positive_heuristic && report.omega_expectation >= 0.0;
  report.uu_lambda_min = eig_hermitian(twirl_uu(c)).eigenvalues(0);
  report.uubar_lambda_min = eig_hermitian(twirl_uubar(c)).eigenvalues(0);
  return report;
}

}  // namespace tspm
