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

#include "tspm/blockpos.hpp"

#include <cmath>

namespace tspm {

UpbOperator upb_operator(int d1, int d2) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("upb_operator needs d1, d2 >= 2");
  const Eigen::Index side = static_cast<Eigen::Index>(d1) * d2;
  const auto basis = [&](int i, int j) {
    Vector v = Vector::Zero(side);
    v(static_cast<Eigen::Index>(i) * d2 + j) = 1.0;
    return v;
  };

  Matrix p = Matrix::Zero(side, side);
  const Vector bell = basis(0, 0) + basis(1, 1);
  p += bell * bell.adjoint();
  p += basis(0, 1) * basis(0, 1).adjoint();
  p += basis(1, 0) * basis(1, 0).adjoint();
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      if (i > 1 || j > 1) p += basis(i, j) * basis(i, j).adjoint();

  // Separable form: three unnormalized vectors |0> + w^k |1> on each side
  // (conjugate phases on the right) plus the diagonal rest.
  std::vector<std::pair<Matrix, Matrix>> separable;
  Matrix check = Matrix::Zero(side, side);
  for (int k = 1; k <= 3; ++k) {
    const Complex phase = std::polar(1.0, 2.0 * M_PI * k / 3.0);
    Vector xi = Vector::Zero(d1);
    xi(0) = 1.0;
    xi(1) = phase;
    Vector xibar = Vector::Zero(d2);
    xibar(0) = 1.0;
    xibar(1) = std::conj(phase);
    Matrix a = (xi * xi.adjoint()) / 3.0;
    Matrix b = xibar * xibar.adjoint();
    check += kron_matrix(a, b);
    separable.emplace_back(std::move(a), std::move(b));
  }
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d2; ++j) {
      if (i <= 1 && j <= 1) continue;
      Matrix a = Matrix::Zero(d1, d1);
      a(i, i) = 1.0;
      Matrix b = Matrix::Zero(d2, d2);
      b(j, j) = 1.0;
      check += kron_matrix(a, b);
      separable.emplace_back(std::move(a), std::move(b));
    }
  }

  if ((p - check).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::runtime_error("upb_operator: direct and separable constructions disagree");
  }
  return UpbOperator{FactoredOperator({d1, d2}, std::move(p)), std::move(separable)};
}

double nts_epsilon_bound(double mu, double pnorm, int n) {
  if (mu < 0.0 || pnorm <= 0.0 || n < 1) {
    throw std::invalid_argument("nts_epsilon_bound needs mu >= 0, pnorm > 0, n >= 1");
  }
  if (mu == 0.0) return 0.0;
  // (pnorm^n + mu^n)^{1/n} - pnorm = pnorm * ((1 + (mu/pnorm)^n)^{1/n} - 1)
  const double ratio_log = static_cast<double>(n) * std::log(mu / pnorm);
  const double inner = std::log1p(std::exp(ratio_log)) / static_cast<double>(n);
  return pnorm * std::expm1(inner);
}

WitnessMap nts_witness_map(int d1, int d2, int n, double eps, const RunConfig& config) {
  if (eps < 0.0) throw std::invalid_argument("eps must be non-negative");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const UpbOperator upb = upb_operator(d1, d2);
  const OptReport mu_report = min_product_overlap(upb.op, 1, config);
  const double mu = std::max(mu_report.value, 0.0);
  const double limit = nts_epsilon_bound(mu, op_norm(upb.op), n);
  Matrix c = upb.op.data() - eps * Matrix::Identity(upb.op.side(), upb.op.side());
  return WitnessMap{MapRep(d1, d2, FactoredOperator({d1, d2}, std::move(c))), eps, mu, limit,
                    eps <= limit};
}

OptReport verify_nts(const MapRep& m, int n, const RunConfig& config) {
  if (n < 1) throw std::invalid_argument("verify_nts needs n >= 1");
  double side = 1.0;
  for (int k = 0; k < n; ++k) side *= static_cast<double>(m.din()) * m.dout();
  if (side > static_cast<double>(config.size_cap)) {
    throw std::invalid_argument("tensor power exceeds the configured size cap");
  }
  const FactoredOperator power = choi_tensor_power(m, n);
  return min_product_overlap(power, 1, config);
}

}  // namespace tspm
