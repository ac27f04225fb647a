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

// Test-only helpers and independent oracles. Everything here stays separate
// from the library code paths it is used to check.

#ifndef TSPM_TESTS_SUPPORT_HPP
#define TSPM_TESTS_SUPPORT_HPP

#include <vector>

#include "tspm/map_rep.hpp"
#include "tspm/rng.hpp"
#include "tspm/tensor_ops.hpp"

namespace tspm::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Element-wise Kronecker product oracle, independent of the library kernel.
inline Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Matrix random_hermitian(int d, Rng& rng) {
  const Matrix g = rng.ginibre(d, d);
  return (g + g.adjoint()) / 2.0;
}

inline FactoredOperator random_hermitian_operator(std::vector<int> factors, Rng& rng) {
  const long long side = factor_product(factors);
  return FactoredOperator(std::move(factors), random_hermitian(static_cast<int>(side), rng));
}

inline Matrix random_density(int d, Rng& rng) {
  const Matrix g = rng.ginibre(d, d);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

// Random channel from a Haar isometry: Kraus blocks of the first din columns
// of a Haar unitary on din * env dimensions.
inline MapRep random_channel(int din, int dout, int env, Rng& rng) {
  const Matrix u = haar_unitary(dout * env, rng);
  std::vector<Matrix> kraus;
  for (int e = 0; e < env; ++e) {
    kraus.push_back(u.block(static_cast<Eigen::Index>(e) * dout, 0, dout, din));
  }
  return from_kraus(kraus, din, dout);
}

// Random CP map (not trace-preserving) from Ginibre Kraus operators.
inline MapRep random_cp(int din, int dout, int count, Rng& rng) {
  std::vector<Matrix> kraus;
  for (int k = 0; k < count; ++k) kraus.push_back(0.5 * rng.ginibre(dout, din));
  return from_kraus(kraus, din, dout);
}

// Random entanglement-breaking map as measure-and-prepare with a normalized
// random POVM and random output states.
inline MapRep random_entanglement_breaking(int din, int dout, int outcomes, Rng& rng) {
  std::vector<Matrix> raw;
  Matrix sum = Matrix::Zero(din, din);
  for (int k = 0; k < outcomes; ++k) {
    const Matrix g = rng.ginibre(din, din);
    raw.push_back(g * g.adjoint());
    sum += raw.back();
  }
  const Matrix corr = inv_sqrt_psd(sum);
  std::vector<Matrix> povm, states;
  for (int k = 0; k < outcomes; ++k) {
    povm.push_back(corr * raw[static_cast<std::size_t>(k)] * corr);
    states.push_back(random_density(dout, rng));
  }
  return measure_prepare(povm, states);
}

// Measure-and-prepare realization of the qubit depolarizing map for
// alpha <= 1/3: measure one of the three Pauli bases and reprepare the
// outcome, mixed with a trash-and-replace branch.
inline MapRep depolarizing_measure_prepare(double alpha) {
  const double branch = 3.0 * alpha;  // weight of the measure-reprepare part
  std::vector<Matrix> povm, states;
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  for (const Matrix& pauli : {x, y, z}) {
    const HermitianEig eig = eig_hermitian(pauli);
    for (int i = 0; i < 2; ++i) {
      const Vector v = eig.eigenvectors.col(i);
      const Matrix projector = v * v.adjoint();
      povm.push_back(branch / 3.0 * projector);
      states.push_back(projector);
    }
  }
  povm.push_back((1.0 - branch) * Matrix::Identity(2, 2));
  states.push_back(Matrix::Identity(2, 2) / 2.0);
  return measure_prepare(povm, states);
}

// Brute-force minimal output eigenvalue over sampled pure inputs. This is a
// guaranteed upper bound on the true minimum, statistically close to it.
inline double brute_force_lambda_min_out(const MapRep& t, int samples, Rng& rng) {
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const Vector psi = rng.unit_ket(t.din());
    const Matrix out = t.apply(psi * psi.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig((out + out.adjoint()) / 2.0);
    best = std::min(best, eig.eigenvalues()(0));
  }
  return best;
}

}  // namespace tspm::testing

#endif
