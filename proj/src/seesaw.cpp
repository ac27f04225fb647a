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

#include "tspm/seesaw.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "tspm/parallel.hpp"
#include "tspm/rng.hpp"

namespace tspm {

namespace {

struct RestartResult {
  double value = 0.0;
  Vector psi;
  Vector phi;
  bool converged = false;
};

// <psi (x) phi | C | psi (x) phi> with C viewed as dL x dL blocks of dR x dR.
double product_expectation(const Matrix& c, int dl, int dr, const Vector& psi,
                           const Vector& phi) {
  Complex acc = 0.0;
  for (int i = 0; i < dl; ++i) {
    for (int j = 0; j < dl; ++j) {
      const auto block = c.block(static_cast<Eigen::Index>(i) * dr,
                                 static_cast<Eigen::Index>(j) * dr, dr, dr);
      acc += std::conj(psi(i)) * psi(j) * (phi.adjoint() * block * phi)(0, 0);
    }
  }
  return acc.real();
}

// M_phi = (<psi| (x) 1) C (|psi> (x) 1)
Matrix contract_left(const Matrix& c, int dl, int dr, const Vector& psi) {
  Matrix m = Matrix::Zero(dr, dr);
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dl; ++j)
      m += std::conj(psi(i)) * psi(j) *
           c.block(static_cast<Eigen::Index>(i) * dr, static_cast<Eigen::Index>(j) * dr, dr, dr);
  return m;
}

// M_psi[i][j] = <phi| C_block(i,j) |phi>
Matrix contract_right(const Matrix& c, int dl, int dr, const Vector& phi) {
  Matrix m(dl, dl);
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dl; ++j)
      m(i, j) = (phi.adjoint() *
                 c.block(static_cast<Eigen::Index>(i) * dr, static_cast<Eigen::Index>(j) * dr, dr,
                         dr) *
                 phi)(0, 0);
  return m;
}

Vector min_eigvec(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  return solver.eigenvectors().col(0);
}

RestartResult run_restart(const Matrix& c, int dl, int dr, std::uint64_t seed, int max_iter,
                          double tolerance) {
  Rng rng(seed);
  RestartResult res;
  res.psi = rng.unit_ket(dl);
  res.phi = rng.unit_ket(dr);
  double value = product_expectation(c, dl, dr, res.psi, res.phi);
  for (int it = 0; it < max_iter; ++it) {
    res.phi = min_eigvec(contract_left(c, dl, dr, res.psi));
    const Matrix mpsi = contract_right(c, dl, dr, res.phi);
    Eigen::SelfAdjointEigenSolver<Matrix> solver((mpsi + mpsi.adjoint()) / 2.0);
    res.psi = solver.eigenvectors().col(0);
    const double next = solver.eigenvalues()(0);
    if (std::abs(next - value) <= tolerance * std::max(1.0, std::abs(value))) {
      value = next;
      res.converged = true;
      break;
    }
    value = next;
  }
  res.value = product_expectation(c, dl, dr, res.psi, res.phi);
  return res;
}

}  // namespace

OptReport min_product_overlap(const FactoredOperator& c, int left_factors,
                              const RunConfig& config) {
  config.validate();
  if (!c.is_hermitian()) {
    throw std::invalid_argument("min_product_overlap needs a Hermitian operator");
  }
  if (left_factors < 1 || left_factors >= c.num_factors()) {
    throw std::invalid_argument("split leaves an empty side");
  }
  long long dl = 1, dr = 1;
  for (int i = 0; i < c.num_factors(); ++i) {
    if (i < left_factors)
      dl *= c.factor(i);
    else
      dr *= c.factor(i);
  }

  const int dli = static_cast<int>(dl);
  const int dri = static_cast<int>(dr);
  std::vector<RestartResult> results(static_cast<std::size_t>(config.restarts));
  parallel_for_index(config.restarts, [&](int r) {
    results[static_cast<std::size_t>(r)] =
        run_restart(c.data(), dli, dri, config.seed + static_cast<std::uint64_t>(r),
                    config.max_iter, config.tol);
  });

  int best = 0;
  int converged = 0;
  for (int r = 0; r < config.restarts; ++r) {
    if (results[static_cast<std::size_t>(r)].converged) ++converged;
    if (results[static_cast<std::size_t>(r)].value < results[static_cast<std::size_t>(best)].value)
      best = r;
  }

  const RestartResult& win = results[static_cast<std::size_t>(best)];
  OptReport report;
  report.value = win.value;
  report.witness_left = Ket{win.psi, {}};
  report.witness_right = Ket{win.phi, {}};
  report.restarts_run = config.restarts;
  report.converged_fraction = static_cast<double>(converged) / config.restarts;
  report.iterations_max = config.max_iter;
  report.certified = (win.value < -config.tol) ? Certification::RefutationCertified
                                               : Certification::HeuristicMinimum;
  return report;
}

}  // namespace tspm
