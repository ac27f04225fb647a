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

#ifndef TSPM_TENSOR_OPS_HPP
#define TSPM_TENSOR_OPS_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "tspm/factored_operator.hpp"
#include "tspm/rng.hpp"
#include "tspm/types.hpp"

namespace tspm {

// Kronecker product of (possibly rectangular) raw matrices, row-major basis
// order with the left argument most significant.
Matrix kron_matrix(const Matrix& a, const Matrix& b);
Vector kron_vector(const Vector& a, const Vector& b);

// Kronecker product; the factor list is the concatenation.
FactoredOperator kron(const FactoredOperator& a, const FactoredOperator& b);

// Transposes the selected factors in the fixed product basis. Involution.
FactoredOperator partial_transpose(const FactoredOperator& c, const std::set<int>& which);

// Traces out the selected factors. Tracing all factors returns a 1x1
// operator holding the full trace.
FactoredOperator partial_trace(const FactoredOperator& c, const std::set<int>& which);

// Basis relabeling: new factor slot i receives old factor perm[i]. The
// spectrum is invariant.
FactoredOperator permute_factors(const FactoredOperator& c, const std::vector<int>& perm);

double trace_norm(const Matrix& a);  // sum of singular values
double op_norm(const Matrix& a);     // largest singular value
inline double trace_norm(const FactoredOperator& a) { return trace_norm(a.data()); }
inline double op_norm(const FactoredOperator& a) { return op_norm(a.data()); }

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending. The input
// is symmetrized when its hermiticity defect is within `tolerance` and
// rejected otherwise.
struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns
};
HermitianEig eig_hermitian(const Matrix& a, double tolerance = tol::hermiticity);
inline HermitianEig eig_hermitian(const FactoredOperator& a,
                                  double tolerance = tol::hermiticity) {
  return eig_hermitian(a.data(), tolerance);
}

// Haar-distributed unitary via QR of a complex Ginibre matrix with the phases
// of the R diagonal absorbed into Q.
Matrix haar_unitary(int d, Rng& rng);
Matrix haar_unitary(int d, std::uint64_t seed);

// Moore-Penrose pseudo-inverse; singular values below cutoff * sigma_max are
// treated as zero.
Matrix pseudo_inverse(const Matrix& m, double cutoff = tol::pinv_rank);

// |Omega_d> = sum_i |ii>/sqrt(d) and its projector omega_d (trace 1).
Ket max_entangled_ket(int d);
FactoredOperator max_entangled_projector(int d);

// Flip operator F|ij> = |ji> on factors [d, d].
FactoredOperator flip_operator(int d);

// Reshapes a bipartite ket on factors [rows, cols] into the rows x cols
// matrix M with M(i, j) = psi(i * cols + j).
Matrix ket_to_matrix(const Vector& psi, int rows, int cols);

// Hermitian square root / inverse square root through the spectral
// decomposition; eigenvalues below cutoff * lambda_max are dropped in the
// inverse (generalized inverse square root).
Matrix sqrt_psd(const Matrix& a, double tolerance = tol::hermiticity);
Matrix inv_sqrt_psd(const Matrix& a, double cutoff = tol::pinv_rank,
                    double tolerance = tol::hermiticity);

}  // namespace tspm

#endif
