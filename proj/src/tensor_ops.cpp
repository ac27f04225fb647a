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

#include "tspm/tensor_ops.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace tspm {

namespace {

// Strides of the row-major product basis: index = sum_k digit_k * stride_k.
std::vector<long long> strides_of(const std::vector<int>& factors) {
  std::vector<long long> s(factors.size());
  long long acc = 1;
  for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = acc;
    acc *= factors[static_cast<std::size_t>(k)];
  }
  return s;
}

void check_indices(const std::set<int>& which, int num_factors) {
  for (int w : which) {
    if (w < 0 || w >= num_factors) throw std::invalid_argument("factor index out of range");
  }
}

}  // namespace

Matrix kron_matrix(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_vector(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

FactoredOperator kron(const FactoredOperator& a, const FactoredOperator& b) {
  std::vector<int> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return FactoredOperator(std::move(factors), kron_matrix(a.data(), b.data()));
}

FactoredOperator partial_transpose(const FactoredOperator& c, const std::set<int>& which) {
  check_indices(which, c.num_factors());
  const auto& factors = c.factors();
  const auto strides = strides_of(factors);
  const int side = c.side();
  const int k = c.num_factors();

  Matrix out(side, side);
  std::vector<int> rd(static_cast<std::size_t>(k)), cd(static_cast<std::size_t>(k));
  for (int r = 0; r < side; ++r) {
    long long rr = r;
    for (int t = 0; t < k; ++t) {
      rd[static_cast<std::size_t>(t)] = static_cast<int>(rr / strides[static_cast<std::size_t>(t)]);
      rr %= strides[static_cast<std::size_t>(t)];
    }
    for (int cidx = 0; cidx < side; ++cidx) {
      long long cc = cidx;
      for (int t = 0; t < k; ++t) {
        cd[static_cast<std::size_t>(t)] = static_cast<int>(cc / strides[static_cast<std::size_t>(t)]);
        cc %= strides[static_cast<std::size_t>(t)];
      }
      long long nr = 0, nc = 0;
      for (int t = 0; t < k; ++t) {
        const bool swap = which.count(t) > 0;
        nr += (swap ? cd : rd)[static_cast<std::size_t>(t)] * strides[static_cast<std::size_t>(t)];
        nc += (swap ? rd : cd)[static_cast<std::size_t>(t)] * strides[static_cast<std::size_t>(t)];
      }
      out(nr, nc) = c.data()(r, cidx);
    }
  }
  return FactoredOperator(factors, std::move(out));
}

FactoredOperator partial_trace(const FactoredOperator& c, const std::set<int>& which) {
  check_indices(which, c.num_factors());
  const auto& factors = c.factors();
  const auto strides = strides_of(factors);
  const int side = c.side();
  const int k = c.num_factors();

  std::vector<int> kept;
  for (int t = 0; t < k; ++t)
    if (which.count(t) == 0) kept.push_back(t);

  std::vector<int> out_factors;
  for (int t : kept) out_factors.push_back(factors[static_cast<std::size_t>(t)]);
  if (out_factors.empty()) out_factors.push_back(1);  // full trace -> 1x1
  const auto out_strides = strides_of(out_factors);
  const long long out_side = factor_product(out_factors);

  Matrix out = Matrix::Zero(out_side, out_side);
  std::vector<int> rd(static_cast<std::size_t>(k)), cd(static_cast<std::size_t>(k));
  for (int r = 0; r < side; ++r) {
    long long rr = r;
    for (int t = 0; t < k; ++t) {
      rd[static_cast<std::size_t>(t)] = static_cast<int>(rr / strides[static_cast<std::size_t>(t)]);
      rr %= strides[static_cast<std::size_t>(t)];
    }
    for (int cidx = 0; cidx < side; ++cidx) {
      long long cc = cidx;
      bool diagonal_on_traced = true;
      for (int t = 0; t < k; ++t) {
        cd[static_cast<std::size_t>(t)] = static_cast<int>(cc / strides[static_cast<std::size_t>(t)]);
        cc %= strides[static_cast<std::size_t>(t)];
      }
      for (int w : which) {
        if (rd[static_cast<std::size_t>(w)] != cd[static_cast<std::size_t>(w)]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      long long nr = 0, nc = 0;
      for (std::size_t t = 0; t < kept.size(); ++t) {
        nr += rd[static_cast<std::size_t>(kept[t])] * out_strides[t];
        nc += cd[static_cast<std::size_t>(kept[t])] * out_strides[t];
      }
      out(nr, nc) += c.data()(r, cidx);
    }
  }
  return FactoredOperator(std::move(out_factors), std::move(out));
}

FactoredOperator permute_factors(const FactoredOperator& c, const std::vector<int>& perm) {
  const int k = c.num_factors();
  if (static_cast<int>(perm.size()) != k) {
    throw std::invalid_argument("permutation length does not match factor count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("malformed permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }

  const auto& factors = c.factors();
  std::vector<int> new_factors(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    new_factors[static_cast<std::size_t>(i)] =
        factors[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];

  const auto old_strides = strides_of(factors);
  const auto new_strides = strides_of(new_factors);
  const int side = c.side();

  // index map: old index -> new index
  std::vector<long long> remap(static_cast<std::size_t>(side));
  std::vector<int> digits(static_cast<std::size_t>(k));
  for (int idx = 0; idx < side; ++idx) {
    long long rest = idx;
    for (int t = 0; t < k; ++t) {
      digits[static_cast<std::size_t>(t)] =
          static_cast<int>(rest / old_strides[static_cast<std::size_t>(t)]);
      rest %= old_strides[static_cast<std::size_t>(t)];
    }
    long long ni = 0;
    for (int t = 0; t < k; ++t)
      ni += digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] *
            new_strides[static_cast<std::size_t>(t)];
    remap[static_cast<std::size_t>(idx)] = ni;
  }

  Matrix out(side, side);
  for (int r = 0; r < side; ++r)
    for (int cidx = 0; cidx < side; ++cidx)
      out(remap[static_cast<std::size_t>(r)], remap[static_cast<std::size_t>(cidx)]) =
          c.data()(r, cidx);
  return FactoredOperator(std::move(new_factors), std::move(out));
}

double trace_norm(const Matrix& a) {
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

double op_norm(const Matrix& a) {
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

HermitianEig eig_hermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_hermitian needs a square matrix");
  const double defect = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tolerance) {
    throw std::invalid_argument("matrix is not Hermitian within tolerance (defect " +
                                std::to_string(defect) + ")");
  }
  const Matrix sym = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const Matrix g = rng.ginibre(d, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    q.col(i) *= (mag > 0.0) ? rii / mag : Complex(1.0, 0.0);
  }
  return q;
}

Matrix haar_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(d, rng);
}

Matrix pseudo_inverse(const Matrix& m, double cutoff) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return Matrix::Zero(m.cols(), m.rows());
  const double threshold = cutoff * sv(0);
  RealVector inv = RealVector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Ket max_entangled_ket(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i) * d + i) = amp;
  return Ket{std::move(v), {d, d}};
}

FactoredOperator max_entangled_projector(int d) {
  const Ket omega = max_entangled_ket(d);
  return FactoredOperator({d, d}, omega.amps * omega.amps.adjoint());
}

FactoredOperator flip_operator(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  Matrix f = Matrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      f(static_cast<Eigen::Index>(i) * d + j, static_cast<Eigen::Index>(j) * d + i) = 1.0;
  return FactoredOperator({d, d}, std::move(f));
}

Matrix ket_to_matrix(const Vector& psi, int rows, int cols) {
  if (psi.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw std::invalid_argument("ket length does not match the requested shape");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = psi(static_cast<Eigen::Index>(i) * cols + j);
  return m;
}

Matrix sqrt_psd(const Matrix& a, double tolerance) {
  const HermitianEig eig = eig_hermitian(a, tolerance);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i)
    roots(i) = eig.eigenvalues(i) > 0.0 ? std::sqrt(eig.eigenvalues(i)) : 0.0;
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix inv_sqrt_psd(const Matrix& a, double cutoff, double tolerance) {
  const HermitianEig eig = eig_hermitian(a, tolerance);
  const double lambda_max = eig.eigenvalues.size() ? eig.eigenvalues(eig.eigenvalues.size() - 1) : 0.0;
  const double threshold = cutoff * std::max(lambda_max, 0.0);
  RealVector inv = RealVector::Zero(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    if (eig.eigenvalues(i) > threshold && eig.eigenvalues(i) > 0.0)
      inv(i) = 1.0 / std::sqrt(eig.eigenvalues(i));
  return eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace tspm
