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

#include "tspm/map_rep.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "tspm/twirl.hpp"

namespace tspm {

namespace {

// Block (i, j) of the Choi matrix viewed as din x din blocks of size dout.
Eigen::Block<const Matrix> choi_block(const MapRep& m, int i, int j) {
  const int dout = m.dout();
  return m.choi().data().block(static_cast<Eigen::Index>(i) * dout,
                               static_cast<Eigen::Index>(j) * dout, dout, dout);
}

}  // namespace

MapRep::MapRep(int din, int dout, FactoredOperator choi)
    : din_(din), dout_(dout), choi_(std::move(choi)) {
  if (din_ < 1 || dout_ < 1) throw std::invalid_argument("map dimensions must be >= 1");
  if (choi_.num_factors() != 2 || choi_.factor(0) != din_ || choi_.factor(1) != dout_) {
    throw std::invalid_argument("Choi factor list must be exactly [din, dout]");
  }
}

MapRep identity_map(int d) { return MapRep(d, d, max_entangled_projector(d)); }

MapRep transpose_map(int d) {
  FactoredOperator f = flip_operator(d);
  return MapRep(d, d, FactoredOperator({d, d}, f.data() / static_cast<double>(d)));
}

MapRep werner_channel(double p, int d) { return MapRep(d, d, werner_state(p, d)); }

MapRep reduction_map(int d) {
  const FactoredOperator omega = max_entangled_projector(d);
  Matrix c = Matrix::Identity(d * d, d * d) / static_cast<double>(d) - omega.data();
  return MapRep(d, d, FactoredOperator({d, d}, std::move(c)));
}

MapRep depolarizing(double alpha, int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const FactoredOperator omega = max_entangled_projector(d);
  Matrix c = (1.0 - alpha) * Matrix::Identity(d * d, d * d) / static_cast<double>(d * d) +
             alpha * omega.data();
  return MapRep(d, d, FactoredOperator({d, d}, std::move(c)));
}

bool depolarizing_in_channel_range(double alpha, int d) {
  return alpha >= -1.0 / (static_cast<double>(d) * d - 1.0) && alpha <= 1.0;
}

MapRep from_choi(const FactoredOperator& op) {
  if (op.num_factors() != 2) {
    throw std::invalid_argument("from_choi needs an operator with exactly two factors");
  }
  return MapRep(op.factor(0), op.factor(1), op);
}

MapRep from_kraus(const std::vector<Matrix>& kraus, int din, int dout) {
  if (kraus.empty()) throw std::invalid_argument("Kraus list must be non-empty");
  Matrix c = Matrix::Zero(static_cast<Eigen::Index>(din) * dout,
                          static_cast<Eigen::Index>(din) * dout);
  for (const Matrix& k : kraus) {
    if (k.rows() != dout || k.cols() != din) {
      throw std::invalid_argument("Kraus operator has wrong shape");
    }
    // (id (x) K) |Omega><Omega| (id (x) K)^dag accumulated blockwise
    for (int i = 0; i < din; ++i) {
      for (int j = 0; j < din; ++j) {
        c.block(static_cast<Eigen::Index>(i) * dout, static_cast<Eigen::Index>(j) * dout, dout,
                dout) += k.col(i) * k.col(j).adjoint() / static_cast<double>(din);
      }
    }
  }
  return MapRep(din, dout, FactoredOperator({din, dout}, std::move(c)));
}

MapRep measure_prepare(const std::vector<Matrix>& povm, const std::vector<Matrix>& states,
                       double povm_tol) {
  if (povm.empty() || povm.size() != states.size()) {
    throw std::invalid_argument("POVM and state lists must be non-empty and equally long");
  }
  const int din = static_cast<int>(povm.front().rows());
  const int dout = static_cast<int>(states.front().rows());
  Matrix sum = Matrix::Zero(din, din);
  for (const Matrix& m : povm) {
    if (m.rows() != din || m.cols() != din) throw std::invalid_argument("POVM shape mismatch");
    const HermitianEig eig = eig_hermitian(m, povm_tol);
    if (eig.eigenvalues(0) < -povm_tol) {
      throw std::invalid_argument("POVM element is not positive");
    }
    sum += m;
  }
  if ((sum - Matrix::Identity(din, din)).cwiseAbs().maxCoeff() > povm_tol) {
    throw std::invalid_argument("POVM does not sum to the identity");
  }
  for (const Matrix& s : states) {
    if (s.rows() != dout || s.cols() != dout) throw std::invalid_argument("state shape mismatch");
  }

  // Choi of rho -> sum_k tr(M_k rho) sigma_k  is  sum_k M_k^T / din (x) sigma_k.
  Matrix c = Matrix::Zero(static_cast<Eigen::Index>(din) * dout,
                          static_cast<Eigen::Index>(din) * dout);
  for (std::size_t k = 0; k < povm.size(); ++k) {
    c += kron_matrix(povm[k].transpose() / static_cast<double>(din), states[k]);
  }
  return MapRep(din, dout, FactoredOperator({din, dout}, std::move(c)));
}

Matrix MapRep::apply(const Matrix& x) const {
  if (x.rows() != din_ || x.cols() != din_) {
    throw std::invalid_argument("input dimension mismatch in apply");
  }
  Matrix out = Matrix::Zero(dout_, dout_);
  for (int i = 0; i < din_; ++i)
    for (int j = 0; j < din_; ++j)
      out += x(i, j) * static_cast<double>(din_) * choi_block(*this, i, j);
  return out;
}

FactoredOperator MapRep::apply(const FactoredOperator& x) const {
  if (factor_product(x.factors()) != din_) {
    throw std::invalid_argument("input dimension mismatch in apply");
  }
  return FactoredOperator({dout_}, apply(x.data()));
}

FactoredOperator apply_first(const MapRep& m, const FactoredOperator& x) {
  if (x.num_factors() != 2 || x.factor(0) != m.din()) {
    throw std::invalid_argument("apply_first needs factors [din, b]");
  }
  const int a = x.factor(0), b = x.factor(1);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(m.dout()) * b,
                            static_cast<Eigen::Index>(m.dout()) * b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      const Matrix block = x.data().block(static_cast<Eigen::Index>(i) * b,
                                          static_cast<Eigen::Index>(j) * b, b, b);
      const Matrix lij = static_cast<double>(m.din()) * choi_block(m, i, j);
      out += kron_matrix(lij, block);
    }
  }
  return FactoredOperator({m.dout(), b}, std::move(out));
}

FactoredOperator apply_second(const MapRep& m, const FactoredOperator& x) {
  if (x.num_factors() != 2 || x.factor(1) != m.din()) {
    throw std::invalid_argument("apply_second needs factors [a, din]");
  }
  const int a = x.factor(0), b = x.factor(1);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(a) * m.dout(),
                            static_cast<Eigen::Index>(a) * m.dout());
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      const Matrix block = x.data().block(static_cast<Eigen::Index>(i) * b,
                                          static_cast<Eigen::Index>(j) * b, b, b);
      out.block(static_cast<Eigen::Index>(i) * m.dout(), static_cast<Eigen::Index>(j) * m.dout(),
                m.dout(), m.dout()) = m.apply(block);
    }
  }
  return FactoredOperator({a, m.dout()}, std::move(out));
}

MapRep adjoint(const MapRep& m) {
  // C_{L*} = (din/dout) * swap(C_L^T)
  FactoredOperator transposed(m.choi().factors(), m.choi().data().transpose());
  FactoredOperator swapped = permute_factors(transposed, {1, 0});
  Matrix scaled = swapped.data() * (static_cast<double>(m.din()) / m.dout());
  return MapRep(m.dout(), m.din(), FactoredOperator({m.dout(), m.din()}, std::move(scaled)));
}

Matrix natural_rep(const MapRep& m) {
  const int din = m.din(), dout = m.dout();
  Matrix n(static_cast<Eigen::Index>(dout) * dout, static_cast<Eigen::Index>(din) * din);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      const Matrix lij = static_cast<double>(din) * choi_block(m, i, j);
      for (int r = 0; r < dout; ++r)
        for (int c = 0; c < dout; ++c)
          n(static_cast<Eigen::Index>(r) * dout + c, static_cast<Eigen::Index>(i) * din + j) =
              lij(r, c);
    }
  }
  return n;
}

MapRep from_natural(const Matrix& n, int din, int dout) {
  if (n.rows() != static_cast<Eigen::Index>(dout) * dout ||
      n.cols() != static_cast<Eigen::Index>(din) * din) {
    throw std::invalid_argument("natural representation has wrong shape");
  }
  Matrix c(static_cast<Eigen::Index>(din) * dout, static_cast<Eigen::Index>(din) * dout);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      for (int r = 0; r < dout; ++r)
        for (int s = 0; s < dout; ++s)
          c(static_cast<Eigen::Index>(i) * dout + r, static_cast<Eigen::Index>(j) * dout + s) =
              n(static_cast<Eigen::Index>(r) * dout + s, static_cast<Eigen::Index>(i) * din + j) /
              static_cast<double>(din);
  return MapRep(din, dout, FactoredOperator({din, dout}, std::move(c)));
}

MapRep compose(const MapRep& l2, const MapRep& l1) {
  if (l1.dout() != l2.din()) throw std::invalid_argument("compose dimension mismatch");
  return from_natural(natural_rep(l2) * natural_rep(l1), l1.din(), l2.dout());
}

MapRep tensor(const MapRep& l1, const MapRep& l2) {
  FactoredOperator joint = kron(l1.choi(), l2.choi());          // [i1, o1, i2, o2]
  FactoredOperator grouped = permute_factors(joint, {0, 2, 1, 3});  // [i1, i2, o1, o2]
  const int din = l1.din() * l2.din();
  const int dout = l1.dout() * l2.dout();
  return MapRep(din, dout, grouped.regrouped({din, dout}));
}

FactoredOperator choi_tensor_power(const MapRep& m, int n) {
  if (n < 1) throw std::invalid_argument("tensor power needs n >= 1");
  FactoredOperator power = m.choi();
  for (int k = 1; k < n; ++k) power = kron(power, m.choi());
  // factors are [i1, o1, ..., in, on]; gather inputs first, then outputs
  std::vector<int> perm;
  for (int k = 0; k < n; ++k) perm.push_back(2 * k);
  for (int k = 0; k < n; ++k) perm.push_back(2 * k + 1);
  FactoredOperator grouped = permute_factors(power, perm);
  long long din_n = 1, dout_n = 1;
  for (int k = 0; k < n; ++k) {
    din_n *= m.din();
    dout_n *= m.dout();
  }
  return grouped.regrouped({static_cast<int>(din_n), static_cast<int>(dout_n)});
}

MapRep right_inverse(const MapRep& m, double rank_tol) {
  const Matrix n = natural_rep(m);
  Eigen::BDCSVD<Matrix> svd(n);
  const auto& sv = svd.singularValues();
  const double threshold = sv.size() ? rank_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  if (rank < n.rows()) {
    throw PreconditionError("map is not surjective: natural representation is row rank deficient");
  }
  return from_natural(pseudo_inverse(n, rank_tol), m.dout(), m.din());
}

MapRep left_inverse(const MapRep& m, double rank_tol) {
  const Matrix n = natural_rep(m);
  Eigen::BDCSVD<Matrix> svd(n);
  const auto& sv = svd.singularValues();
  const double threshold = sv.size() ? rank_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  if (rank < n.cols()) {
    throw PreconditionError("map is not injective: natural representation is column rank deficient");
  }
  return from_natural(pseudo_inverse(n, rank_tol), m.dout(), m.din());
}

MapRep unitalize(const MapRep& m) {
  const Matrix at_identity = m.apply(Matrix::Identity(m.din(), m.din()));
  const HermitianEig eig = eig_hermitian(at_identity);
  if (eig.eigenvalues(0) <= tol::psd) {
    throw PreconditionError("unitalize needs L(1) strictly positive");
  }
  const Matrix k = inv_sqrt_psd(at_identity);
  const Matrix kk = kron_matrix(Matrix::Identity(m.din(), m.din()), k);
  Matrix c = kk * m.choi().data() * kk.adjoint();
  return MapRep(m.din(), m.dout(), FactoredOperator({m.din(), m.dout()}, std::move(c)));
}

Verdict is_cp(const MapRep& m, double tolerance) {
  const HermitianEig eig = eig_hermitian(m.choi());
  return {eig.eigenvalues(0) >= -tolerance, eig.eigenvalues(0)};
}

Verdict is_ccp(const MapRep& m, double tolerance) {
  const FactoredOperator pt = partial_transpose(m.choi(), {1});
  const HermitianEig eig = eig_hermitian(pt);
  return {eig.eigenvalues(0) >= -tolerance, eig.eigenvalues(0)};
}

Verdict is_trace_preserving(const MapRep& m, double tolerance) {
  const FactoredOperator marginal = partial_trace(m.choi(), {1});
  const double deviation =
      (marginal.data() - Matrix::Identity(m.din(), m.din()) / static_cast<double>(m.din()))
          .cwiseAbs()
          .maxCoeff();
  return {deviation <= tolerance, deviation};
}

Verdict is_unital(const MapRep& m, double tolerance) {
  const FactoredOperator marginal = partial_trace(m.choi(), {0});
  const double deviation =
      (marginal.data() - Matrix::Identity(m.dout(), m.dout()) / static_cast<double>(m.din()))
          .cwiseAbs()
          .maxCoeff();
  return {deviation <= tolerance, deviation};
}

Verdict is_hermiticity_preserving(const MapRep& m, double tolerance) {
  const double defect = m.choi().hermiticity_defect();
  return {defect <= tolerance, defect};
}

double d_cp(const MapRep& m) {
  if (!is_hermiticity_preserving(m)) {
    throw std::invalid_argument("d_cp needs a hermiticity-preserving map");
  }
  const HermitianEig eig = eig_hermitian(m.choi());
  double negative = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues(i) < 0.0) negative -= eig.eigenvalues(i);
  return negative;
}

Matrix adjoint_at_identity(const MapRep& m) {
  const FactoredOperator marginal = partial_trace(m.choi(), {1});
  return static_cast<double>(m.din()) * marginal.data().transpose();
}

}  // namespace tspm
