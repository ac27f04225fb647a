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

#ifndef TSPM_MAP_REP_HPP
#define TSPM_MAP_REP_HPP

#include <utility>
#include <vector>

#include "tspm/factored_operator.hpp"
#include "tspm/tensor_ops.hpp"
#include "tspm/types.hpp"

namespace tspm {

// Linear map between matrix algebras, stored as input dimension, output
// dimension and the normalized Choi matrix C = (id (x) L)(omega_din) with
// factors [din, dout]. Channels have trace-1 Choi under this convention.
class MapRep {
 public:
  MapRep(int din, int dout, FactoredOperator choi);

  int din() const { return din_; }
  int dout() const { return dout_; }
  const FactoredOperator& choi() const { return choi_; }

  // L(X) = din * tr_in[(X^T (x) 1) C]
  Matrix apply(const Matrix& x) const;
  FactoredOperator apply(const FactoredOperator& x) const;

 private:
  int din_;
  int dout_;
  FactoredOperator choi_;
};

// ---- constructors ----------------------------------------------------------

MapRep identity_map(int d);
MapRep transpose_map(int d);

// X -> [(d - p) tr(X) 1 - (1 - d p) X^T] / (d^2 - 1); Choi is the Werner
// state with flip expectation p. p in [-1, 1].
MapRep werner_channel(double p, int d);

// X -> tr(X) 1 - X
MapRep reduction_map(int d);

// X -> (1 - alpha) tr(X) 1/d + alpha X. The full channel range is
// alpha in [-1/(d^2-1), 1]; values outside produce a non-CP map (check
// depolarizing_in_channel_range) rather than an error.
MapRep depolarizing(double alpha, int d);
bool depolarizing_in_channel_range(double alpha, int d);

MapRep from_choi(const FactoredOperator& op);
MapRep from_kraus(const std::vector<Matrix>& kraus, int din, int dout);

// rho -> sum_k tr(M_k rho) sigma_k; entanglement breaking by construction.
// POVM elements must be positive and sum to the identity within `povm_tol`.
MapRep measure_prepare(const std::vector<Matrix>& povm, const std::vector<Matrix>& states,
                       double povm_tol = tol::povm);

// ---- action and calculus ---------------------------------------------------

// (L (x) id)(X) and (id (x) L)(X) for bipartite X with factors [a, b].
FactoredOperator apply_first(const MapRep& m, const FactoredOperator& x);
FactoredOperator apply_second(const MapRep& m, const FactoredOperator& x);

// Hilbert-Schmidt adjoint: tr(A L(B)) = tr(L*(A) B).
MapRep adjoint(const MapRep& m);

// l2 after l1.
MapRep compose(const MapRep& l2, const MapRep& l1);

// (l1 (x) l2) with inputs and outputs grouped.
MapRep tensor(const MapRep& l1, const MapRep& l2);

// Choi matrix of L^{(x) n} with factors [din^n, dout^n] (all inputs grouped
// before all outputs).
FactoredOperator choi_tensor_power(const MapRep& m, int n);

// Matrix of X -> L(X) on row-major vectorization, shape dout^2 x din^2.
Matrix natural_rep(const MapRep& m);
MapRep from_natural(const Matrix& n, int din, int dout);

// Moore-Penrose right-inverse (requires full row rank: surjectivity) and
// left-inverse (full column rank).
MapRep right_inverse(const MapRep& m, double rank_tol = tol::pinv_rank);
MapRep left_inverse(const MapRep& m, double rank_tol = tol::pinv_rank);

// X -> R(1)^{-1/2} R(X) R(1)^{-1/2}; requires R(1) strictly positive.
MapRep unitalize(const MapRep& m);

// ---- predicates -------------------------------------------------------------

// Structural predicate outcome carrying the scalar witness that decided it
// (minimal eigenvalue or maximal deviation), so near-threshold cases stay
// auditable.
struct Verdict {
  bool ok = false;
  double witness = 0.0;
  explicit operator bool() const { return ok; }
};

Verdict is_cp(const MapRep& m, double tolerance = tol::psd);
Verdict is_ccp(const MapRep& m, double tolerance = tol::psd);
Verdict is_trace_preserving(const MapRep& m, double tolerance = tol::psd);
Verdict is_unital(const MapRep& m, double tolerance = tol::psd);
Verdict is_hermiticity_preserving(const MapRep& m, double tolerance = tol::hermiticity);

// (||C||_1 - tr C) / 2: absolute sum of the negative Choi eigenvalues; zero
// exactly when the map is completely positive.
double d_cp(const MapRep& m);

// L*(1_dout) = din * (tr_out C)^T; the CP diamond-norm closed form takes its
// operator norm.
Matrix adjoint_at_identity(const MapRep& m);

}  // namespace tspm

#endif
