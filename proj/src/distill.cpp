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

#include "tspm/distill.hpp"

#include <cmath>

#include "tspm/blockpos.hpp"

namespace tspm {

FilterOutcome filter_to_werner(const MapRep& m, FilterSide side, double tolerance) {
  const int d1 = m.din(), d2 = m.dout();
  const FactoredOperator pt = partial_transpose(m.choi(), {1});
  const HermitianEig eig = eig_hermitian(pt);
  if (eig.eigenvalues(0) >= -tolerance) {
    throw PreconditionError(
        "filter_to_werner: map is completely co-positive (no negative eigenvector of C^T2)");
  }
  const Vector psi = eig.eigenvectors.col(0);
  const double raw = eig.eigenvalues(0);

  FilterOutcome out;
  out.side = side;
  out.raw_overlap = raw;
  const Matrix id1 = Matrix::Identity(d1, d1);
  const Matrix id2 = Matrix::Identity(d2, d2);

  Matrix filtered;
  int d = 0;
  if (side == FilterSide::OutputSide) {
    // psi = (A (x) 1)|Omega_{d2}> with A = sqrt(d2) mat(psi)
    out.filter = std::sqrt(static_cast<double>(d2)) * ket_to_matrix(psi, d1, d2);
    const Matrix left = kron_matrix(out.filter.adjoint(), id2);
    const Matrix right = kron_matrix(out.filter, id2);
    filtered = left * m.choi().data() * right;
    d = d2;
  } else {
    // psi = (1 (x) B)|Omega_{d1}> with B = sqrt(d1) mat(psi)^T
    out.filter = std::sqrt(static_cast<double>(d1)) * ket_to_matrix(psi, d1, d2).transpose();
    const Matrix left = kron_matrix(id1, out.filter.transpose());
    const Matrix right = kron_matrix(id1, out.filter.conjugate());
    filtered = left * m.choi().data() * right;
    d = d1;
  }

  const FactoredOperator c_prime({d, d}, filtered);
  const double trace = c_prime.trace().real();
  out.trace_before_twirl = trace;
  const double flip = werner_param(c_prime);
  // proof identity: tr(C' F_d) = d <psi| C^T2 |psi>
  if (std::abs(flip - d * raw) > 1e-8 * std::max(1.0, std::abs(flip))) {
    throw std::runtime_error("filter_to_werner: flip-expectation identity violated");
  }
  if (trace <= tolerance) {
    throw PreconditionError("filter_to_werner: degenerate filter (vanishing trace)");
  }

  FactoredOperator rho({d, d}, twirl_uu(c_prime).data() / trace);
  out.twirled = rho;
  out.state = TwirlState{TwirlKind::Werner, d, flip / trace};
  return out;
}

double reduction_p(const MapRep& m) {
  const Matrix at_identity = m.apply(Matrix::Identity(m.din(), m.din()));
  if (at_identity.cwiseAbs().maxCoeff() <= 0.0) {
    throw PreconditionError("reduction_p: P(1) vanishes");
  }
  const Matrix k = kron_matrix(Matrix::Identity(m.din(), m.din()),
                               inv_sqrt_psd((at_identity + at_identity.adjoint()) / 2.0));
  const Matrix scaled = k * m.choi().data() * k;
  const HermitianEig eig = eig_hermitian(scaled, 1e-8);
  return eig.eigenvalues(eig.eigenvalues.size() - 1);
}

FilterOutcome filter_to_isotropic(const MapRep& m, FilterSide side, double tolerance) {
  const int d1 = m.din(), d2 = m.dout();
  const Matrix id1 = Matrix::Identity(d1, d1);
  const Matrix id2 = Matrix::Identity(d2, d2);

  Matrix violation_choi;
  if (side == FilterSide::OutputSide) {
    // Choi of Gamma_{d2} . m
    const Matrix p_adj_id = adjoint_at_identity(m);
    violation_choi = kron_matrix(p_adj_id.transpose() / static_cast<double>(d1), id2) -
                     m.choi().data();
  } else {
    // Choi of m . Gamma_{d1}
    const Matrix at_identity = m.apply(id1);
    violation_choi =
        kron_matrix(id1 / static_cast<double>(d1), at_identity) - m.choi().data();
  }
  const HermitianEig eig = eig_hermitian(violation_choi);
  if (eig.eigenvalues(0) >= -tolerance) {
    throw PreconditionError(
        "filter_to_isotropic: reduction criterion not violated on the requested side");
  }
  const Vector psi = eig.eigenvectors.col(0);

  FilterOutcome out;
  out.side = side;
  out.raw_overlap = eig.eigenvalues(0);

  Matrix filtered;
  int d = 0;
  if (side == FilterSide::OutputSide) {
    out.filter = std::sqrt(static_cast<double>(d2)) * ket_to_matrix(psi, d1, d2);
    filtered = kron_matrix(out.filter.adjoint(), id2) * m.choi().data() *
               kron_matrix(out.filter, id2);
    d = d2;
  } else {
    out.filter = std::sqrt(static_cast<double>(d1)) * ket_to_matrix(psi, d1, d2).transpose();
    filtered = kron_matrix(id1, out.filter.adjoint()) * m.choi().data() *
               kron_matrix(id1, out.filter);
    d = d1;
  }

  const FactoredOperator c_prime({d, d}, filtered);
  const double trace = c_prime.trace().real();
  out.trace_before_twirl = trace;
  if (trace <= tolerance) {
    throw PreconditionError("filter_to_isotropic: degenerate filter (vanishing trace)");
  }
  const double p = isotropic_param(c_prime) / trace;

  FactoredOperator rho({d, d}, twirl_uubar(c_prime).data() / trace);
  out.twirled = rho;
  out.state = TwirlState{TwirlKind::Isotropic, d, p};
  return out;
}

double recurrence_r(double p, int d) {
  if (d < 2) throw std::invalid_argument("recurrence needs d >= 2");
  const double dd = static_cast<double>(d);
  const double numerator = 1.0 + p * (p * dd * (dd * dd + dd - 1.0) - 2.0);
  const double denominator = p * p * dd * dd * dd - 2.0 * p * dd + dd * dd + dd - 1.0;
  if (std::abs(denominator) < 1e-14) {
    throw std::domain_error("recurrence_r: denominator vanishes");
  }
  return numerator / denominator;
}

double recurrence_g(double p, int d) {
  if (d < 2) throw std::invalid_argument("recurrence needs d >= 2");
  const double dd = static_cast<double>(d);
  // (1 - r(p)) / (1 - p) with the common (1 - p) factor cancelled, so the
  // expression extends continuously to p = 1 (value 2/(d+1)).
  const double denominator = p * p * dd * dd * dd - 2.0 * p * dd + dd * dd + dd - 1.0;
  if (std::abs(denominator) < 1e-14) {
    throw std::domain_error("recurrence_g: denominator vanishes");
  }
  return (dd - 1.0) * (dd * p + dd + 2.0) / denominator;
}

std::vector<double> recurrence_iterate(double p, int d, int levels) {
  if (levels < 0) throw std::invalid_argument("levels must be >= 0");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(levels) + 1);
  values.push_back(p);
  double cur = p;
  for (int k = 0; k < levels; ++k) {
    cur = recurrence_r(cur, d);
    values.push_back(cur);
  }
  return values;
}

BoundReport dcp_bound_recurrence(const MapRep& m, int n, const RunConfig& config) {
  if (n < 2) throw std::invalid_argument("dcp_bound_recurrence needs n >= 2");
  const double p = reduction_p(m);
  const double inv_d = 1.0 / static_cast<double>(m.din());
  if (!(p > inv_d)) {
    throw PreconditionError("dcp_bound_recurrence: reduction criterion not violated (p <= 1/din)");
  }
  const double p_clamped = std::min(p, 1.0);
  const double g = recurrence_g(p_clamped, m.din());
  const int levels = static_cast<int>(std::floor(std::log2(static_cast<double>(n - 1))));
  const double bound = 2.0 * (1.0 - p_clamped) * std::pow(g, levels);

  BoundReport report;
  report.formula_id = BoundFormula::RecurrenceDcp;
  report.bound_value = bound;  // bound on d_CP(m) / ||m||_diamond, dimensionless
  report.constituents["reduction_p"] = NormInterval::exact(p);
  report.constituents["contraction_g"] = NormInterval::exact(g);
  report.constituents["d_cp"] = NormInterval::exact(d_cp(m));
  report.constituents["map_diamond"] = diamond_interval(m, config);
  report.hypothesis = "n-tensor-stable positivity of the input map (not certifiable)";
  return report;
}

MapRep one_param_family(double p, int d) {
  const MapRep wp = werner_channel(p, d);
  return tensor(wp, compose(transpose_map(d), wp));
}

CandidateResult build_candidate(const MapRep& m, int side_dim, const RunConfig& config) {
  (void)config;
  FilterSide side;
  if (side_dim == m.dout())
    side = FilterSide::OutputSide;
  else if (side_dim == m.din())
    side = FilterSide::InputSide;
  else
    throw std::invalid_argument("side_dim must equal din or dout of the map");

  CandidateResult result{0.0, identity_map(1), 0.0, 0.0, 1.0, 0, {}, {}};
  result.filter1 = filter_to_werner(m, side);
  result.filter2 = filter_to_werner(compose(transpose_map(m.dout()), m), side);
  result.p1 = result.filter1.state.p;
  result.p2 = result.filter2.state.p;
  result.p = std::max(result.p1, result.p2);

  const double p_small = std::min(result.p1, result.p2);
  const double inv_d = 1.0 / static_cast<double>(side_dim);
  if (result.p1 != result.p2) {
    result.alpha = (result.p - inv_d) / (p_small - inv_d);
    result.mixed_branch = result.p1 < result.p2 ? 1 : 2;
  }
  result.family = one_param_family(result.p, side_dim);
  return result;
}

FactoredOperator apply_separable(const std::vector<std::pair<Matrix, Matrix>>& kraus_pairs,
                                 const FactoredOperator& x) {
  if (x.num_factors() != 2) {
    throw std::invalid_argument("apply_separable needs a bipartite operator");
  }
  if (kraus_pairs.empty()) throw std::invalid_argument("empty Kraus pair list");
  const int fl = x.factor(0), fr = x.factor(1);
  const Eigen::Index rows_a = kraus_pairs.front().first.rows();
  const Eigen::Index rows_b = kraus_pairs.front().second.rows();

  Matrix out = Matrix::Zero(rows_a * rows_b, rows_a * rows_b);
  for (const auto& [a, b] : kraus_pairs) {
    if (a.cols() != fl || b.cols() != fr || a.rows() != rows_a || b.rows() != rows_b) {
      throw std::invalid_argument("Kraus pair dimensions do not match the bipartite split");
    }
    const Matrix k = kron_matrix(a, b);
    out += k * x.data() * k.adjoint();
  }
  return FactoredOperator({static_cast<int>(rows_a), static_cast<int>(rows_b)}, std::move(out));
}

double scheme_error(const MapRep& m, const std::vector<std::pair<Matrix, Matrix>>& kraus_pairs,
                    int n) {
  if (n < 2) throw std::invalid_argument("scheme_error needs n >= 2");
  const FactoredOperator power = choi_tensor_power(m, n - 1);
  const FactoredOperator processed = apply_separable(kraus_pairs, power);
  if (processed.factor(0) != m.din() || processed.factor(1) != m.din()) {
    throw std::invalid_argument("separable scheme must target din x din");
  }
  const FactoredOperator omega = max_entangled_projector(m.din());
  return trace_norm(omega.data() - processed.data());
}

SchemeBoundReport dcp_scheme_bound(const MapRep& m, const MapRep& r, const RunConfig& config) {
  if (r.din() != m.din() || r.dout() != m.din()) {
    throw std::invalid_argument("r must act on the input algebra of m");
  }
  SchemeBoundReport report;
  const FactoredOperator omega = max_entangled_projector(m.din());
  const MapRep id_minus_r = from_choi(
      FactoredOperator({m.din(), m.din()}, omega.data() - r.choi().data()));
  report.id_minus_r = diamond_interval(id_minus_r, config);
  report.m_norm = diamond_interval(m, config);
  report.bound = report.id_minus_r.upper * report.m_norm.upper;
  report.dcp = d_cp(m);
  report.hypothesis_probe = min_product_overlap(tensor(r, m).choi(), 1, config);
  report.hypothesis_refuted =
      report.hypothesis_probe.certified == Certification::RefutationCertified;
  return report;
}

}  // namespace tspm
