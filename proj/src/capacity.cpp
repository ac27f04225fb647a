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

#include "tspm/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tspm/parallel.hpp"
#include "tspm/rng.hpp"

namespace tspm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix herm(const Matrix& a) { return (a + a.adjoint()) / 2.0; }

// tr_2 of an (a*b) x (a*b) matrix viewed as a x a blocks of side b.
Matrix trace_out_second(const Matrix& m, int a, int b) {
  Matrix out(a, a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      out(i, j) = m.block(static_cast<Eigen::Index>(i) * b, static_cast<Eigen::Index>(j) * b, b, b)
                      .trace();
  return out;
}

struct SeesawState {
  Matrix sqrt_rho;
  Matrix sqrt_sigma;
  double value = 0.0;
  bool converged = false;
};

// One see-saw run for the diamond-norm lower bound. U-updates come from the
// SVD of M = (sqrt(rho) (x) 1) J (sqrt(sigma) (x) 1); the sqrt factors are
// refreshed from the positive part of the matched Hermitian contraction.
SeesawState diamond_seesaw(const Matrix& j, int din, int dout, Matrix sqrt_rho,
                           Matrix sqrt_sigma, int max_iter, double tolerance) {
  SeesawState st;
  st.sqrt_rho = std::move(sqrt_rho);
  st.sqrt_sigma = std::move(sqrt_sigma);
  const Matrix id_out = Matrix::Identity(dout, dout);
  double value = 0.0;
  bool have_value = false;
  for (int it = 0; it < max_iter; ++it) {
    const Matrix m = kron_matrix(st.sqrt_rho, id_out) * j * kron_matrix(st.sqrt_sigma, id_out);
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double next = svd.singularValues().sum();
    const Matrix u = svd.matrixU() * svd.matrixV().adjoint();

    if (have_value && std::abs(next - value) <= tolerance * std::max(1.0, std::abs(value))) {
      value = next;
      st.converged = true;
      break;
    }
    value = next;
    have_value = true;

    const Matrix k_rho = trace_out_second(j * kron_matrix(st.sqrt_sigma, id_out) * u.adjoint(),
                                          din, dout);
    Eigen::SelfAdjointEigenSolver<Matrix> er(herm(k_rho));
    RealVector wp = er.eigenvalues().cwiseMax(0.0);
    if (wp.sum() <= 0.0) break;
    Matrix s = er.eigenvectors() * wp.asDiagonal() * er.eigenvectors().adjoint();
    st.sqrt_rho = s / s.norm();

    const Matrix k_sigma = trace_out_second(u.adjoint() * kron_matrix(st.sqrt_rho, id_out) * j,
                                            din, dout);
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm(k_sigma));
    RealVector wq = es.eigenvalues().cwiseMax(0.0);
    if (wq.sum() <= 0.0) break;
    Matrix q = es.eigenvectors() * wq.asDiagonal() * es.eigenvectors().adjoint();
    st.sqrt_sigma = q / q.norm();
  }
  const Matrix m = kron_matrix(st.sqrt_rho, id_out) * j * kron_matrix(st.sqrt_sigma, id_out);
  Eigen::BDCSVD<Matrix> svd(m);
  st.value = svd.singularValues().sum();
  return st;
}

double log2_checked(double x) { return std::log2(x); }

}  // namespace

NormInterval diamond_interval(const MapRep& m, const RunConfig& config) {
  config.validate();
  if (!is_hermiticity_preserving(m)) {
    throw std::invalid_argument("diamond_interval needs a hermiticity-preserving map");
  }
  const int din = m.din(), dout = m.dout();
  const HermitianEig eig = eig_hermitian(m.choi());
  const double scale = std::max(std::abs(eig.eigenvalues(0)),
                                std::abs(eig.eigenvalues(eig.eigenvalues.size() - 1)));

  NormInterval interval;
  if (eig.eigenvalues(0) >= -tol::psd * std::max(1.0, scale)) {
    // CP: ||L||_diamond = ||L*(1)||_inf, achieved at the conjugated top
    // eigenvector of L*(1) on both sides.
    const Matrix w = herm(adjoint_at_identity(m));
    Eigen::SelfAdjointEigenSolver<Matrix> ew(w);
    const double norm = std::max(std::abs(ew.eigenvalues()(0)),
                                 std::abs(ew.eigenvalues()(ew.eigenvalues().size() - 1)));
    interval.lower = norm;
    interval.upper = norm;
    const Vector top = ew.eigenvectors().col(ew.eigenvalues().size() - 1).conjugate();
    interval.rho_witness = top * top.adjoint();
    interval.sigma_witness = interval.rho_witness;
    interval.method_upper = UpperMethod::CPClosedForm;
    return interval;
  }

  // Eigensign split C = C+ - C-; each part is CP, so the triangle inequality
  // gives upper = ||L+*(1)|| + ||L-*(1)||.
  const Eigen::Index n = eig.eigenvalues.size();
  Matrix cpos = Matrix::Zero(n, n), cneg = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector v = eig.eigenvectors.col(i);
    if (eig.eigenvalues(i) >= 0.0)
      cpos += eig.eigenvalues(i) * (v * v.adjoint()).eval();
    else
      cneg -= eig.eigenvalues(i) * (v * v.adjoint()).eval();
  }
  const double up_pos = op_norm(static_cast<double>(din) *
                                trace_out_second(cpos, din, dout).transpose());
  const double up_neg = op_norm(static_cast<double>(din) *
                                trace_out_second(cneg, din, dout).transpose());
  interval.upper = up_pos + up_neg;
  interval.method_upper = UpperMethod::CPDecomposition;

  const Matrix j = static_cast<double>(din) * m.choi().data();
  const int runs = config.restarts + 1;  // deterministic maximally-mixed start first
  std::vector<SeesawState> states(static_cast<std::size_t>(runs));
  parallel_for_index(runs, [&](int r) {
    Matrix sr, ss;
    if (r == 0) {
      sr = Matrix::Identity(din, din) / std::sqrt(static_cast<double>(din));
      ss = sr;
    } else {
      Rng rng(config.seed + static_cast<std::uint64_t>(r));
      const Vector a = rng.unit_ket(din);
      const Vector b = rng.unit_ket(din);
      sr = a * a.adjoint();
      ss = b * b.adjoint();
    }
    states[static_cast<std::size_t>(r)] =
        diamond_seesaw(j, din, dout, std::move(sr), std::move(ss), config.max_iter, config.tol);
  });

  int best = 0;
  for (int r = 1; r < runs; ++r) {
    if (states[static_cast<std::size_t>(r)].value > states[static_cast<std::size_t>(best)].value)
      best = r;
  }
  const SeesawState& win = states[static_cast<std::size_t>(best)];
  interval.lower = win.value;
  interval.rho_witness = win.sqrt_rho * win.sqrt_rho.adjoint();
  interval.sigma_witness = win.sqrt_sigma * win.sqrt_sigma.adjoint();
  return interval;
}

BoundReport transposition_bound(const MapRep& t, const RunConfig& config) {
  if (!is_cp(t) || !is_trace_preserving(t)) {
    throw PreconditionError("transposition_bound needs a quantum channel");
  }
  const MapRep theta_t = compose(transpose_map(t.dout()), t);
  const NormInterval interval = diamond_interval(theta_t, config);
  BoundReport report;
  report.formula_id = BoundFormula::Transposition;
  report.constituents["theta_compose_channel"] = interval;
  report.bound_value = log2_checked(interval.upper);
  return report;
}

BoundReport capacity_bound_general(const MapRep& t, const MapRep& p, const RunConfig& config) {
  if (!is_cp(t) || !is_trace_preserving(t)) {
    throw PreconditionError("capacity_bound_general needs a channel as first argument");
  }
  if (t.dout() != p.dout()) {
    throw std::invalid_argument("channel and map must share the output dimension");
  }
  if (!is_hermiticity_preserving(p)) {
    throw PreconditionError("capacity_bound_general needs a hermiticity-preserving map");
  }
  if (!is_unital(p, 1e-8)) {
    throw PreconditionError("capacity_bound_general needs a unital map");
  }
  const MapRep p_inv = right_inverse(p);  // throws PreconditionError if not surjective
  const MapRep p_adj = adjoint(p);

  const NormInterval numerator = diamond_interval(compose(p_inv, t), config);
  const double p_adj_id = op_norm(herm(adjoint_at_identity(p)));
  const NormInterval denominator = diamond_interval(p_adj, config);

  BoundReport report;
  report.formula_id = BoundFormula::CapacityGeneral;
  report.constituents["pinv_compose_channel"] = numerator;
  report.constituents["p_adjoint_at_identity"] = NormInterval::exact(p_adj_id);
  report.constituents["p_adjoint_diamond"] = denominator;
  if (!is_cp(p) && !(is_ccp(p))) {
    report.hypothesis = "tensor-stable positivity of the auxiliary map (not certifiable)";
  }
  const double den = log2_checked(denominator.lower);
  if (!(den > 0.0)) {
    report.vacuous = true;
    report.bound_value = kInf;
    return report;
  }
  report.bound_value =
      log2_checked(numerator.upper * p_adj_id) * log2_checked(static_cast<double>(t.dout())) / den;
  return report;
}

BoundReport capacity_bound_left(const MapRep& t, const MapRep& p, const RunConfig& config) {
  if (!is_cp(t) || !is_trace_preserving(t)) {
    throw PreconditionError("capacity_bound_left needs a channel as first argument");
  }
  if (t.din() != p.din()) {
    throw std::invalid_argument("channel and map must share the input dimension");
  }
  if (!is_trace_preserving(p, 1e-8)) {
    throw PreconditionError("capacity_bound_left needs a trace-preserving map");
  }
  const MapRep p_inv = left_inverse(p);
  const MapRep p_adj = adjoint(p);

  const NormInterval numerator = diamond_interval(compose(t, p_inv), config);
  const double p_at_id = op_norm(herm(p.apply(Matrix::Identity(p.din(), p.din()))));
  const NormInterval p_adj_norm = diamond_interval(p_adj, config);

  BoundReport report;
  report.formula_id = BoundFormula::CapacityLeft;
  report.constituents["channel_compose_pinv"] = numerator;
  report.constituents["p_at_identity"] = NormInterval::exact(p_at_id);
  report.constituents["p_adjoint_diamond"] = p_adj_norm;
  if (!is_cp(p) && !(is_ccp(p))) {
    report.hypothesis = "tensor-stable positivity of the auxiliary map (not certifiable)";
  }
  const double den = log2_checked(p_adj_norm.lower / p_at_id);
  if (!(den > 0.0)) {
    report.vacuous = true;
    report.bound_value = kInf;
    return report;
  }
  report.bound_value =
      log2_checked(numerator.upper) * log2_checked(static_cast<double>(t.din())) / den;
  return report;
}

TwoWayErrorReport two_way_error_report(const MapRep& t, int m, double n_dim,
                                       const RunConfig& config) {
  if (m < 1 || n_dim < 1.0) throw std::invalid_argument("two-way scheme needs m >= 1, N >= 1");
  if (!is_cp(t) || !is_trace_preserving(t)) {
    throw PreconditionError("two_way_error_bound needs a quantum channel");
  }
  const NormInterval interval =
      diamond_interval(compose(transpose_map(t.dout()), t), config);
  TwoWayErrorReport report;
  report.theta_t = interval;
  report.floor_certified =
      std::max(0.0, 1.0 - std::pow(interval.upper, static_cast<double>(m)) / n_dim);
  report.floor_optimistic =
      std::max(0.0, 1.0 - std::pow(interval.lower, static_cast<double>(m)) / n_dim);
  return report;
}

double two_way_error_bound(const MapRep& t, int m, double n_dim, const RunConfig& config) {
  return two_way_error_report(t, m, n_dim, config).floor_certified;
}

double strong_converse_q2(const MapRep& t, double rate, int m, const RunConfig& config) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const NormInterval interval =
      diamond_interval(compose(transpose_map(t.dout()), t), config);
  const double log_floor =
      static_cast<double>(m) * (log2_checked(interval.upper) - rate);
  const double floor = 1.0 - std::exp2(log_floor);
  return std::clamp(floor, 0.0, 1.0);
}

BoundReport strong_converse_rate_ts(const MapRep& t, const MapRep& p, const RunConfig& config) {
  if (!is_cp(t) || !is_trace_preserving(t)) {
    throw PreconditionError("strong_converse_rate_ts needs a channel as first argument");
  }
  if (t.dout() != p.dout()) {
    throw std::invalid_argument("channel and map must share the output dimension");
  }
  if (!is_unital(p, 1e-8)) {
    throw PreconditionError("strong_converse_rate_ts needs a unital map");
  }
  const MapRep p_inv = right_inverse(p);
  const MapRep p_adj = adjoint(p);

  const NormInterval numerator = diamond_interval(compose(p_inv, t), config);
  const double p_adj_id = op_norm(herm(adjoint_at_identity(p)));
  // ||(p* (x) id)(omega)||_1 equals the trace norm of the Choi matrix of p*;
  // it is computed exactly, no see-saw needed.
  const double omega_norm = trace_norm(p_adj.choi());

  BoundReport report;
  report.formula_id = BoundFormula::StrongConverseRate;
  report.constituents["pinv_compose_channel"] = numerator;
  report.constituents["p_adjoint_at_identity"] = NormInterval::exact(p_adj_id);
  report.constituents["p_adjoint_omega_trace_norm"] = NormInterval::exact(omega_norm);
  if (!is_cp(p) && !(is_ccp(p))) {
    report.hypothesis = "tensor-stable positivity of the auxiliary map (not certifiable)";
  }
  const double den = log2_checked(omega_norm);
  if (!(den > 0.0)) {
    report.vacuous = true;
    report.bound_value = kInf;
    return report;
  }
  report.bound_value =
      log2_checked(numerator.upper * p_adj_id) * log2_checked(static_cast<double>(t.dout())) / den;
  return report;
}

double sc_error_floor(const MapRep& t, const MapRep& p, int n, int m, const RunConfig& config) {
  if (n < 1 || m < 1) throw std::invalid_argument("sc_error_floor needs n, m >= 1");
  const MapRep p_inv = right_inverse(p);
  const NormInterval numerator = diamond_interval(compose(p_inv, t), config);
  const double p_adj_id = op_norm(herm(adjoint_at_identity(p)));
  const double omega_norm = trace_norm(adjoint(p).choi());
  const double d2 = static_cast<double>(t.dout());

  const double floor = 1.0 - std::pow(d2, -2.0 * n) -
                       (std::pow(p_adj_id * numerator.upper, static_cast<double>(m)) + 2.0) /
                           std::pow(omega_norm, static_cast<double>(n));
  return std::clamp(floor, 0.0, 1.0);
}

OptReport lambda_min_out(const MapRep& t, const RunConfig& config) {
  config.validate();
  if (!is_cp(t)) throw PreconditionError("lambda_min_out needs a completely positive map");
  const MapRep t_adj = adjoint(t);

  struct Run {
    double value = 0.0;
    Vector input;
    Vector output;
    bool converged = false;
  };
  std::vector<Run> runs(static_cast<std::size_t>(config.restarts));
  parallel_for_index(config.restarts, [&](int r) {
    Rng rng(config.seed + static_cast<std::uint64_t>(r));
    Run run;
    run.input = rng.unit_ket(t.din());
    double value = 0.0;
    bool have = false;
    for (int it = 0; it < config.max_iter; ++it) {
      const Matrix out = herm(t.apply(run.input * run.input.adjoint()));
      Eigen::SelfAdjointEigenSolver<Matrix> eo(out);
      run.output = eo.eigenvectors().col(0);
      const double next = eo.eigenvalues()(0);
      const Matrix back = herm(t_adj.apply(run.output * run.output.adjoint()));
      Eigen::SelfAdjointEigenSolver<Matrix> eb(back);
      run.input = eb.eigenvectors().col(0);
      if (have && std::abs(next - value) <= config.tol * std::max(1.0, std::abs(value))) {
        value = next;
        run.converged = true;
        break;
      }
      value = next;
      have = true;
    }
    const Matrix out = herm(t.apply(run.input * run.input.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> eo(out);
    run.output = eo.eigenvectors().col(0);
    run.value = eo.eigenvalues()(0);
    runs[static_cast<std::size_t>(r)] = std::move(run);
  });

  int best = 0;
  int converged = 0;
  for (int r = 0; r < config.restarts; ++r) {
    if (runs[static_cast<std::size_t>(r)].converged) ++converged;
    if (runs[static_cast<std::size_t>(r)].value < runs[static_cast<std::size_t>(best)].value)
      best = r;
  }
  OptReport report;
  report.value = runs[static_cast<std::size_t>(best)].value;
  report.witness_left = Ket{runs[static_cast<std::size_t>(best)].input, {}};
  report.witness_right = Ket{runs[static_cast<std::size_t>(best)].output, {}};
  report.restarts_run = config.restarts;
  report.converged_fraction = static_cast<double>(converged) / config.restarts;
  report.iterations_max = config.max_iter;
  report.certified = Certification::HeuristicMinimum;
  return report;
}

AdditivityReport check_additivity_lmin(const MapRep& t_eb, const MapRep& s_cp,
                                       const RunConfig& config) {
  AdditivityReport report;
  report.left = lambda_min_out(t_eb, config);
  report.right = lambda_min_out(s_cp, config);
  report.joint = lambda_min_out(tensor(t_eb, s_cp), config);
  report.lhs = report.joint.value;
  report.rhs_t = report.left.value;
  report.rhs_s = report.right.value;
  report.deviation = std::abs(report.lhs - report.rhs_t * report.rhs_s);
  return report;
}

namespace {

// tr[H^p] with negative eigenvalues clipped; reports rank deficiency for
// negative exponents through `singular`.
double trace_power(const Matrix& h, double p, bool* singular) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm(h));
  const double lambda_max = eig.eigenvalues().maxCoeff();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    double lam = eig.eigenvalues()(i);
    if (lam < 0.0) lam = 0.0;
    if (p < 0.0 && lam <= 1e-13 * std::max(1.0, lambda_max)) {
      if (singular) *singular = true;
      return kInf;
    }
    if (lam > 0.0) acc += std::pow(lam, p);
  }
  return acc;
}

Matrix matrix_power_psd(const Matrix& h, double p) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm(h));
  RealVector powered(eig.eigenvalues().size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    const double lam = std::max(eig.eigenvalues()(i), 0.0);
    powered(i) = lam > 0.0 ? std::pow(lam, p) : 0.0;
  }
  return eig.eigenvectors() * powered.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

OptReport output_p_extreme(const MapRep& s, double p_exp, ExtremeSign sign,
                           const RunConfig& config) {
  config.validate();
  if (p_exp == 0.0) throw std::invalid_argument("the exponent must be non-zero");
  if (!is_cp(s)) throw PreconditionError("output_p_extreme needs a completely positive map");
  const MapRep s_adj = adjoint(s);
  const double orient = sign == ExtremeSign::Max ? 1.0 : -1.0;
  const int din = s.din();

  // Directions whose optimum is attained at pure states: tr X^p is convex for
  // p >= 1 and p < 0 (maximum at extreme points) and concave on (0, 1)
  // (minimum at extreme points).
  const bool convex = p_exp >= 1.0 || p_exp < 0.0;
  const bool pure_direction = (convex && sign == ExtremeSign::Max) ||
                              (!convex && sign == ExtremeSign::Min);

  struct Run {
    double value = 0.0;
    Matrix rho;
    bool converged = false;
    bool diverged = false;
  };

  auto objective = [&](const Matrix& rho, bool* singular) {
    return trace_power(s.apply(rho), p_exp, singular);
  };

  std::vector<Run> runs(static_cast<std::size_t>(config.restarts));
  parallel_for_index(config.restarts, [&](int r) {
    Rng rng(config.seed + static_cast<std::uint64_t>(r));
    Run run;
    if (pure_direction) {
      // Full-step eigenvector iteration; monotone by the curvature direction.
      Vector psi = rng.unit_ket(din);
      double value = 0.0;
      bool have = false;
      for (int it = 0; it < config.max_iter; ++it) {
        const Matrix rho = psi * psi.adjoint();
        bool singular = false;
        const double current = objective(rho, &singular);
        if (singular) {
          run.diverged = true;
          run.rho = rho;
          run.value = kInf;
          break;
        }
        const Matrix grad =
            herm(s_adj.apply(p_exp * matrix_power_psd(s.apply(rho), p_exp - 1.0)));
        Eigen::SelfAdjointEigenSolver<Matrix> eg(grad);
        psi = sign == ExtremeSign::Max ? eg.eigenvectors().col(din - 1)
                                       : eg.eigenvectors().col(0);
        if (have && std::abs(current - value) <= config.tol * std::max(1.0, std::abs(value))) {
          value = current;
          run.converged = true;
          break;
        }
        value = current;
        have = true;
      }
      if (!run.diverged) {
        run.rho = psi * psi.adjoint();
        bool singular = false;
        run.value = objective(run.rho, &singular);
        if (singular) run.diverged = true;
      }
    } else {
      // Projected gradient ascent/descent on rho = G G^dag / tr(G G^dag)
      // with a multiplicative step-size backoff.
      Matrix g = rng.ginibre(din, din);
      double eta = 0.1;
      auto rho_of = [&](const Matrix& gm) {
        const Matrix p = gm * gm.adjoint();
        return (p / p.trace().real()).eval();
      };
      bool singular = false;
      double value = objective(rho_of(g), &singular);
      if (singular) {
        // restart the interior iteration from the maximally mixed state
        g = Matrix::Identity(din, din);
        singular = false;
        value = objective(rho_of(g), &singular);
      }
      for (int it = 0; it < config.max_iter && !singular; ++it) {
        const double t = (g * g.adjoint()).trace().real();
        const Matrix rho = rho_of(g);
        const Matrix w =
            herm(s_adj.apply(p_exp * matrix_power_psd(s.apply(rho), p_exp - 1.0)));
        const Matrix grad =
            (w - Matrix::Identity(din, din) * (w * rho).trace().real()) * g / t;
        const Matrix candidate = g + orient * eta * grad;
        bool cand_singular = false;
        const double next = objective(rho_of(candidate), &cand_singular);
        if (!cand_singular && orient * (next - value) > 0.0) {
          g = candidate;
          if (orient * (next - value) <= config.tol * std::max(1.0, std::abs(value))) {
            value = next;
            run.converged = true;
            break;
          }
          value = next;
          eta *= 1.2;
        } else {
          eta *= 0.5;
          if (eta < 1e-12) {
            run.converged = true;
            break;
          }
        }
      }
      run.rho = rho_of(g);
      bool final_singular = false;
      run.value = objective(run.rho, &final_singular);
      run.diverged = final_singular;
    }
    runs[static_cast<std::size_t>(r)] = std::move(run);
  });

  int best = 0;
  int converged = 0;
  for (int r = 0; r < config.restarts; ++r) {
    const Run& cur = runs[static_cast<std::size_t>(r)];
    if (cur.converged) ++converged;
    const Run& b = runs[static_cast<std::size_t>(best)];
    const bool better = std::isinf(cur.value)
                            ? (sign == ExtremeSign::Max && !std::isinf(b.value))
                            : (std::isinf(b.value) ? sign == ExtremeSign::Min
                                                   : orient * (cur.value - b.value) > 0.0);
    if (better) best = r;
  }

  const Run& win = runs[static_cast<std::size_t>(best)];
  OptReport report;
  report.value = win.value;
  report.witness_state = win.rho;
  report.restarts_run = config.restarts;
  report.converged_fraction = static_cast<double>(converged) / config.restarts;
  report.iterations_max = config.max_iter;
  report.certified = Certification::HeuristicMinimum;
  report.diverged = win.diverged;
  return report;
}

}  // namespace tspm
